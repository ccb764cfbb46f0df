#include "quadrica/io.hpp"

#include <stdexcept>

namespace quadrica {

namespace {

std::vector<std::int64_t> int_vector(const ordered_json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string(what) + ": expected integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

} // namespace

Configuration configuration_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("prime") || !j.contains("spaces"))
        throw std::invalid_argument("configuration: need fields n, prime, spaces");
    const int n = j.at("n").get<int>();
    if (n < 0) throw std::invalid_argument("configuration: n must be >= 0");
    PrimeField f(j.at("prime").get<std::uint64_t>());
    if (!j.at("spaces").is_array() || j.at("spaces").empty())
        throw std::invalid_argument("configuration: spaces must be a nonempty array");

    std::vector<LinearSpace> spaces;
    for (const auto& sj : j.at("spaces")) {
        if (!sj.is_object() || !sj.contains("basis"))
            throw std::invalid_argument("configuration: each space needs a basis");
        const auto& basis = sj.at("basis");
        if (!basis.is_array() || basis.empty())
            throw std::invalid_argument("configuration: basis must be a nonempty array of rows");
        const std::size_t k = basis.size();
        const std::size_t n1 = static_cast<std::size_t>(n) + 1;
        // JSON rows are spanning points; internally they become span columns.
        std::vector<std::int64_t> entries(n1 * k);
        for (std::size_t c = 0; c < k; ++c) {
            auto row = int_vector(basis[c], "configuration basis row");
            if (row.size() != n1)
                throw std::invalid_argument("configuration: basis row must have n+1 entries");
            for (std::size_t r = 0; r < n1; ++r) entries[r * k + c] = row[r];
        }
        spaces.emplace_back(FpMatrix(n1, k, f, std::move(entries)));
    }
    return Configuration(n, std::move(spaces), f);
}

ordered_json configuration_to_json(const Configuration& c) {
    ordered_json j;
    j["n"] = c.ambient();
    j["prime"] = c.field().modulus();
    ordered_json spaces = ordered_json::array();
    for (const auto& s : c.spaces()) {
        ordered_json rows = ordered_json::array();
        for (std::size_t col = 0; col < s.span().cols(); ++col) {
            ordered_json row = ordered_json::array();
            for (std::size_t r = 0; r < s.span().rows(); ++r)
                row.push_back(s.span().at(r, col));
            rows.push_back(std::move(row));
        }
        spaces.push_back(ordered_json{{"basis", std::move(rows)}});
    }
    j["spaces"] = std::move(spaces);
    return j;
}

ordered_json report_to_json(const OracleReport& r) {
    ordered_json j;
    j["weight"] = ordered_json{{"n", r.weight.n()}, {"weights", r.weight.weights()}};
    j["prime"] = r.prime;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["per_trial_dims"] = r.per_trial_dims;
    j["oracle_dim"] = r.oracle_dim;
    j["formula_dim"] = r.formula_dim;
    j["agree"] = r.agree;
    return j;
}

ordered_json expectation_to_json(int n, const std::vector<int>& weights,
                                 const Expectation& e) {
    ordered_json j;
    j["n"] = n;
    j["weights"] = weights;
    j["case"] = std::string(to_string(e.label));
    j["tau"] = e.tau ? ordered_json(*e.tau) : ordered_json(nullptr);
    j["v"] = e.v ? ordered_json(*e.v) : ordered_json(nullptr);
    j["dim_I2"] = e.dim_I2;
    j["hf2"] = e.hf2;
    return j;
}

ordered_json fiber_report_to_json(int n, const std::vector<int>& weights,
                                  const FiberReport& r) {
    ordered_json j;
    j["n"] = n;
    j["weights"] = weights;
    j["r"] = r.r;
    j["family_dim"] = r.family_dim;
    j["fiber_over_one"] = r.fiber_over_one;
    j["deficiency"] = r.deficiency;
    j["lemma_applies"] = r.lemma_applies;
    return j;
}

DecompositionInput decomposition_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("families"))
        throw std::invalid_argument("decomposition: need fields n and families");
    DecompositionInput in;
    in.n = j.at("n").get<int>();
    if (in.n < 0) throw std::invalid_argument("decomposition: n must be >= 0");
    if (!j.at("families").is_array() || j.at("families").empty())
        throw std::invalid_argument("decomposition: families must be a nonempty array");
    for (const auto& fj : j.at("families")) {
        if (!fj.is_array() || fj.empty())
            throw std::invalid_argument("decomposition: each family is a nonempty array of forms");
        std::vector<std::vector<std::int64_t>> forms;
        for (const auto& form : fj) {
            auto coeffs = int_vector(form, "decomposition form");
            if (coeffs.size() != static_cast<std::size_t>(in.n) + 1)
                throw std::invalid_argument("decomposition: form must have n+1 coefficients");
            forms.push_back(std::move(coeffs));
        }
        in.families.emplace_back(in.n, std::move(forms));
    }
    if (j.contains("target") && !j.at("target").is_null()) {
        auto t = int_vector(j.at("target"), "decomposition target");
        if (t.size() != quadric_length(in.n))
            throw std::invalid_argument("decomposition: target must have C(n+2,2) coefficients");
        in.target = std::move(t);
    }
    return in;
}

ordered_json witness_to_json(const PrimeWitness& w) {
    ordered_json j;
    j["mode"] = "prime";
    j["prime"] = w.prime;
    ordered_json fams = ordered_json::array();
    for (std::size_t i = 0; i < w.grams.size(); ++i) {
        ordered_json fam;
        fam["independent_form_indices"] = w.independent[i];
        fam["gram"] = w.grams[i];
        fams.push_back(std::move(fam));
    }
    j["families"] = std::move(fams);
    j["reconstructed_target"] = w.reconstructed;
    return j;
}

std::string to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ordered_json witness_to_json(const ExactWitness& w) {
    ordered_json j;
    j["mode"] = "exact";
    ordered_json fams = ordered_json::array();
    for (std::size_t i = 0; i < w.grams.size(); ++i) {
        ordered_json fam;
        fam["independent_form_indices"] = w.independent[i];
        ordered_json g = ordered_json::array();
        for (const auto& row : w.grams[i]) {
            ordered_json jr = ordered_json::array();
            for (const auto& v : row) jr.push_back(to_string(v));
            g.push_back(std::move(jr));
        }
        fam["gram"] = std::move(g);
        fams.push_back(std::move(fam));
    }
    j["families"] = std::move(fams);
    ordered_json rt = ordered_json::array();
    for (const auto& v : w.reconstructed) rt.push_back(to_string(v));
    j["reconstructed_target"] = std::move(rt);
    return j;
}

} // namespace quadrica
