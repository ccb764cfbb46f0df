// quadrica: closed-form dimensions for the space of quadrics through a
// generic configuration of linear subspaces, an exact finite-field oracle
// that verifies them, and quadratic-form decomposition over prescribed
// families of linear forms.
//
// Exit codes: 0 success/agreement, 1 semantic negative (oracle mismatch,
// equality fails, no decomposition), 2 malformed input.

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "quadrica/apolarity.hpp"
#include "quadrica/formula.hpp"
#include "quadrica/io.hpp"
#include "quadrica/oracle.hpp"

namespace {

using quadrica::ordered_json;

constexpr std::uint64_t kDefaultPrime = quadrica::PrimeField::kDefaultPrime;

std::vector<int> parse_weights(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size() || value < 0)
            throw std::invalid_argument("weights must be comma-separated non-negative integers");
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("weights must be non-empty");
    return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

unsigned sweep_threads() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("QUADRICA_THREADS");
    if (!env) return hw;
    unsigned v = 0;
    auto sv = std::string_view(env);
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc() || ptr != sv.data() + sv.size()) return hw;
    return v == 0 ? hw : v;
}

// ---------------------------------------------------------------- expect --

int run_expect(int n, const std::string& weights, bool json) {
    quadrica::WeightVector w(n, parse_weights(weights));
    quadrica::Expectation e = quadrica::expected_dim_I2(w);
    if (json) {
        emit(quadrica::expectation_to_json(w.n(), w.weights(), e));
    } else {
        std::cout << "case: " << quadrica::to_string(e.label) << "\n";
        if (e.tau) std::cout << "tau: " << *e.tau << "\n";
        if (e.v) std::cout << "v: " << *e.v << "\n";
        std::cout << "dim(I_2) = " << e.dim_I2 << "\n";
        std::cout << "HF(2) = " << e.hf2 << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- verify --

int run_verify(int n, const std::string& weights, int trials, std::uint64_t prime,
               std::uint64_t seed, bool json) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    quadrica::WeightVector w(n, parse_weights(weights));
    quadrica::OracleReport r = quadrica::generic_dim_I2(w, trials, prime, seed);
    if (json) {
        emit(quadrica::report_to_json(r));
    } else {
        std::cout << "weights: n=" << w.n() << " m=(";
        for (int i = 0; i < w.s(); ++i) std::cout << (i ? "," : "") << w.weight(i);
        std::cout << ")\n";
        std::cout << "formula dim(I_2) = " << r.formula_dim << "\n";
        std::cout << "oracle dims:";
        for (auto d : r.per_trial_dims) std::cout << " " << d;
        std::cout << " (min " << r.oracle_dim << ")\n";
        std::cout << "agree: " << (r.agree ? "yes" : "NO") << "\n";
    }
    return r.agree ? 0 : 1;
}

// ----------------------------------------------------------------- sweep --

struct SweepRow {
    int n;
    std::vector<int> weights;
    quadrica::Expectation expectation;
    std::int64_t oracle_dim;
    bool agree;
};

void enumerate_weight_vectors(int n_max, int s_max,
                              std::vector<std::pair<int, std::vector<int>>>& out) {
    for (int n = 2; n <= n_max; ++n) {
        for (int s = 1; s <= s_max; ++s) {
            std::vector<int> stack;
            // Non-increasing tuples over [0, n-1], descending lexicographic.
            auto rec = [&](auto&& self, int remaining, int bound) -> void {
                if (remaining == 0) {
                    out.emplace_back(n, stack);
                    return;
                }
                for (int m = bound; m >= 0; --m) {
                    stack.push_back(m);
                    self(self, remaining - 1, m);
                    stack.pop_back();
                }
            };
            rec(rec, s, n - 1);
        }
    }
}

std::string join_weights(const std::vector<int>& ws, char sep) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(ws[i]);
    }
    return s;
}

int run_sweep(int n_max, int s_max, int trials, std::uint64_t prime,
              std::uint64_t seed, const std::string& out_path,
              const std::string& format) {
    if (n_max < 2) throw std::invalid_argument("n-max must be >= 2");
    if (s_max < 1) throw std::invalid_argument("s-max must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");

    std::vector<std::pair<int, std::vector<int>>> items;
    enumerate_weight_vectors(n_max, s_max, items);

    std::vector<SweepRow> rows(items.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= items.size()) return;
            quadrica::WeightVector w(items[i].first, items[i].second);
            quadrica::OracleReport r = quadrica::generic_dim_I2(w, trials, prime, seed);
            rows[i] = {w.n(), w.weights(), quadrica::expected_dim_I2(w), r.oracle_dim,
                       r.agree};
        }
    };
    unsigned nthreads = std::min<std::size_t>(sweep_threads(), items.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t mismatches = 0;
    for (const auto& row : rows)
        if (!row.agree) ++mismatches;

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (out_path != "-") {
        file.open(out_path);
        if (!file) throw std::invalid_argument("cannot open output path: " + out_path);
        os = &file;
    }

    if (format == "csv") {
        *os << "n,s,weights,case,tau,v,expected_dim,oracle_dim,agree,trials,prime,seed\n";
        for (const auto& row : rows) {
            const auto& e = row.expectation;
            *os << row.n << ',' << row.weights.size() << ',' << join_weights(row.weights, ';')
                << ',' << quadrica::to_string(e.label) << ','
                << (e.tau ? std::to_string(*e.tau) : std::string()) << ','
                << (e.v ? std::to_string(*e.v) : std::string()) << ',' << e.dim_I2 << ','
                << row.oracle_dim << ',' << (row.agree ? "true" : "false") << ',' << trials
                << ',' << prime << ',' << seed << "\n";
        }
    } else {
        ordered_json doc;
        doc["params"] = ordered_json{{"n_max", n_max}, {"s_max", s_max},      {"trials", trials},
                                     {"prime", prime}, {"seed", seed}};
        ordered_json jrows = ordered_json::array();
        for (const auto& row : rows) {
            const auto& e = row.expectation;
            ordered_json jr;
            jr["n"] = row.n;
            jr["s"] = row.weights.size();
            jr["weights"] = row.weights;
            jr["case"] = std::string(quadrica::to_string(e.label));
            jr["tau"] = e.tau ? ordered_json(*e.tau) : ordered_json(nullptr);
            jr["v"] = e.v ? ordered_json(*e.v) : ordered_json(nullptr);
            jr["expected_dim"] = e.dim_I2;
            jr["oracle_dim"] = row.oracle_dim;
            jr["agree"] = row.agree;
            jrows.push_back(std::move(jr));
        }
        doc["rows"] = std::move(jrows);
        doc["total"] = rows.size();
        doc["mismatches"] = mismatches;
        *os << doc.dump(2) << "\n";
    }
    if (os == &file) file.close();

    std::cerr << "sweep: " << rows.size() << " weight vectors, " << mismatches
              << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

// --------------------------------------------------- fano/rankbound/fiber --

int run_fano(int m, int n, bool json) {
    auto d = quadrica::fano_dim(m, n);
    if (json) {
        ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["dim"] = d ? ordered_json(*d) : ordered_json(nullptr);
        emit(j);
    } else {
        if (d)
            std::cout << *d << "\n";
        else
            std::cout << "empty\n";
    }
    return 0;
}

int run_rankbound(int n, int r, bool json) {
    int m = quadrica::max_plane_dim_on_rank_r(n, r);
    if (json) {
        emit(ordered_json{{"n", n}, {"r", r}, {"max_plane_dim", m}});
    } else {
        std::cout << m << "\n";
    }
    return 0;
}

int run_fiber(int n, const std::string& weights, int r, bool json) {
    quadrica::WeightVector w(n, parse_weights(weights));
    quadrica::FiberReport report = quadrica::fiber_deficiency(w, r);
    if (json) {
        emit(quadrica::fiber_report_to_json(w.n(), w.weights(), report));
    } else {
        std::cout << "r = " << report.r << "\n";
        std::cout << "rank-r family dim = " << report.family_dim << "\n";
        std::cout << "fiber over one quadric = " << report.fiber_over_one << "\n";
        std::cout << "deficiency = " << report.deficiency << "\n";
        std::cout << "lemma applies: " << (report.lemma_applies ? "yes" : "no") << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- decompose --

int run_decompose(const std::string& input_path, bool exact, std::uint64_t prime,
                  bool json) {
    std::ifstream in(input_path);
    if (!in) throw std::invalid_argument("cannot open input file: " + input_path);
    ordered_json parsed;
    try {
        in >> parsed;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
    quadrica::DecompositionInput spec = quadrica::decomposition_from_json(parsed);
    quadrica::PrimeField f(prime);

    if (!spec.target) {
        quadrica::StarResult verdict = quadrica::star_holds_d2(spec.families, f);
        if (exact) {
            quadrica::StarResult exact_verdict = quadrica::star_holds_d2_exact(spec.families);
            if (exact_verdict.defect != verdict.defect)
                std::cerr << "note: prime-field defect " << verdict.defect
                          << " disagrees with exact defect " << exact_verdict.defect
                          << "; exact verdict wins\n";
            verdict = exact_verdict;
        }
        if (json) {
            ordered_json j;
            j["n"] = spec.n;
            j["mode"] = exact ? "exact" : "prime";
            j["holds"] = verdict.holds;
            j["defect"] = verdict.defect;
            emit(j);
        } else {
            std::cout << "holds: " << (verdict.holds ? "true" : "false") << "\n";
            std::cout << "defect: " << verdict.defect << "\n";
        }
        return verdict.holds ? 0 : 1;
    }

    if (exact) {
        auto prime_witness = quadrica::decompose_quadric(*spec.target, spec.families, f);
        auto exact_witness = quadrica::decompose_quadric_exact(*spec.target, spec.families);
        if (prime_witness.has_value() != exact_witness.has_value())
            std::cerr << "note: prime-field verdict ("
                      << (prime_witness ? "decomposable" : "not decomposable")
                      << ") disagrees with exact verdict; exact verdict wins\n";
        if (!exact_witness) {
            if (json)
                emit(ordered_json{{"mode", "exact"}, {"decomposition", nullptr}});
            else
                std::cout << "no decomposition\n";
            return 1;
        }
        emit(quadrica::witness_to_json(*exact_witness));
        return 0;
    }

    auto witness = quadrica::decompose_quadric(*spec.target, spec.families, f);
    if (!witness) {
        if (json)
            emit(ordered_json{{"mode", "prime"}, {"decomposition", nullptr}});
        else
            std::cout << "no decomposition\n";
        return 1;
    }
    emit(quadrica::witness_to_json(*witness));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadrics through generic configurations of linear spaces"};
    app.require_subcommand(1);

    int n = 0, m = 0, r = 0, trials = 3, n_max = 2, s_max = 1;
    std::uint64_t prime = kDefaultPrime, seed = 0;
    std::string weights, out_path = "-", format = "csv", input_path;
    bool json = false, exact = false;

    auto* expect = app.add_subcommand("expect", "closed-form dim(I_2) for a weight vector");
    expect->add_option("--n", n, "ambient projective dimension")->required();
    expect->add_option("--weights", weights, "comma-separated component dimensions")->required();
    expect->add_flag("--json", json, "emit a single JSON document");

    auto* verify = app.add_subcommand("verify", "compare the formula against the exact oracle");
    verify->add_option("--n", n)->required();
    verify->add_option("--weights", weights)->required();
    verify->add_option("--trials", trials, "random samples (min over trials)");
    verify->add_option("--prime", prime, "field modulus");
    verify->add_option("--seed", seed, "base seed");
    verify->add_flag("--json", json);

    auto* sweep = app.add_subcommand("sweep", "formula/oracle agreement over all weight vectors");
    sweep->add_option("--n-max", n_max, "largest ambient dimension")->required();
    sweep->add_option("--s-max", s_max, "largest component count")->required();
    sweep->add_option("--trials", trials);
    sweep->add_option("--prime", prime);
    sweep->add_option("--seed", seed);
    sweep->add_option("--out", out_path, "output path (- for stdout)");
    sweep->add_option("--format", format, "csv or json");

    auto* fano = app.add_subcommand("fano", "dimension of m-planes on a smooth quadric in P^n");
    fano->add_option("--m", m)->required();
    fano->add_option("--n", n)->required();
    fano->add_flag("--json", json);

    auto* rankbound = app.add_subcommand("rankbound", "largest plane on a rank-r quadric in P^n");
    rankbound->add_option("--n", n)->required();
    rankbound->add_option("--r", r)->required();
    rankbound->add_flag("--json", json);

    auto* fiber = app.add_subcommand("fiber", "fiber-dimension audit for rank-r quadrics");
    fiber->add_option("--n", n)->required();
    fiber->add_option("--weights", weights)->required();
    fiber->add_option("--r", r)->required();
    fiber->add_flag("--json", json);

    auto* decompose = app.add_subcommand("decompose", "quadratic decomposition over form families");
    decompose->add_option("--input", input_path, "decomposition JSON file")->required();
    decompose->add_flag("--exact", exact, "exact integer arithmetic for the final verdict");
    decompose->add_option("--prime", prime, "modulus for the prime-field pass");
    decompose->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(expect)) return run_expect(n, weights, json);
        if (app.got_subcommand(verify))
            return run_verify(n, weights, trials, prime, seed, json);
        if (app.got_subcommand(sweep))
            return run_sweep(n_max, s_max, trials, prime, seed, out_path, format);
        if (app.got_subcommand(fano)) return run_fano(m, n, json);
        if (app.got_subcommand(rankbound)) return run_rankbound(n, r, json);
        if (app.got_subcommand(fiber)) return run_fiber(n, weights, r, json);
        if (app.got_subcommand(decompose)) return run_decompose(input_path, exact, prime, json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
