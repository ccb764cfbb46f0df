#include "quadrica/apolarity.hpp"

#include <stdexcept>

#include "quadrica/linalg.hpp"
#include "quadrica/quadric.hpp"

namespace quadrica {

namespace {

void check_families(const std::vector<FormFamily>& families) {
    if (families.empty())
        throw std::invalid_argument("apolarity: at least one family required");
    for (const auto& fam : families)
        if (fam.n != families[0].n)
            throw std::invalid_argument("apolarity: families live in different ambient spaces");
}

// Greedy independent subset over the prime field, in input order.
std::vector<std::size_t> independent_subset_mod_p(const FormFamily& fam,
                                                  const PrimeField& f) {
    std::vector<std::size_t> picked;
    std::vector<std::int64_t> flat;
    const std::size_t n1 = static_cast<std::size_t>(fam.n) + 1;
    for (std::size_t i = 0; i < fam.forms.size(); ++i) {
        std::vector<std::int64_t> trial = flat;
        trial.insert(trial.end(), fam.forms[i].begin(), fam.forms[i].end());
        FpMatrix m(picked.size() + 1, n1, f, std::move(trial));
        if (rank(m) == picked.size() + 1) {
            picked.push_back(i);
            flat.insert(flat.end(), fam.forms[i].begin(), fam.forms[i].end());
        }
    }
    return picked;
}

// Greedy independent subset over Q.
std::vector<std::size_t> independent_subset_exact(const FormFamily& fam) {
    std::vector<std::size_t> picked;
    std::vector<mpz_class> flat;
    const std::size_t n1 = static_cast<std::size_t>(fam.n) + 1;
    for (std::size_t i = 0; i < fam.forms.size(); ++i) {
        std::vector<mpz_class> trial = flat;
        for (std::int64_t v : fam.forms[i]) trial.emplace_back(v);
        IntMatrix m(picked.size() + 1, n1, std::move(trial));
        if (rank(m) == picked.size() + 1) {
            picked.push_back(i);
            for (std::int64_t v : fam.forms[i]) flat.emplace_back(v);
        }
    }
    return picked;
}

std::vector<std::uint64_t> reduce_form(const std::vector<std::int64_t>& form,
                                       const PrimeField& f) {
    std::vector<std::uint64_t> out(form.size());
    for (std::size_t i = 0; i < form.size(); ++i) out[i] = f.reduce(form[i]);
    return out;
}

// Integer coefficient vector of the product of two linear forms, in the
// fixed quadric monomial order.
std::vector<mpz_class> product_of_forms_exact(const std::vector<std::int64_t>& u,
                                              const std::vector<std::int64_t>& v) {
    const int n = static_cast<int>(u.size()) - 1;
    std::vector<mpz_class> c(quadric_length(n), mpz_class(0));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            mpz_class t = mpz_class(u[i]) * mpz_class(v[j]);
            if (i != j) t += mpz_class(u[j]) * mpz_class(v[i]);
            c[monomial_index(n, i, j)] = t;
        }
    return c;
}

struct ColumnRef {
    std::size_t family;
    std::size_t a; // local indices into the per-family form list used
    std::size_t b;
};

} // namespace

FormFamily::FormFamily(int ambient, std::vector<std::vector<std::int64_t>> fs)
    : n(ambient), forms(std::move(fs)) {
    if (n < 0) throw std::invalid_argument("FormFamily: negative ambient dimension");
    if (forms.empty()) throw std::invalid_argument("FormFamily: at least one form required");
    for (const auto& form : forms)
        if (form.size() != static_cast<std::size_t>(n) + 1)
            throw std::invalid_argument("FormFamily: form has wrong coefficient count");
}

LinearSpace annihilator_space(const FormFamily& fam, const PrimeField& f) {
    const std::size_t n1 = static_cast<std::size_t>(fam.n) + 1;
    std::vector<std::int64_t> cols(n1 * fam.forms.size());
    for (std::size_t j = 0; j < fam.forms.size(); ++j)
        for (std::size_t i = 0; i < n1; ++i)
            cols[i * fam.forms.size() + j] = fam.forms[j][i];
    FpMatrix m(n1, fam.forms.size(), f, std::move(cols));
    FpMatrix basis = column_space_basis(m);
    if (basis.cols() == 0)
        throw std::invalid_argument("annihilator_space: every form in the family is zero");
    return LinearSpace(std::move(basis));
}

Configuration annihilator_configuration(const std::vector<FormFamily>& families,
                                        const PrimeField& f) {
    check_families(families);
    const int n = families[0].n;
    std::vector<LinearSpace> spaces;
    for (const auto& fam : families) {
        LinearSpace s = annihilator_space(fam, f);
        if (s.dim() == n)
            throw std::invalid_argument(
                "annihilator_configuration: a family spans the whole dual space");
        bool duplicate = false;
        for (const auto& prev : spaces)
            if (same_subspace(prev, s)) { duplicate = true; break; }
        if (!duplicate) spaces.push_back(std::move(s));
    }
    return Configuration(n, std::move(spaces), f);
}

StarResult star_holds_d2(const std::vector<FormFamily>& families,
                         const PrimeField& f) {
    check_families(families);
    const int n = families[0].n;
    const std::size_t len = quadric_length(n);

    std::vector<std::vector<std::uint64_t>> columns;
    for (const auto& fam : families) {
        std::vector<std::vector<std::uint64_t>> reduced;
        reduced.reserve(fam.forms.size());
        for (const auto& form : fam.forms) reduced.push_back(reduce_form(form, f));
        for (std::size_t a = 0; a < reduced.size(); ++a)
            for (std::size_t b = a; b < reduced.size(); ++b)
                columns.push_back(product_of_forms(reduced[a], reduced[b], f).coeffs);
    }

    std::vector<std::uint64_t> data(len * columns.size());
    for (std::size_t r = 0; r < len; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            data[r * columns.size() + c] = columns[c][r];
    FpMatrix a = FpMatrix::from_residues(len, columns.size(), f, std::move(data));
    std::int64_t defect = static_cast<std::int64_t>(len) - static_cast<std::int64_t>(rank(a));
    return {defect == 0, defect};
}

StarResult star_holds_d2_exact(const std::vector<FormFamily>& families) {
    check_families(families);
    const int n = families[0].n;
    const std::size_t len = quadric_length(n);

    std::vector<std::vector<mpz_class>> columns;
    for (const auto& fam : families)
        for (std::size_t a = 0; a < fam.forms.size(); ++a)
            for (std::size_t b = a; b < fam.forms.size(); ++b)
                columns.push_back(product_of_forms_exact(fam.forms[a], fam.forms[b]));

    std::vector<mpz_class> data(len * columns.size());
    for (std::size_t r = 0; r < len; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            data[r * columns.size() + c] = columns[c][r];
    IntMatrix a(len, columns.size(), std::move(data));
    std::int64_t defect = static_cast<std::int64_t>(len) - static_cast<std::int64_t>(rank(a));
    return {defect == 0, defect};
}

std::optional<PrimeWitness> decompose_quadric(const std::vector<std::int64_t>& target,
                                              const std::vector<FormFamily>& families,
                                              const PrimeField& f) {
    check_families(families);
    if (!f.odd())
        throw std::invalid_argument("decompose_quadric: modulus 2 not supported "
                                    "(symmetric witness matrices need 1/2)");
    const int n = families[0].n;
    const std::size_t len = quadric_length(n);
    if (target.size() != len)
        throw std::invalid_argument("decompose_quadric: target has wrong coefficient count");

    // Columns: pairwise products of an independent subset of each family.
    std::vector<std::vector<std::size_t>> independent;
    std::vector<std::vector<std::vector<std::uint64_t>>> reduced; // per family, selected forms
    std::vector<std::vector<std::uint64_t>> columns;
    std::vector<ColumnRef> refs;
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
        auto picked = independent_subset_mod_p(families[fi], f);
        std::vector<std::vector<std::uint64_t>> forms;
        forms.reserve(picked.size());
        for (std::size_t idx : picked) forms.push_back(reduce_form(families[fi].forms[idx], f));
        for (std::size_t a = 0; a < forms.size(); ++a)
            for (std::size_t b = a; b < forms.size(); ++b) {
                columns.push_back(product_of_forms(forms[a], forms[b], f).coeffs);
                refs.push_back({fi, a, b});
            }
        independent.push_back(std::move(picked));
        reduced.push_back(std::move(forms));
    }

    std::vector<std::uint64_t> data(len * columns.size());
    for (std::size_t r = 0; r < len; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            data[r * columns.size() + c] = columns[c][r];
    FpMatrix a = FpMatrix::from_residues(len, columns.size(), f, std::move(data));

    std::vector<std::uint64_t> rhs(len);
    for (std::size_t i = 0; i < len; ++i) rhs[i] = f.reduce(target[i]);
    auto x = solve(a, rhs);
    if (!x) return std::nullopt;

    const std::uint64_t half = f.inv(2);
    std::vector<std::vector<std::vector<std::uint64_t>>> grams;
    for (const auto& picked : independent)
        grams.emplace_back(picked.size(),
                           std::vector<std::uint64_t>(picked.size(), 0));
    for (std::size_t c = 0; c < refs.size(); ++c) {
        const auto& ref = refs[c];
        std::uint64_t v = (*x)[c];
        if (ref.a == ref.b) {
            grams[ref.family][ref.a][ref.a] = v;
        } else {
            std::uint64_t hv = f.mul(v, half);
            grams[ref.family][ref.a][ref.b] = hv;
            grams[ref.family][ref.b][ref.a] = hv;
        }
    }

    // Audit: re-expand sum_i z^T G_i z at the independent forms. The full
    // double sum over (a,b) needs no halving: the two off-diagonal mirror
    // terms each carry half the solved coefficient.
    std::vector<std::uint64_t> recon(len, 0);
    for (std::size_t fi = 0; fi < grams.size(); ++fi) {
        const auto& forms = reduced[fi];
        const auto& g = grams[fi];
        for (std::size_t a = 0; a < forms.size(); ++a)
            for (std::size_t b = 0; b < forms.size(); ++b) {
                if (g[a][b] == 0) continue;
                QuadricCoeffs prod = product_of_forms(forms[a], forms[b], f);
                for (std::size_t k = 0; k < len; ++k)
                    recon[k] = f.add(recon[k], f.mul(g[a][b], prod.coeffs[k]));
            }
    }
    for (std::size_t k = 0; k < len; ++k)
        if (recon[k] != rhs[k])
            throw std::logic_error("decompose_quadric: witness audit failed (internal error)");

    return PrimeWitness{f.modulus(), std::move(independent), std::move(grams), std::move(recon)};
}

std::optional<ExactWitness> decompose_quadric_exact(const std::vector<std::int64_t>& target,
                                                    const std::vector<FormFamily>& families) {
    check_families(families);
    const int n = families[0].n;
    const std::size_t len = quadric_length(n);
    if (target.size() != len)
        throw std::invalid_argument("decompose_quadric_exact: target has wrong coefficient count");

    std::vector<std::vector<std::size_t>> independent;
    std::vector<std::vector<mpz_class>> columns;
    std::vector<ColumnRef> refs;
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
        auto picked = independent_subset_exact(families[fi]);
        for (std::size_t a = 0; a < picked.size(); ++a)
            for (std::size_t b = a; b < picked.size(); ++b) {
                columns.push_back(product_of_forms_exact(families[fi].forms[picked[a]],
                                                         families[fi].forms[picked[b]]));
                refs.push_back({fi, a, b});
            }
        independent.push_back(std::move(picked));
    }

    std::vector<mpz_class> data(len * columns.size());
    for (std::size_t r = 0; r < len; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            data[r * columns.size() + c] = columns[c][r];
    IntMatrix a(len, columns.size(), std::move(data));

    std::vector<mpz_class> rhs(len);
    for (std::size_t i = 0; i < len; ++i) rhs[i] = target[i];
    auto x = solve(a, rhs);
    if (!x) return std::nullopt;

    std::vector<std::vector<std::vector<mpq_class>>> grams;
    for (const auto& picked : independent)
        grams.emplace_back(picked.size(),
                           std::vector<mpq_class>(picked.size(), mpq_class(0)));
    for (std::size_t c = 0; c < refs.size(); ++c) {
        const auto& ref = refs[c];
        if (ref.a == ref.b) {
            grams[ref.family][ref.a][ref.a] = (*x)[c];
        } else {
            mpq_class hv = (*x)[c] / 2;
            grams[ref.family][ref.a][ref.b] = hv;
            grams[ref.family][ref.b][ref.a] = hv;
        }
    }

    std::vector<mpq_class> recon(len, mpq_class(0));
    for (std::size_t fi = 0; fi < grams.size(); ++fi) {
        const auto& fam = families[fi];
        const auto& picked = independent[fi];
        const auto& g = grams[fi];
        for (std::size_t a = 0; a < picked.size(); ++a)
            for (std::size_t b = 0; b < picked.size(); ++b) {
                if (g[a][b] == 0) continue;
                auto prod = product_of_forms_exact(fam.forms[picked[a]], fam.forms[picked[b]]);
                for (std::size_t k = 0; k < len; ++k) {
                    if (prod[k] == 0) continue;
                    recon[k] += g[a][b] * mpq_class(prod[k]);
                }
            }
    }
    for (std::size_t k = 0; k < len; ++k)
        if (recon[k] != rhs[k])
            throw std::logic_error("decompose_quadric_exact: witness audit failed (internal error)");

    return ExactWitness{std::move(independent), std::move(grams), std::move(recon)};
}

} // namespace quadrica
