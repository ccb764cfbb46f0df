#include <doctest.h>

#include <functional>

#include "quadrica/formula.hpp"
#include "quadrica/rng.hpp"

using namespace quadrica;

namespace {

// All weight vectors with 2 <= n <= n_max, 1 <= s <= s_max, weights
// non-increasing over [0, n-1].
void for_each_weight_vector(int n_max, int s_max,
                            const std::function<void(const WeightVector&)>& fn) {
    for (int n = 2; n <= n_max; ++n)
        for (int s = 1; s <= s_max; ++s) {
            std::vector<int> stack;
            std::function<void(int, int)> rec = [&](int remaining, int bound) {
                if (remaining == 0) {
                    fn(WeightVector(n, stack));
                    return;
                }
                for (int m = bound; m >= 0; --m) {
                    stack.push_back(m);
                    rec(remaining - 1, m);
                    stack.pop_back();
                }
            };
            rec(s, n - 1);
        }
}

} // namespace

TEST_CASE("tau and v by direct substitution") {
    CHECK(tau_v(WeightVector(4, {3, 1})) == std::pair<int, int>{2, 1});
    CHECK(tau_v(WeightVector(9, {5, 5, 5})) == std::pair<int, int>{3, 4});
    CHECK(tau_v(WeightVector(7, {4, 3, 3, 3})) == std::pair<int, int>{4, 3});
    CHECK_THROWS_AS(tau_v(WeightVector(4, {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(tau_v(WeightVector(4, {3})), std::invalid_argument);
}

TEST_CASE("disjoint dimension formula") {
    CHECK(disjoint_dim(WeightVector(3, {1, 1, 1, 1})) == 0);
    CHECK(disjoint_dim(WeightVector(4, {1, 1})) == 9);
    CHECK(disjoint_dim(WeightVector(5, {2})) == 15);
    CHECK_THROWS_AS(disjoint_dim(WeightVector(3, {2, 2})), std::invalid_argument);
}

TEST_CASE("case dispatch on the worked examples") {
    Expectation e = expected_dim_I2(WeightVector(9, {5, 5, 5}));
    CHECK(e.label == CaseLabel::CaseIIc);
    CHECK(e.dim_I2 == 1);
    CHECK(e.hf2 == 54);

    e = expected_dim_I2(WeightVector(4, {3, 1}));
    CHECK(e.label == CaseLabel::CaseIII);
    CHECK(e.dim_I2 == 3);
    CHECK(e.tau == 2);
    CHECK(e.v == 1);

    e = expected_dim_I2(WeightVector(3, {2, 2, 2}));
    CHECK(e.label == CaseLabel::CaseI);
    CHECK(e.dim_I2 == 0);

    e = expected_dim_I2(WeightVector(7, {4, 3, 3, 3}));
    CHECK(e.label == CaseLabel::CaseIIa);
    CHECK(e.dim_I2 == 0);

    e = expected_dim_I2(WeightVector(3, {2, 2}));
    CHECK(e.label == CaseLabel::CaseIII);
    CHECK(e.dim_I2 == 1); // the plane pair itself

    e = expected_dim_I2(WeightVector(7, {4, 4, 4, 1}));
    CHECK(e.label == CaseLabel::CaseIIb);
    CHECK(e.dim_I2 == 0);

    e = expected_dim_I2(WeightVector(4, {1, 1}));
    CHECK(e.label == CaseLabel::Disjoint);
    CHECK(!e.tau.has_value());
    CHECK(!e.v.has_value());
    CHECK(e.dim_I2 == 9);
}

TEST_CASE("dispatch totality and hf2 bookkeeping over the full grid") {
    for_each_weight_vector(10, 6, [](const WeightVector& w) {
        Expectation e = expected_dim_I2(w); // throws on any dispatch gap
        CHECK(e.dim_I2 >= 0);
        CHECK(e.hf2 == choose2(w.n() + 2) - e.dim_I2);
        if (e.label == CaseLabel::Disjoint) {
            CHECK(!e.tau.has_value());
            CHECK(!e.v.has_value());
        } else {
            CHECK(e.tau.has_value());
            CHECK(e.v.has_value());
            CHECK(*e.tau >= 2);
        }
    });
}

TEST_CASE("disjoint branch of the dispatch equals the standalone disjoint count") {
    for_each_weight_vector(10, 6, [](const WeightVector& w) {
        if (w.intersecting()) return;
        Expectation e = expected_dim_I2(w);
        CHECK(e.label == CaseLabel::Disjoint);
        CHECK(e.dim_I2 == disjoint_dim(w));
    });
}

TEST_CASE("case III correction terms are strictly positive") {
    for_each_weight_vector(10, 6, [](const WeightVector& w) {
        Expectation e = expected_dim_I2(w);
        if (e.label != CaseLabel::CaseIII) return;
        std::int64_t correction = 0;
        for (int i = 1; i < *e.tau; ++i)
            correction += choose2(w.weight(0) + w.weight(i) - w.n() + 2);
        CHECK(correction > 0);
    });
}

TEST_CASE("appending a component never increases the expected dimension") {
    for_each_weight_vector(10, 6, [](const WeightVector& w) {
        std::int64_t base = expected_dim_I2(w).dim_I2;
        int smallest = w.weight(w.s() - 1);
        for (int extra = 0; extra <= smallest; ++extra) {
            std::vector<int> ws = w.weights();
            ws.push_back(extra);
            CHECK(expected_dim_I2(WeightVector(w.n(), ws)).dim_I2 <= base);
        }
    });
}

TEST_CASE("fano dimension: rulings, emptiness, conic") {
    CHECK(fano_dim(1, 3) == 1);
    CHECK(!fano_dim(2, 3).has_value());
    CHECK(fano_dim(0, 2) == 1);
    CHECK(fano_dim(2, 5) == 3); // planes on a smooth 4-fold quadric
    CHECK_THROWS_AS(fano_dim(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(fano_dim(0, 1), std::invalid_argument);
}

TEST_CASE("fano emptiness threshold and integrality for all m, n <= 12") {
    for (int n = 2; n <= 12; ++n)
        for (int m = 0; m <= 12; ++m) {
            auto d = fano_dim(m, n);
            CHECK(d.has_value() == (2 * m <= n - 1));
            if (d) CHECK(*d >= 0); // integrality asserted inside fano_dim
        }
}

TEST_CASE("largest plane on a rank-r quadric") {
    CHECK(max_plane_dim_on_rank_r(3, 4) == 1);
    CHECK(max_plane_dim_on_rank_r(3, 2) == 2);
    CHECK(max_plane_dim_on_rank_r(9, 6) == 6);
    CHECK_THROWS_AS(max_plane_dim_on_rank_r(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(max_plane_dim_on_rank_r(3, 5), std::invalid_argument);
}

TEST_CASE("rank bound threshold is sharp against the even/odd split") {
    for (int n = 2; n <= 10; ++n)
        for (int r = 1; r <= n + 1; ++r) {
            int m = max_plane_dim_on_rank_r(n, r);
            CHECK(r <= 2 * n - 2 * m);      // an m-plane fits
            CHECK(r > 2 * n - 2 * (m + 1)); // an (m+1)-plane does not
        }
}

TEST_CASE("lemma bound f(p) on the worked examples") {
    CHECK(lemma_bound(WeightVector(4, {1, 1}), 2) == 4);
    // r = 1 collapses to sum (m_i + 1)
    CHECK(lemma_bound(WeightVector(4, {1, 1}), 1) == 4);
    CHECK(lemma_bound(WeightVector(7, {3, 2, 1}), 1) == 4 + 3 + 2);
    CHECK(lemma_bound(WeightVector(5, {1, 1, 1}), 4) == 9);
    CHECK_THROWS_AS(lemma_bound(WeightVector(3, {2, 2}), 1), std::invalid_argument);
    CHECK_THROWS_AS(lemma_bound(WeightVector(4, {1, 1}), 7), std::invalid_argument);
    CHECK_THROWS_AS(lemma_bound(WeightVector(4, {1, 1}), 0), std::invalid_argument);
}

TEST_CASE("f(p) recurrences along the even and odd chains") {
    CounterRng rng(31337, 0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 9);
        int s = 1 + static_cast<int>(rng.next() % 5);
        std::vector<int> ws(s);
        for (auto& m : ws) m = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        WeightVector w(n, ws);
        for (int p = 0; p <= n; ++p) {
            std::int64_t even_step = 0, odd_step = 0;
            for (int m : w.weights()) {
                if (m >= p) {
                    even_step += m - p + 1;
                    odd_step += m - p;
                }
            }
            CHECK(lemma_f_even(w, p + 1) - lemma_f_even(w, p) == even_step);
            CHECK(lemma_f_odd(w, p + 1) - lemma_f_odd(w, p) == odd_step);
        }
    }
}

TEST_CASE("fiber deficiency on the worked examples") {
    FiberReport r1 = fiber_deficiency(WeightVector(4, {1, 1}), 1);
    CHECK(!r1.lemma_applies); // a double hyperplane through two lines exists
    CHECK(r1.family_dim == 4);
    CHECK(r1.fiber_over_one == 8);
    CHECK(r1.deficiency == 0);

    FiberReport r2 = fiber_deficiency(WeightVector(5, {1, 1}), 2);
    CHECK(!r2.lemma_applies); // a hyperplane pair through two lines exists

    // seven lines in P^4: expected-zero regime, every admissible rank excluded
    WeightVector seven(4, {1, 1, 1, 1, 1, 1, 1});
    for (int r = 1; r <= 6; ++r) CHECK(fiber_deficiency(seven, r).lemma_applies);
}

TEST_CASE("deficiency equals family + fiber - parameter dimension") {
    // the two computation routes must agree wherever the clamp-free binomial
    // range applies (r <= n + 2 covers every geometric rank)
    for_each_weight_vector(9, 5, [](const WeightVector& w) {
        if (w.intersecting()) return;
        int rmax = 2 * w.n() - 2 * w.weight(0);
        for (int r = 1; r <= std::min(rmax, w.n() + 2); ++r) {
            FiberReport rep = fiber_deficiency(w, r);
            CHECK(rep.deficiency == rep.family_dim + rep.fiber_over_one - dim_DL(w));
            if (rep.lemma_applies) CHECK(rep.deficiency < 0);
        }
    });
}

TEST_CASE("parameter space dimension") {
    CHECK(dim_DL(WeightVector(3, {1, 1})) == 8);
    CHECK(dim_DL(WeightVector(5, {0})) == 5);
    CHECK(dim_DL(WeightVector(4, {3})) == 4);
}
