#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "quadrica/weight_vector.hpp"

namespace quadrica {

/// Branch of the degree-2 case analysis for a generic configuration.
enum class CaseLabel { Disjoint, CaseI, CaseIIa, CaseIIb, CaseIIc, CaseIII };

std::string_view to_string(CaseLabel label);

/// Closed-form answer for a weight vector: the case taken, the invariants
/// tau and v (absent in the disjoint branch, where they are undefined), the
/// dimension of the degree-2 ideal and the degree-2 Hilbert function.
struct Expectation {
    CaseLabel label;
    std::optional<int> tau;
    std::optional<int> v;
    std::int64_t dim_I2;
    std::int64_t hf2; // C(n+2,2) - dim_I2
};

/// Dimension count for the incidence fiber over the rank-r quadric family.
/// `deficiency` is dim of the preimage of the rank-r family minus the
/// parameter-space dimension; `lemma_applies` reports whether the numeric
/// criterion excluding rank-r quadrics holds (it implies deficiency < 0).
struct FiberReport {
    int r;
    std::int64_t family_dim;
    std::int64_t fiber_over_one;
    std::int64_t deficiency;
    bool lemma_applies;
};

/// C(a,2) with the convention that a <= 1 gives 0 (keeps every case formula
/// total).
constexpr std::int64_t choose2(std::int64_t a) {
    return a >= 2 ? a * (a - 1) / 2 : 0;
}

/// tau = max{ i : m_1 + m_i >= n } and v = sum_{i=2..tau} (m_1 + m_i - n + 1).
/// Requires the intersecting regime (m_1 + m_2 >= n).
std::pair<int, int> tau_v(const WeightVector& w);

/// max{ C(n+2,2) - sum C(m_i+2,2), 0 }. Requires s = 1 or m_1 + m_2 < n.
std::int64_t disjoint_dim(const WeightVector& w);

/// Full case dispatch for dim (I_Lambda)_2 of a generic configuration.
Expectation expected_dim_I2(const WeightVector& w);

/// Dimension of the variety of m-planes on a smooth quadric hypersurface of
/// dimension n-1 in P^n, or nullopt when no such plane exists (m > (n-1)/2).
std::optional<std::int64_t> fano_dim(int m, int n);

/// Largest m such that a quadric of rank r in P^n contains an m-plane:
/// n - ceil(r/2). Requires 1 <= r <= n+1.
int max_plane_dim_on_rank_r(int n, int r);

/// f(p) for the even chain r = 2p (no precondition checks; p >= 0).
std::int64_t lemma_f_even(const WeightVector& w, int p);
/// f(p) for the odd chain r = 2p+1 (no precondition checks; p >= 0).
std::int64_t lemma_f_odd(const WeightVector& w, int p);

/// The rank-exclusion bound f(p) with p = r/2 (r even) or (r-1)/2 (r odd).
/// Requires m_1 + m_2 < n (or s = 1) and 1 <= r <= 2n - 2m_1.
std::int64_t lemma_bound(const WeightVector& w, int r);

/// Fiber-dimension audit for rank-r quadrics; preconditions as lemma_bound.
FiberReport fiber_deficiency(const WeightVector& w, int r);

/// Dimension of the parameter space (product of Grassmannians):
/// sum (m_i+1)(n-m_i).
std::int64_t dim_DL(const WeightVector& w);

} // namespace quadrica
