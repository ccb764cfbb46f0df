#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadrica/linalg.hpp"
#include "quadrica/matrix.hpp"
#include "quadrica/weight_vector.hpp"

namespace quadrica {

/// A projective linear subspace of P^n, stored by a spanning matrix of the
/// underlying vector subspace: shape (n+1) x (m+1), full column rank.
class LinearSpace {
public:
    explicit LinearSpace(FpMatrix span);

    /// Ambient projective dimension n.
    int ambient() const { return static_cast<int>(span_.rows()) - 1; }
    /// Projective dimension m.
    int dim() const { return static_cast<int>(span_.cols()) - 1; }
    const FpMatrix& span() const { return span_; }
    const PrimeField& field() const { return span_.field(); }

private:
    FpMatrix span_;
};

bool same_subspace(const LinearSpace& a, const LinearSpace& b);

/// dim(A ∩ B) as a projective dimension; -1 means the intersection is empty.
int intersection_dim(const LinearSpace& a, const LinearSpace& b);

/// Basis of the vector-space intersection, as columns ((n+1) x k, k possibly
/// 0).
FpMatrix intersection_basis(const LinearSpace& a, const LinearSpace& b);

/// A finite set of pairwise-distinct linear subspaces sharing one ambient
/// space, listed in non-increasing order of dimension by the samplers
/// (arbitrary order is accepted).
class Configuration {
public:
    Configuration(int ambient, std::vector<LinearSpace> spaces, PrimeField field);

    int ambient() const { return ambient_; }
    int size() const { return static_cast<int>(spaces_.size()); }
    const std::vector<LinearSpace>& spaces() const { return spaces_; }
    const LinearSpace& space(int i) const { return spaces_[static_cast<std::size_t>(i)]; }
    const PrimeField& field() const { return field_; }

private:
    int ambient_;
    std::vector<LinearSpace> spaces_;
    PrimeField field_;
};

/// Sample a configuration with the given weight vector; spans are filled
/// with uniform residues from a counter stream keyed by (seed, component),
/// resampling a component on rank failure or on collision with an earlier
/// component. Deterministic in (w, prime, seed).
Configuration random_configuration(const WeightVector& w, std::uint64_t prime,
                                   std::uint64_t seed);

/// Span of the pairwise intersections of component 1 with components
/// 2..tau (1-based), or nullopt when every such intersection is empty.
std::optional<LinearSpace> pairwise_vertex(const Configuration& c, int tau);

/// Projection away from V onto a random complement: the result lives in
/// P^{n - dim V - 1}; components contained in V are rejected, components
/// that become equal are deduplicated (first occurrence kept). An empty
/// vertex (nullopt) projects to the configuration itself.
Configuration project_from(const Configuration& c,
                           const std::optional<LinearSpace>& vertex,
                           std::uint64_t seed = 0);

} // namespace quadrica
