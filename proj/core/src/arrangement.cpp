#include "quadrica/arrangement.hpp"

#include <stdexcept>

#include "quadrica/rng.hpp"

namespace quadrica {

namespace {

constexpr int kMaxResampleAttempts = 64;

FpMatrix random_matrix(CounterRng& rng, std::size_t rows, std::size_t cols,
                       const PrimeField& f) {
    std::vector<std::uint64_t> d(rows * cols);
    for (auto& v : d) v = rng.next_residue(f);
    return FpMatrix::from_residues(rows, cols, f, std::move(d));
}

} // namespace

LinearSpace::LinearSpace(FpMatrix span) : span_(std::move(span)) {
    if (span_.rows() < 1 || span_.cols() < 1 || span_.cols() > span_.rows())
        throw std::invalid_argument("LinearSpace: span must be (n+1) x (m+1) with m <= n");
    if (rank(span_) != span_.cols())
        throw std::invalid_argument("LinearSpace: span columns are dependent");
}

bool same_subspace(const LinearSpace& a, const LinearSpace& b) {
    if (a.ambient() != b.ambient() || a.dim() != b.dim()) return false;
    return rank(hstack(a.span(), b.span())) == a.span().cols();
}

int intersection_dim(const LinearSpace& a, const LinearSpace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("intersection_dim: ambient dimensions differ");
    std::size_t r = rank(hstack(a.span(), b.span()));
    return (a.dim() + 1) + (b.dim() + 1) - static_cast<int>(r) - 1;
}

FpMatrix intersection_basis(const LinearSpace& a, const LinearSpace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("intersection_basis: ambient dimensions differ");
    // Kernel vectors (u, v) of [A | B] satisfy A*u = -B*v, and u -> A*u is a
    // bijection onto the intersection because both spans have independent
    // columns.
    FpMatrix k = kernel_basis(hstack(a.span(), b.span()));
    std::size_t ka = a.span().cols();
    std::vector<std::int64_t> u(ka * k.cols());
    for (std::size_t r = 0; r < ka; ++r)
        for (std::size_t c = 0; c < k.cols(); ++c)
            u[r * k.cols() + c] = static_cast<std::int64_t>(k.at(r, c));
    FpMatrix u_part(ka, k.cols(), a.field(), std::move(u));
    return matmul(a.span(), u_part);
}

Configuration::Configuration(int ambient, std::vector<LinearSpace> spaces,
                             PrimeField field)
    : ambient_(ambient), spaces_(std::move(spaces)), field_(field) {
    if (ambient_ < 0)
        throw std::invalid_argument("Configuration: ambient dimension must be >= 0");
    if (spaces_.empty())
        throw std::invalid_argument("Configuration: at least one component required");
    for (const auto& s : spaces_) {
        if (s.ambient() != ambient_)
            throw std::invalid_argument("Configuration: component has wrong ambient dimension");
        if (!(s.field() == field_))
            throw std::invalid_argument("Configuration: component over wrong field");
    }
    for (std::size_t i = 0; i < spaces_.size(); ++i)
        for (std::size_t j = i + 1; j < spaces_.size(); ++j)
            if (same_subspace(spaces_[i], spaces_[j]))
                throw std::invalid_argument("Configuration: components must be pairwise distinct");
}

Configuration random_configuration(const WeightVector& w, std::uint64_t prime,
                                   std::uint64_t seed) {
    PrimeField f(prime);
    std::vector<LinearSpace> spaces;
    spaces.reserve(static_cast<std::size_t>(w.s()));
    for (int i = 0; i < w.s(); ++i) {
        CounterRng rng(seed, static_cast<std::uint64_t>(i));
        const std::size_t rows = static_cast<std::size_t>(w.n()) + 1;
        const std::size_t cols = static_cast<std::size_t>(w.weight(i)) + 1;
        bool placed = false;
        for (int attempt = 0; attempt < kMaxResampleAttempts && !placed; ++attempt) {
            FpMatrix span = random_matrix(rng, rows, cols, f);
            if (rank(span) != cols) continue;
            LinearSpace candidate(std::move(span));
            bool duplicate = false;
            for (const auto& prev : spaces)
                if (same_subspace(prev, candidate)) { duplicate = true; break; }
            if (duplicate) continue;
            spaces.push_back(std::move(candidate));
            placed = true;
        }
        if (!placed)
            throw std::runtime_error("random_configuration: resampling exhausted "
                                     "(modulus too small for this weight vector)");
    }
    return Configuration(w.n(), std::move(spaces), f);
}

std::optional<LinearSpace> pairwise_vertex(const Configuration& c, int tau) {
    if (tau < 2 || tau > c.size())
        throw std::invalid_argument("pairwise_vertex: tau out of range");
    std::vector<FpMatrix> bases;
    for (int i = 1; i < tau; ++i) {
        FpMatrix b = intersection_basis(c.space(0), c.space(i));
        if (b.cols() > 0) bases.push_back(std::move(b));
    }
    if (bases.empty()) return std::nullopt;

    FpMatrix stacked = bases[0];
    for (std::size_t i = 1; i < bases.size(); ++i) stacked = hstack(stacked, bases[i]);
    return LinearSpace(column_space_basis(stacked));
}

Configuration project_from(const Configuration& c,
                           const std::optional<LinearSpace>& vertex,
                           std::uint64_t seed) {
    if (!vertex) return c;
    const LinearSpace& v = *vertex;
    if (v.ambient() != c.ambient())
        throw std::invalid_argument("project_from: vertex has wrong ambient dimension");
    if (v.dim() > c.ambient() - 1)
        throw std::invalid_argument("project_from: vertex must be a proper subspace");

    const PrimeField& f = c.field();
    const std::size_t n1 = static_cast<std::size_t>(c.ambient()) + 1;
    const std::size_t vd = v.span().cols();
    const std::size_t hd = n1 - vd;

    // Random complement H of V; the full basis [V | H] must be invertible.
    CounterRng rng(seed, 0x706A6563ULL); // stream tag for projection sampling
    std::optional<FpMatrix> basis;
    for (int attempt = 0; attempt < kMaxResampleAttempts && !basis; ++attempt) {
        FpMatrix h = random_matrix(rng, n1, hd, f);
        FpMatrix candidate = hstack(v.span(), h);
        if (rank(candidate) == n1) basis = std::move(candidate);
    }
    if (!basis)
        throw std::runtime_error("project_from: could not sample a complement");

    std::vector<LinearSpace> projected;
    for (const auto& s : c.spaces()) {
        FpMatrix coords = coordinates_in_basis(*basis, s.span());
        // H-part: the bottom hd rows of the coordinate split.
        std::vector<std::int64_t> hp(hd * coords.cols());
        for (std::size_t r = 0; r < hd; ++r)
            for (std::size_t col = 0; col < coords.cols(); ++col)
                hp[r * coords.cols() + col] =
                    static_cast<std::int64_t>(coords.at(vd + r, col));
        FpMatrix h_part(hd, coords.cols(), f, std::move(hp));
        FpMatrix image = column_space_basis(h_part);
        if (image.cols() == 0)
            throw std::invalid_argument("project_from: projection annihilates a component");
        LinearSpace candidate(std::move(image));
        bool duplicate = false;
        for (const auto& prev : projected)
            if (same_subspace(prev, candidate)) { duplicate = true; break; }
        if (!duplicate) projected.push_back(std::move(candidate));
    }
    return Configuration(static_cast<int>(hd) - 1, std::move(projected), f);
}

} // namespace quadrica
