#pragma once

#include <vector>

namespace quadrica {

/// Ambient projective dimension n together with the sorted component
/// dimensions (m_1 >= ... >= m_s) of a configuration of linear spaces.
/// Weights are sorted descending on construction; each must satisfy
/// 0 <= m_i <= n-1.
class WeightVector {
public:
    WeightVector(int n, std::vector<int> weights);

    int n() const { return n_; }
    int s() const { return static_cast<int>(weights_.size()); }
    const std::vector<int>& weights() const { return weights_; }
    int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }

    /// True when dimensions force the two largest components to meet
    /// (m_1 + m_2 >= n); single-component vectors are never intersecting.
    bool intersecting() const {
        return s() >= 2 && weights_[0] + weights_[1] >= n_;
    }

    bool operator==(const WeightVector& other) const {
        return n_ == other.n_ && weights_ == other.weights_;
    }

private:
    int n_;
    std::vector<int> weights_;
};

} // namespace quadrica
