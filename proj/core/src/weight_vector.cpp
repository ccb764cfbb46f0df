#include "quadrica/weight_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadrica {

WeightVector::WeightVector(int n, std::vector<int> weights)
    : n_(n), weights_(std::move(weights)) {
    if (n_ < 1) throw std::invalid_argument("WeightVector: ambient dimension must be >= 1");
    if (weights_.empty())
        throw std::invalid_argument("WeightVector: at least one component required");
    for (int m : weights_)
        if (m < 0 || m > n_ - 1)
            throw std::invalid_argument("WeightVector: each weight must satisfy 0 <= m <= n-1");
    std::sort(weights_.begin(), weights_.end(), std::greater<int>());
}

} // namespace quadrica
