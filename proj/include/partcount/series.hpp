#pragma once

#include "partcount/integer.hpp"

#include <cstddef>
#include <vector>

namespace partcount {

/// Exact power series a_0 + a_1 q + ... + a_N q^N, truncated at order N.
class TruncatedSeries {
public:
    /// The constant series 1 at the given order.
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(std::vector<Integer> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    /// Multiplies in place by 1 / (1 - q^j) (a running sum with stride j).
    TruncatedSeries& divide_by_one_minus_qj(std::size_t j);
    /// Multiplies in place by (1 - q^j).
    TruncatedSeries& multiply_by_one_minus_qj(std::size_t j);

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

/// prod_{j=1}^{order} (1 - q^j), truncated.
TruncatedSeries euler_product(std::size_t order);

}  // namespace partcount
