#pragma once

#include "partcount/integer.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace partcount {

/// Sieved divisor sums sigma(m) = sum_{d|m} d and sigma2(m) = sum_{d|m} d^2
/// for 1 <= m <= max_n. Indexing is 1-based through the accessors.
class DivisorSumTable {
public:
    explicit DivisorSumTable(std::size_t max_n);

    std::size_t max_n() const noexcept { return sigma1_.size(); }
    const Integer& sigma1(std::size_t m) const;
    const Integer& sigma2(std::size_t m) const;

private:
    std::vector<Integer> sigma1_;
    std::vector<Integer> sigma2_;
};

DivisorSumTable build_divisor_table(std::size_t max_n);

/// Classification of an index against the generalized pentagonal numbers
/// m(3m-1)/2 and m(3m+1)/2, m >= 1.
struct PentagonalCoefficient {
    std::uint64_t index = 0;
    std::optional<std::uint64_t> m;
    std::optional<int> sign;
    Integer value;  // (-1)^m * index! when matched, 0 otherwise
};

PentagonalCoefficient pentagonal_lambda(std::uint64_t i);

/// Returns m >= 1 with i = m(3m-1)/2 or i = m(3m+1)/2, if any.
std::optional<std::uint64_t> pentagonal_root(std::uint64_t i);

Integer factorial(std::uint64_t n);
Integer binomial(std::uint64_t n, std::uint64_t r);

/// k (k+1) ... (k+l-1); empty product for l = 0.
Integer rising_factorial(std::uint64_t k, std::uint64_t l);

}  // namespace partcount
