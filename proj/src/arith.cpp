#include "partcount/arith.hpp"

#include <string>

namespace partcount {

DivisorSumTable::DivisorSumTable(std::size_t max_n) {
    if (max_n == 0) {
        throw DomainError("divisor table needs max_n >= 1");
    }
    sigma1_.assign(max_n, Integer(0));
    sigma2_.assign(max_n, Integer(0));
    // Each d contributes to all of its multiples, O(N log N) additions.
    for (std::size_t d = 1; d <= max_n; ++d) {
        const Integer dd(static_cast<unsigned long>(d));
        const Integer square = dd * dd;
        for (std::size_t m = d; m <= max_n; m += d) {
            sigma1_[m - 1] += dd;
            sigma2_[m - 1] += square;
        }
    }
}

const Integer& DivisorSumTable::sigma1(std::size_t m) const {
    if (m == 0 || m > sigma1_.size()) {
        throw DomainError("sigma1 index " + std::to_string(m) + " outside 1.." +
                          std::to_string(sigma1_.size()));
    }
    return sigma1_[m - 1];
}

const Integer& DivisorSumTable::sigma2(std::size_t m) const {
    if (m == 0 || m > sigma2_.size()) {
        throw DomainError("sigma2 index " + std::to_string(m) + " outside 1.." +
                          std::to_string(sigma2_.size()));
    }
    return sigma2_[m - 1];
}

DivisorSumTable build_divisor_table(std::size_t max_n) { return DivisorSumTable(max_n); }

std::optional<std::uint64_t> pentagonal_root(std::uint64_t i) {
    if (i == 0) {
        return std::nullopt;
    }
    // m(3m-1)/2 is increasing in m; stop once it exceeds i.
    for (std::uint64_t m = 1;; ++m) {
        const std::uint64_t lower = m * (3 * m - 1) / 2;
        if (lower > i) {
            return std::nullopt;
        }
        if (lower == i || m * (3 * m + 1) / 2 == i) {
            return m;
        }
    }
}

PentagonalCoefficient pentagonal_lambda(std::uint64_t i) {
    if (i == 0) {
        throw DomainError("pentagonal_lambda needs i >= 1");
    }
    PentagonalCoefficient out;
    out.index = i;
    out.value = 0;
    if (auto m = pentagonal_root(i)) {
        out.m = *m;
        out.sign = (*m % 2 == 0) ? 1 : -1;
        out.value = factorial(i) * *out.sign;
    }
    return out;
}

Integer factorial(std::uint64_t n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(r) +
                          ") needs r <= n");
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

Integer rising_factorial(std::uint64_t k, std::uint64_t l) {
    Integer out = 1;
    for (std::uint64_t j = 0; j < l; ++j) {
        out *= Integer(static_cast<unsigned long>(k + j));
    }
    return out;
}

}  // namespace partcount
