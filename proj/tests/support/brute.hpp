#pragma once

// Test-only oracles. Nothing here calls into the evaluators it checks.

#include "partcount/integer.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace partcount::testing {

/// sigma_power(m) by trial division over 1..m.
inline Integer divisor_power_sum(std::uint64_t m, unsigned power) {
    Integer sum = 0;
    for (std::uint64_t d = 1; d <= m; ++d) {
        if (m % d == 0) {
            Integer term;
            mpz_ui_pow_ui(term.get_mpz_t(), d, power);
            sum += term;
        }
    }
    return sum;
}

inline bool is_prime(std::uint64_t m) {
    if (m < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            return false;
        }
    }
    return true;
}

/// Calls visit(blocks) for every set partition of {0..n-1}, via restricted
/// growth strings; blocks[i] is the block label of element i.
inline void for_each_set_partition(std::size_t n,
                                   const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> labels(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            visit(labels);
            return;
        }
        for (std::size_t b = 0; b <= used && b < n; ++b) {
            labels[i] = b;
            rec(i + 1, b == used ? used + 1 : used);
        }
    };
    if (n == 0) {
        visit(labels);
        return;
    }
    labels[0] = 0;
    rec(1, 1);
}

/// Number of set partitions of an n-set into exactly k blocks, by enumeration.
inline Integer stirling2_by_enumeration(std::size_t n, std::size_t k) {
    Integer count = 0;
    for_each_set_partition(n, [&](const std::vector<std::size_t>& labels) {
        std::size_t blocks = 0;
        for (auto b : labels) {
            blocks = std::max(blocks, b + 1);
        }
        if (blocks == k) {
            ++count;
        }
    });
    return count;
}

/// Partial Bell B_{n,k}(x) as a weighted sum over set partitions of an n-set:
/// each block of size s contributes x_s. x is 1-based through x[s-1].
inline Integer partial_bell_by_set_partitions(const std::vector<Integer>& x, std::size_t n,
                                              std::size_t k) {
    Integer total = 0;
    for_each_set_partition(n, [&](const std::vector<std::size_t>& labels) {
        std::vector<std::size_t> sizes(n, 0);
        std::size_t blocks = 0;
        for (auto b : labels) {
            ++sizes[b];
            blocks = std::max(blocks, b + 1);
        }
        if (blocks != k) {
            return;
        }
        Integer term = 1;
        for (std::size_t b = 0; b < blocks; ++b) {
            term *= x[sizes[b] - 1];
        }
        total += term;
    });
    return total;
}

/// n! [t^n] (1/k!) (sum_j x_j t^j / j!)^k over exact rationals.
inline Integer partial_bell_by_series(const std::vector<Integer>& x, std::size_t n, std::size_t k) {
    std::vector<mpq_class> base(n + 1, mpq_class(0));
    mpq_class fact = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        fact *= static_cast<unsigned long>(j);
        if (j <= x.size()) {
            base[j] = mpq_class(x[j - 1]) / fact;
        }
    }
    std::vector<mpq_class> power(n + 1, mpq_class(0));
    power[0] = 1;
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<mpq_class> next(n + 1, mpq_class(0));
        for (std::size_t a = 0; a <= n; ++a) {
            if (power[a] == 0) {
                continue;
            }
            for (std::size_t b = 1; a + b <= n; ++b) {
                next[a + b] += power[a] * base[b];
            }
        }
        power = std::move(next);
    }
    mpq_class kfact = 1;
    for (std::size_t r = 2; r <= k; ++r) {
        kfact *= static_cast<unsigned long>(r);
    }
    mpq_class coeff = power[n] / kfact * fact;  // fact == n!
    coeff.canonicalize();
    if (coeff.get_den() != 1) {
        throw std::logic_error("series oracle produced a non-integer Bell value");
    }
    return coeff.get_num();
}

/// Dense polynomial product truncated at `order`.
inline std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                     std::size_t order) {
    std::vector<Integer> out(order + 1, Integer(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// prod_{j=1}^{order} (1 - q^j) by repeated dense multiplication.
inline std::vector<Integer> euler_product_naive(std::size_t order) {
    std::vector<Integer> acc{1};
    for (std::size_t j = 1; j <= order; ++j) {
        std::vector<Integer> factor(j + 1, Integer(0));
        factor[0] = 1;
        factor[j] = -1;
        acc = poly_mul(acc, factor, order);
    }
    acc.resize(order + 1, Integer(0));
    return acc;
}

/// Ordinary partitions of n with parts <= max_part, by recursion.
inline std::uint64_t partitions_brute(std::uint64_t n, std::uint64_t max_part) {
    if (n == 0) {
        return 1;
    }
    std::uint64_t total = 0;
    for (std::uint64_t part = std::min(n, max_part); part >= 1; --part) {
        total += partitions_brute(n - part, part);
    }
    return total;
}

inline std::vector<Integer> random_args(std::mt19937_64& rng, std::size_t length, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < length; ++i) {
        out.emplace_back(dist(rng));
    }
    return out;
}

}  // namespace partcount::testing
