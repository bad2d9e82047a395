#pragma once

#include "partcount/arith.hpp"
#include "partcount/integer.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace partcount {

enum class ArgumentKind { pentagonal, colored, plane, custom };

/// Exact arguments x_1..x_N for Bell polynomial evaluation. Stored 0-based:
/// values()[i - 1] is x_i.
class BellArgumentSequence {
public:
    BellArgumentSequence() = default;
    BellArgumentSequence(std::vector<Integer> values, ArgumentKind kind = ArgumentKind::custom,
                         std::int64_t colors = 0);

    /// x_i = lambda_i, the signed factorial pentagonal coefficients.
    static BellArgumentSequence pentagonal(std::size_t length);
    /// x_i = k (i-1)! sigma(i).
    static BellArgumentSequence colored(std::int64_t k, const DivisorSumTable& table,
                                        std::size_t length);
    /// x_i = (i-1)! sigma2(i).
    static BellArgumentSequence plane(const DivisorSumTable& table, std::size_t length);

    std::size_t size() const noexcept { return values_.size(); }
    const Integer& x(std::size_t i) const;  // 1-based
    std::span<const Integer> values() const noexcept { return values_; }
    ArgumentKind kind() const noexcept { return kind_; }
    std::int64_t colors() const noexcept { return colors_; }

private:
    std::vector<Integer> values_;
    ArgumentKind kind_ = ArgumentKind::custom;
    std::int64_t colors_ = 0;
};

/// Triangle of partial Bell values B_{n,l}, 0 <= l <= min(n, l_max),
/// 0 <= n <= n_max.
class PartialBellTable {
public:
    std::size_t n_max() const noexcept { return rows_.empty() ? 0 : rows_.size() - 1; }
    std::size_t l_max() const noexcept { return l_max_; }
    /// B_{n,l}; zero for l > n. Throws DomainError outside the stored range.
    const Integer& at(std::size_t n, std::size_t l) const;
    std::span<const Integer> row(std::size_t n) const;

private:
    friend PartialBellTable partial_bell_table(const BellArgumentSequence&, std::size_t,
                                               std::size_t);
    std::vector<std::vector<Integer>> rows_;
    std::size_t l_max_ = 0;
};

/// Fills B_{n,l} by B_{n,l} = sum_i C(n-1, i-1) x_i B_{n-i,l-1}, skipping
/// zero arguments.
PartialBellTable partial_bell_table(const BellArgumentSequence& args, std::size_t n_max,
                                    std::size_t l_max);
PartialBellTable partial_bell_table(const BellArgumentSequence& args, std::size_t n_max);

/// Largest n accepted by partial_bell_explicit.
inline constexpr std::size_t kExplicitBellMaxN = 12;

/// B_{n,blocks} by the nested binomial-sum formula with blocks - 1 levels of
/// nesting. Exponential cost; used as a cross-check. Requires
/// 1 <= blocks <= n <= kExplicitBellMaxN.
Integer partial_bell_explicit(const BellArgumentSequence& args, std::size_t n,
                              std::size_t blocks);

/// B_n(x_1..x_n) via B_{m+1} = sum_i C(m, i) B_{m-i} x_{i+1}.
Integer complete_bell(const BellArgumentSequence& args, std::size_t n);

/// Complete Bell values B_0..B_n in one pass.
std::vector<Integer> complete_bell_prefix(const BellArgumentSequence& args, std::size_t n);

/// n x n upper Hessenberg matrix with M[i][j] = c_{j-i+1} for j >= i,
/// M[i][i-1] = -(i-1) and zeros below the subdiagonal (1-based).
struct HessenbergSpec {
    std::vector<Integer> c;  // c[0] is c_1
    std::size_t n = 0;

    std::vector<std::vector<Integer>> materialize() const;
};

/// Determinant of the encoded matrix in O(n^2) exact operations, no division.
Integer hessenberg_det(const HessenbergSpec& spec);

/// Cofactor expansion along the first row. Test oracle, n <= 10.
Integer dense_det_oracle(const std::vector<std::vector<Integer>>& matrix);

/// Cofactor expansion along the first column; second independent order.
Integer dense_det_oracle_by_column(const std::vector<std::vector<Integer>>& matrix);

}  // namespace partcount
