#include "partcount/bell.hpp"

#include <string>
#include <utility>

namespace partcount {

BellArgumentSequence::BellArgumentSequence(std::vector<Integer> values, ArgumentKind kind,
                                           std::int64_t colors)
    : values_(std::move(values)), kind_(kind), colors_(colors) {}

BellArgumentSequence BellArgumentSequence::pentagonal(std::size_t length) {
    std::vector<Integer> values;
    values.reserve(length);
    for (std::size_t i = 1; i <= length; ++i) {
        values.push_back(pentagonal_lambda(i).value);
    }
    return {std::move(values), ArgumentKind::pentagonal};
}

BellArgumentSequence BellArgumentSequence::colored(std::int64_t k, const DivisorSumTable& table,
                                                   std::size_t length) {
    if (length > table.max_n()) {
        throw DomainError("divisor table too short for colored arguments");
    }
    std::vector<Integer> values;
    values.reserve(length);
    Integer shifted_factorial = 1;  // (i-1)!
    for (std::size_t i = 1; i <= length; ++i) {
        values.push_back(Integer(static_cast<long>(k)) * shifted_factorial * table.sigma1(i));
        shifted_factorial *= static_cast<unsigned long>(i);
    }
    return {std::move(values), ArgumentKind::colored, k};
}

BellArgumentSequence BellArgumentSequence::plane(const DivisorSumTable& table,
                                                 std::size_t length) {
    if (length > table.max_n()) {
        throw DomainError("divisor table too short for plane arguments");
    }
    std::vector<Integer> values;
    values.reserve(length);
    Integer shifted_factorial = 1;
    for (std::size_t i = 1; i <= length; ++i) {
        values.push_back(shifted_factorial * table.sigma2(i));
        shifted_factorial *= static_cast<unsigned long>(i);
    }
    return {std::move(values), ArgumentKind::plane};
}

const Integer& BellArgumentSequence::x(std::size_t i) const {
    if (i == 0 || i > values_.size()) {
        throw DomainError("Bell argument x_" + std::to_string(i) + " not supplied (have " +
                          std::to_string(values_.size()) + ")");
    }
    return values_[i - 1];
}

namespace {

const Integer kZero = 0;

// 1-based indices i <= limit with x_i != 0.
std::vector<std::size_t> nonzero_indices(const BellArgumentSequence& args, std::size_t limit) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= limit; ++i) {
        if (args.x(i) != 0) {
            out.push_back(i);
        }
    }
    return out;
}

// Advances C(m-1, .) to C(m, .) in place.
void next_pascal_row(std::vector<Integer>& row) {
    row.push_back(1);
    for (std::size_t r = row.size() - 2; r >= 1; --r) {
        row[r] += row[r - 1];
    }
}

}  // namespace

const Integer& PartialBellTable::at(std::size_t n, std::size_t l) const {
    if (n >= rows_.size()) {
        throw DomainError("partial Bell row " + std::to_string(n) + " not in table");
    }
    if (l > n) {
        return kZero;
    }
    if (l >= rows_[n].size()) {
        throw DomainError("partial Bell column " + std::to_string(l) + " beyond l_max");
    }
    return rows_[n][l];
}

std::span<const Integer> PartialBellTable::row(std::size_t n) const {
    if (n >= rows_.size()) {
        throw DomainError("partial Bell row " + std::to_string(n) + " not in table");
    }
    return rows_[n];
}

PartialBellTable partial_bell_table(const BellArgumentSequence& args, std::size_t n_max,
                                    std::size_t l_max) {
    if (args.size() < n_max) {
        throw DomainError("partial_bell_table needs " + std::to_string(n_max) +
                          " arguments, got " + std::to_string(args.size()));
    }
    PartialBellTable table;
    table.l_max_ = l_max;
    table.rows_.resize(n_max + 1);
    table.rows_[0].assign(1, Integer(1));

    const auto support = nonzero_indices(args, n_max);
    std::vector<Integer> pascal{1};  // C(n-1, .)
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n >= 2) {
            next_pascal_row(pascal);
        }
        auto& row = table.rows_[n];
        row.assign(std::min(n, l_max) + 1, Integer(0));
        for (std::size_t l = 1; l < row.size(); ++l) {
            Integer sum = 0;
            for (std::size_t i : support) {
                if (i > n - l + 1) {
                    break;
                }
                const Integer& below = table.rows_[n - i][l - 1];
                if (below != 0) {
                    sum += pascal[i - 1] * args.x(i) * below;
                }
            }
            row[l] = std::move(sum);
        }
    }
    return table;
}

PartialBellTable partial_bell_table(const BellArgumentSequence& args, std::size_t n_max) {
    return partial_bell_table(args, n_max, n_max);
}

namespace {

// Sums over alpha_depth < ... < alpha_1 < alpha_0 = upper with alpha_j >= remaining.
Integer explicit_nest(const BellArgumentSequence& args, std::size_t upper, std::size_t remaining) {
    if (remaining == 0) {
        return args.x(upper);
    }
    Integer sum = 0;
    for (std::size_t alpha = remaining; alpha + 1 <= upper; ++alpha) {
        const Integer& gap = args.x(upper - alpha);
        if (gap == 0) {
            continue;
        }
        sum += binomial(upper, alpha) * gap * explicit_nest(args, alpha, remaining - 1);
    }
    return sum;
}

}  // namespace

Integer partial_bell_explicit(const BellArgumentSequence& args, std::size_t n,
                              std::size_t blocks) {
    if (blocks == 0 || blocks > n || n > kExplicitBellMaxN) {
        throw UnsupportedSizeError("explicit Bell formula supports 1 <= blocks <= n <= " +
                                   std::to_string(kExplicitBellMaxN) + ", got n=" +
                                   std::to_string(n) + ", blocks=" + std::to_string(blocks));
    }
    if (args.size() < n - blocks + 1) {
        throw DomainError("partial_bell_explicit needs x_1..x_" + std::to_string(n - blocks + 1));
    }
    return exact_div(explicit_nest(args, n, blocks - 1), factorial(blocks),
                     "explicit partial Bell");
}

std::vector<Integer> complete_bell_prefix(const BellArgumentSequence& args, std::size_t n) {
    if (args.size() < n) {
        throw DomainError("complete_bell needs " + std::to_string(n) + " arguments, got " +
                          std::to_string(args.size()));
    }
    const auto support = nonzero_indices(args, n);
    std::vector<Integer> bell(n + 1);
    bell[0] = 1;
    std::vector<Integer> pascal{1};  // C(m, .)
    for (std::size_t m = 0; m < n; ++m) {
        if (m >= 1) {
            next_pascal_row(pascal);
        }
        Integer sum = 0;
        for (std::size_t idx : support) {
            const std::size_t i = idx - 1;
            if (i > m) {
                break;
            }
            sum += pascal[i] * bell[m - i] * args.x(idx);
        }
        bell[m + 1] = std::move(sum);
    }
    return bell;
}

Integer complete_bell(const BellArgumentSequence& args, std::size_t n) {
    return std::move(complete_bell_prefix(args, n)[n]);
}

std::vector<std::vector<Integer>> HessenbergSpec::materialize() const {
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m[i][j] = c.at(j - i);
        }
        if (i >= 1) {
            m[i][i - 1] = -static_cast<long>(i);
        }
    }
    return m;
}

Integer hessenberg_det(const HessenbergSpec& spec) {
    if (spec.n == 0) {
        throw DomainError("hessenberg_det needs n >= 1");
    }
    if (spec.c.size() < spec.n) {
        throw DomainError("hessenberg_det needs " + std::to_string(spec.n) + " generators");
    }
    // Expanding the leading m x m minor along its last column:
    //   D_m = sum_{i=1}^{m} M[i][m] D_{i-1} prod_{j=i}^{m-1} (-M[j+1][j])
    // and -M[j+1][j] = j here, so every term is a nonnegative multiplier.
    std::vector<Integer> minors(spec.n + 1);
    minors[0] = 1;
    for (std::size_t m = 1; m <= spec.n; ++m) {
        Integer sum = 0;
        Integer chain = 1;
        for (std::size_t i = m; i >= 1; --i) {
            sum += spec.c[m - i] * minors[i - 1] * chain;
            chain *= static_cast<unsigned long>(i - 1);
        }
        minors[m] = std::move(sum);
    }
    return minors[spec.n];
}

namespace {

using Matrix = std::vector<std::vector<Integer>>;

void check_square(const Matrix& matrix) {
    for (const auto& row : matrix) {
        if (row.size() != matrix.size()) {
            throw DomainError("determinant needs a square matrix");
        }
    }
    if (matrix.size() > 10) {
        throw UnsupportedSizeError("cofactor determinant limited to n <= 10");
    }
}

Matrix minor_without(const Matrix& m, std::size_t skip_row, std::size_t skip_col) {
    Matrix out;
    out.reserve(m.size() - 1);
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == skip_row) {
            continue;
        }
        std::vector<Integer> row;
        row.reserve(m.size() - 1);
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (c != skip_col) {
                row.push_back(m[r][c]);
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

Integer cofactor_row(const Matrix& m) {
    if (m.empty()) {
        return 1;
    }
    Integer sum = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
        if (m[0][c] == 0) {
            continue;
        }
        Integer term = m[0][c] * cofactor_row(minor_without(m, 0, c));
        if (c % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Integer cofactor_column(const Matrix& m) {
    if (m.empty()) {
        return 1;
    }
    Integer sum = 0;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (m[r][0] == 0) {
            continue;
        }
        Integer term = m[r][0] * cofactor_column(minor_without(m, r, 0));
        if (r % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

}  // namespace

Integer dense_det_oracle(const Matrix& matrix) {
    check_square(matrix);
    return cofactor_row(matrix);
}

Integer dense_det_oracle_by_column(const Matrix& matrix) {
    check_square(matrix);
    return cofactor_column(matrix);
}

}  // namespace partcount
