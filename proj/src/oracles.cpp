#include "partcount/counts.hpp"

#include <string>

namespace partcount {

TruncatedSeries oracle_series(Family family, std::int64_t k, std::uint64_t order) {
    if (family == Family::colored && k < 0) {
        throw DomainError("number of colors must be nonnegative");
    }
    TruncatedSeries series(order);
    for (std::uint64_t j = 1; j <= order; ++j) {
        const std::uint64_t exponent =
            family == Family::colored ? static_cast<std::uint64_t>(k) : j;
        for (std::uint64_t e = 0; e < exponent; ++e) {
            series.divide_by_one_minus_qj(j);
        }
    }
    return series;
}

std::vector<Integer> partition_numbers_pentagonal(std::uint64_t n) {
    std::vector<Integer> p(n + 1, Integer(0));
    p[0] = 1;
    for (std::uint64_t t = 1; t <= n; ++t) {
        Integer sum = 0;
        for (std::uint64_t m = 1;; ++m) {
            const std::uint64_t lower = m * (3 * m - 1) / 2;
            if (lower > t) {
                break;
            }
            const std::uint64_t upper = m * (3 * m + 1) / 2;
            Integer pair = p[t - lower];
            if (upper <= t) {
                pair += p[t - upper];
            }
            if (m % 2 == 1) {
                sum += pair;
            } else {
                sum -= pair;
            }
        }
        p[t] = std::move(sum);
    }
    return p;
}

namespace {

struct ColoredPart {
    std::uint64_t part;
    std::int64_t color;
};

// Extends a partition whose last element is `last`, keeping (part, color)
// pairs in non-increasing lexicographic order so each multiset appears once.
std::uint64_t walk_colored(std::uint64_t remaining, ColoredPart last, std::int64_t colors,
                           std::vector<ColoredPart>& parts) {
    if (remaining == 0) {
        return 1;
    }
    std::uint64_t total = 0;
    for (std::uint64_t part = std::min(remaining, last.part); part >= 1; --part) {
        const std::int64_t top = part == last.part ? last.color : colors;
        for (std::int64_t color = top; color >= 1; --color) {
            parts.push_back({part, color});
            total += walk_colored(remaining - part, parts.back(), colors, parts);
            parts.pop_back();
        }
    }
    return total;
}

// Places a row under `above`: row[j] <= above[j], non-increasing, no longer
// than `above`. Each completed nonempty row recurses into the next row.
std::uint64_t walk_plane(std::uint64_t remaining, const std::vector<std::uint64_t>& above,
                         std::vector<std::uint64_t>& row);

std::uint64_t fill_row(std::uint64_t remaining, const std::vector<std::uint64_t>& above,
                       std::vector<std::uint64_t>& row, std::uint64_t row_sum) {
    std::uint64_t total = 0;
    if (!row.empty()) {
        std::vector<std::uint64_t> next;
        total += walk_plane(remaining - row_sum, row, next);
    }
    const std::size_t j = row.size();
    if (j >= above.size()) {
        return total;
    }
    std::uint64_t cap = above[j];
    if (j > 0) {
        cap = std::min(cap, row[j - 1]);
    }
    cap = std::min(cap, remaining - row_sum);
    for (std::uint64_t v = 1; v <= cap; ++v) {
        row.push_back(v);
        total += fill_row(remaining, above, row, row_sum + v);
        row.pop_back();
    }
    return total;
}

std::uint64_t walk_plane(std::uint64_t remaining, const std::vector<std::uint64_t>& above,
                         std::vector<std::uint64_t>& row) {
    if (remaining == 0) {
        return 1;
    }
    return fill_row(remaining, above, row, 0);
}

void check_window(std::uint64_t n) {
    if (n > kEnumerationMaxN) {
        throw UnsupportedSizeError("enumeration oracle supports n <= " +
                                   std::to_string(kEnumerationMaxN) + ", got " +
                                   std::to_string(n));
    }
}

}  // namespace

Integer oracle_enumerate_colored(std::int64_t k, std::uint64_t n) {
    check_window(n);
    if (k < 0 || k > kEnumerationMaxK) {
        throw UnsupportedSizeError("enumeration oracle supports 0 <= k <= " +
                                   std::to_string(kEnumerationMaxK) + ", got " +
                                   std::to_string(k));
    }
    std::vector<ColoredPart> parts;
    return Integer(
        static_cast<unsigned long>(walk_colored(n, ColoredPart{n, k}, k, parts)));
}

Integer oracle_enumerate_plane(std::uint64_t n) {
    check_window(n);
    // The first row sits under an unconstrained row of width n.
    const std::vector<std::uint64_t> unbounded(n, n);
    std::vector<std::uint64_t> row;
    return Integer(static_cast<unsigned long>(walk_plane(n, unbounded, row)));
}

}  // namespace partcount
