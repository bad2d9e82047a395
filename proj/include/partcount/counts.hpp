#pragma once

#include "partcount/integer.hpp"
#include "partcount/series.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partcount {

enum class Family { colored, plane };

enum class Method {
    partial_bell,
    complete_bell,
    determinant,
    recurrence,
    oracle_series,
    oracle_enumeration,
};

std::string_view to_string(Family family);
std::string_view to_string(Method method);
std::optional<Family> parse_family(std::string_view text);
std::optional<Method> parse_method(std::string_view text);

/// Every method, in a stable order.
const std::vector<Method>& all_methods();

/// Whether `method` is defined for `family` (partial-bell is colored only).
bool method_supports(Method method, Family family);

struct CountResult {
    Family family = Family::colored;
    std::int64_t k = 0;  // 0 for plane
    std::uint64_t n = 0;
    Method method = Method::recurrence;
    Integer value;
};

// k-colored partitions p_k(n). Negative k is rejected; k = 0 yields the
// empty-product counts 1, 0, 0, ...

CountResult pk_partial_bell(std::int64_t k, std::uint64_t n);
CountResult pk_complete_bell(std::int64_t k, std::uint64_t n);
CountResult pk_determinant(std::int64_t k, std::uint64_t n);
CountResult pk_recurrence(std::int64_t k, std::uint64_t n);

// Plane partitions pp(n).

CountResult pp_complete_bell(std::uint64_t n);
CountResult pp_determinant(std::uint64_t n);
CountResult pp_recurrence(std::uint64_t n);

/// p_k(0..n) via n p_k(n) = k sum_m sigma(m) p_k(n-m).
std::vector<Integer> pk_recurrence_prefix(std::int64_t k, std::uint64_t n);
/// pp(0..n) via n pp(n) = sum_m sigma2(m) pp(n-m).
std::vector<Integer> pp_recurrence_prefix(std::uint64_t n);

/// Ordinary partition numbers p(0..n) from Euler's pentagonal recurrence.
std::vector<Integer> partition_numbers_pentagonal(std::uint64_t n);

/// Coefficients of prod_j (1 - q^j)^{-e_j} up to q^N, e_j = k (colored) or
/// e_j = j (plane).
TruncatedSeries oracle_series(Family family, std::int64_t k, std::uint64_t order);

inline constexpr std::uint64_t kEnumerationMaxN = 12;
inline constexpr std::int64_t kEnumerationMaxK = 4;

/// Counts multisets of (part, color) pairs summing to n by direct generation.
Integer oracle_enumerate_colored(std::int64_t k, std::uint64_t n);
/// Counts plane partition diagrams of n by row-by-row generation.
Integer oracle_enumerate_plane(std::uint64_t n);

/// Dispatches to the named method. k is ignored for plane.
CountResult count(Family family, std::int64_t k, std::uint64_t n, Method method);

/// Process-local memo of recurrence prefixes keyed by (family, k). Extends a
/// prefix on demand; concurrent callers see the same results as isolated
/// queries.
class CountMemo {
public:
    Integer get(Family family, std::int64_t k, std::uint64_t n);
    /// Values for 0..n.
    std::vector<Integer> prefix(Family family, std::int64_t k, std::uint64_t n);

private:
    using Key = std::pair<Family, std::int64_t>;
    const std::vector<Integer>& ensure(Family family, std::int64_t k, std::uint64_t n);

    std::mutex mutex_;
    std::map<Key, std::vector<Integer>> tables_;
};

}  // namespace partcount
