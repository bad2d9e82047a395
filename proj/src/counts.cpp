#include "partcount/counts.hpp"

#include "partcount/arith.hpp"
#include "partcount/bell.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace partcount {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 6> kMethodNames{{
    {Method::partial_bell, "partial-bell"},
    {Method::complete_bell, "complete-bell"},
    {Method::determinant, "determinant"},
    {Method::recurrence, "recurrence"},
    {Method::oracle_series, "oracle-series"},
    {Method::oracle_enumeration, "oracle-enumeration"},
}};

void require_colors(std::int64_t k) {
    if (k < 0) {
        throw DomainError("number of colors must be nonnegative, got " + std::to_string(k));
    }
}

CountResult make_result(Family family, std::int64_t k, std::uint64_t n, Method method,
                        Integer value) {
    return CountResult{family, family == Family::plane ? 0 : k, n, method, std::move(value)};
}

DivisorSumTable table_for(std::uint64_t n) { return build_divisor_table(std::max<std::uint64_t>(n, 1)); }

// Extends values[0..] up to index n using n a(n) = sum_{m=1}^{n} c(m) a(n-m).
template <typename Generator>
void extend_log_derivative(std::vector<Integer>& values, std::uint64_t n, Generator&& c,
                           std::string_view what) {
    if (values.empty()) {
        values.emplace_back(1);
    }
    std::vector<Integer> gen;
    gen.reserve(n);
    for (std::uint64_t m = 1; m <= n; ++m) {
        gen.push_back(c(m));
    }
    for (std::uint64_t t = values.size(); t <= n; ++t) {
        Integer sum = 0;
        for (std::uint64_t m = 1; m <= t; ++m) {
            sum += gen[m - 1] * values[t - m];
        }
        values.push_back(exact_div(sum, Integer(static_cast<unsigned long>(t)), what));
    }
}

void extend_colored(std::vector<Integer>& values, std::int64_t k, std::uint64_t n) {
    if (values.size() > n) {
        return;
    }
    const auto table = table_for(n);
    const Integer colors(static_cast<long>(k));
    extend_log_derivative(
        values, n, [&](std::uint64_t m) { return Integer(colors * table.sigma1(m)); },
        "colored recurrence");
}

void extend_plane(std::vector<Integer>& values, std::uint64_t n) {
    if (values.size() > n) {
        return;
    }
    const auto table = table_for(n);
    extend_log_derivative(
        values, n, [&](std::uint64_t m) { return table.sigma2(m); }, "plane recurrence");
}

HessenbergSpec divisor_hessenberg(std::uint64_t n, const DivisorSumTable& table,
                                  std::int64_t k, Family family) {
    HessenbergSpec spec;
    spec.n = n;
    spec.c.reserve(n);
    for (std::uint64_t m = 1; m <= n; ++m) {
        spec.c.push_back(family == Family::colored ? Integer(Integer(static_cast<long>(k)) * table.sigma1(m))
                                                   : table.sigma2(m));
    }
    return spec;
}

}  // namespace

std::string_view to_string(Family family) {
    return family == Family::colored ? "colored" : "plane";
}

std::string_view to_string(Method method) {
    for (const auto& [m, name] : kMethodNames) {
        if (m == method) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view text) {
    if (text == "colored") {
        return Family::colored;
    }
    if (text == "plane") {
        return Family::plane;
    }
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view text) {
    for (const auto& [m, name] : kMethodNames) {
        if (name == text) {
            return m;
        }
    }
    return std::nullopt;
}

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods = [] {
        std::vector<Method> out;
        for (const auto& entry : kMethodNames) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return methods;
}

bool method_supports(Method method, Family family) {
    return !(method == Method::partial_bell && family == Family::plane);
}

CountResult pk_partial_bell(std::int64_t k, std::uint64_t n) {
    require_colors(k);
    if (n == 0) {
        return make_result(Family::colored, k, n, Method::partial_bell, 1);
    }
    const auto args = BellArgumentSequence::pentagonal(n);
    const auto table = partial_bell_table(args, n);
    // The l = 0 term vanishes because B_{n,0} = 0 for n >= 1.
    Integer sum = 0;
    Integer rising = 1;
    for (std::uint64_t l = 1; l <= n; ++l) {
        rising *= static_cast<unsigned long>(k + static_cast<std::int64_t>(l) - 1);
        const Integer& bell = table.at(n, l);
        if (bell == 0) {
            continue;
        }
        if (l % 2 == 0) {
            sum += rising * bell;
        } else {
            sum -= rising * bell;
        }
    }
    return make_result(Family::colored, k, n, Method::partial_bell,
                       exact_div(sum, factorial(n), "partial-Bell p_k(n)"));
}

CountResult pk_complete_bell(std::int64_t k, std::uint64_t n) {
    require_colors(k);
    const auto table = table_for(n);
    const auto args = BellArgumentSequence::colored(k, table, n);
    return make_result(Family::colored, k, n, Method::complete_bell,
                       exact_div(complete_bell(args, n), factorial(n), "complete-Bell p_k(n)"));
}

CountResult pk_determinant(std::int64_t k, std::uint64_t n) {
    require_colors(k);
    if (n == 0) {
        return make_result(Family::colored, k, n, Method::determinant, 1);
    }
    const auto table = table_for(n);
    const auto det = hessenberg_det(divisor_hessenberg(n, table, k, Family::colored));
    return make_result(Family::colored, k, n, Method::determinant,
                       exact_div(det, factorial(n), "determinant p_k(n)"));
}

std::vector<Integer> pk_recurrence_prefix(std::int64_t k, std::uint64_t n) {
    require_colors(k);
    std::vector<Integer> values;
    extend_colored(values, k, n);
    return values;
}

CountResult pk_recurrence(std::int64_t k, std::uint64_t n) {
    auto values = pk_recurrence_prefix(k, n);
    return make_result(Family::colored, k, n, Method::recurrence, std::move(values[n]));
}

CountResult pp_complete_bell(std::uint64_t n) {
    const auto table = table_for(n);
    const auto args = BellArgumentSequence::plane(table, n);
    return make_result(Family::plane, 0, n, Method::complete_bell,
                       exact_div(complete_bell(args, n), factorial(n), "complete-Bell pp(n)"));
}

CountResult pp_determinant(std::uint64_t n) {
    if (n == 0) {
        return make_result(Family::plane, 0, n, Method::determinant, 1);
    }
    const auto table = table_for(n);
    const auto det = hessenberg_det(divisor_hessenberg(n, table, 0, Family::plane));
    return make_result(Family::plane, 0, n, Method::determinant,
                       exact_div(det, factorial(n), "determinant pp(n)"));
}

std::vector<Integer> pp_recurrence_prefix(std::uint64_t n) {
    std::vector<Integer> values;
    extend_plane(values, n);
    return values;
}

CountResult pp_recurrence(std::uint64_t n) {
    auto values = pp_recurrence_prefix(n);
    return make_result(Family::plane, 0, n, Method::recurrence, std::move(values[n]));
}

CountResult count(Family family, std::int64_t k, std::uint64_t n, Method method) {
    if (family == Family::colored) {
        require_colors(k);
    }
    switch (method) {
        case Method::partial_bell:
            if (family == Family::plane) {
                throw DomainError("partial-bell is defined for colored partitions only");
            }
            return pk_partial_bell(k, n);
        case Method::complete_bell:
            return family == Family::colored ? pk_complete_bell(k, n) : pp_complete_bell(n);
        case Method::determinant:
            return family == Family::colored ? pk_determinant(k, n) : pp_determinant(n);
        case Method::recurrence:
            return family == Family::colored ? pk_recurrence(k, n) : pp_recurrence(n);
        case Method::oracle_series:
            return make_result(family, k, n, method, oracle_series(family, k, n)[n]);
        case Method::oracle_enumeration:
            return make_result(family, k, n, method,
                               family == Family::colored ? oracle_enumerate_colored(k, n)
                                                         : oracle_enumerate_plane(n));
    }
    throw DomainError("unknown method");
}

const std::vector<Integer>& CountMemo::ensure(Family family, std::int64_t k, std::uint64_t n) {
    if (family == Family::colored) {
        require_colors(k);
    } else {
        k = 0;
    }
    auto& values = tables_[Key{family, k}];
    if (family == Family::colored) {
        extend_colored(values, k, n);
    } else {
        extend_plane(values, n);
    }
    return values;
}

Integer CountMemo::get(Family family, std::int64_t k, std::uint64_t n) {
    std::lock_guard lock(mutex_);
    return ensure(family, k, n)[n];
}

std::vector<Integer> CountMemo::prefix(Family family, std::int64_t k, std::uint64_t n) {
    std::lock_guard lock(mutex_);
    const auto& values = ensure(family, k, n);
    return {values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n) + 1};
}

}  // namespace partcount
