#include "cli.hpp"

#include "partcount/arith.hpp"
#include "partcount/cache.hpp"
#include "partcount/counts.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace partcount::cli {

namespace {

/// A bad invocation detected after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A verification or bench mismatch; carries the diagnostic.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    std::optional<std::int64_t> k;
    std::uint64_t n = 0;
    std::uint64_t max_n = 0;
    std::int64_t max_k = 1;
    std::string method = "recurrence";
    std::string methods;
    std::string out_path;
    std::string cache_path;
    bool json = false;
};

Family require_family(const std::string& text) {
    if (auto family = parse_family(text)) {
        return *family;
    }
    throw UsageError("unknown family '" + text + "' (expected colored or plane)");
}

std::int64_t colors_for(Family family, const std::optional<std::int64_t>& k) {
    if (family == Family::colored) {
        if (!k) {
            throw UsageError("--k is required for colored partitions");
        }
        if (*k < 0) {
            throw UsageError("--k must be nonnegative");
        }
        return *k;
    }
    if (k) {
        throw UsageError("--k applies to colored partitions only");
    }
    return 0;
}

std::optional<ResultCache> open_cache(const std::string& flag) {
    std::string path = flag;
    if (path.empty()) {
        if (const char* env = std::getenv("PARTCOUNT_CACHE"); env != nullptr) {
            path = env;
        }
    }
    if (path.empty()) {
        return std::nullopt;
    }
    return ResultCache::open(path);
}

int cmd_count(const Options& opt, std::ostream& out) {
    const Family family = require_family(opt.family);
    const std::int64_t k = colors_for(family, opt.k);
    const auto method = parse_method(opt.method);
    if (!method) {
        throw UsageError("unknown method '" + opt.method + "'");
    }
    if (!method_supports(*method, family)) {
        throw UsageError(std::string(to_string(*method)) + " does not apply to " +
                         std::string(to_string(family)));
    }

    auto cache = open_cache(opt.cache_path);
    std::optional<std::string> value;
    if (cache) {
        value = cache->lookup(family, k, opt.n);
    }
    if (!value) {
        value = to_decimal(count(family, k, opt.n, *method).value);
        if (cache) {
            cache->store(CacheRecord{kCacheVersion, family, k, opt.n, *value});
        }
    }

    if (opt.json) {
        nlohmann::json j;
        j["family"] = std::string(to_string(family));
        j["k"] = family == Family::colored ? nlohmann::json(k) : nlohmann::json(nullptr);
        j["n"] = opt.n;
        j["method"] = std::string(to_string(*method));
        j["value"] = *value;
        out << j.dump() << '\n';
    } else {
        out << *value << '\n';
    }
    return kExitOk;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw UsageError("cannot write to '" + path + "'");
    }
    return file;
}

int cmd_table(const Options& opt) {
    const Family family = require_family(opt.family);
    const std::int64_t k = colors_for(family, opt.k);
    auto file = open_output(opt.out_path);
    const auto values = family == Family::colored ? pk_recurrence_prefix(k, opt.max_n)
                                                  : pp_recurrence_prefix(opt.max_n);
    auto cache = open_cache(opt.cache_path);
    file << "family,k,n,value\n";
    for (std::uint64_t n = 0; n <= opt.max_n; ++n) {
        const auto text = to_decimal(values[n]);
        file << to_string(family) << ',' << k << ',' << n << ',' << text << '\n';
        if (cache) {
            cache->store(CacheRecord{kCacheVersion, family, k, n, text});
        }
    }
    if (!file) {
        throw UsageError("write to '" + opt.out_path + "' failed");
    }
    return kExitOk;
}

std::string describe(Family family, std::int64_t k, std::uint64_t n) {
    std::ostringstream s;
    s << "family=" << to_string(family);
    if (family == Family::colored) {
        s << " k=" << k;
    }
    s << " n=" << n;
    return s.str();
}

void expect_equal(Family family, std::int64_t k, std::uint64_t n, std::string_view lhs_name,
                  const Integer& lhs, std::string_view rhs_name, const Integer& rhs) {
    if (lhs != rhs) {
        throw MismatchError("mismatch " + describe(family, k, n) + " methods=" +
                            std::string(lhs_name) + "," + std::string(rhs_name) + " values=" +
                            to_decimal(lhs) + "," + to_decimal(rhs));
    }
}

int cmd_verify(const Options& opt, std::ostream& out) {
    if (opt.max_n < 1 || opt.max_k < 1) {
        throw UsageError("verify needs --max-n >= 1 and --max-k >= 1");
    }
    std::map<std::string, std::size_t> passed;

    // Cross-method agreement against the series oracle.
    for (std::int64_t k = 1; k <= opt.max_k; ++k) {
        const auto series = oracle_series(Family::colored, k, opt.max_n);
        for (std::uint64_t n = 0; n <= opt.max_n; ++n) {
            for (Method m : {Method::partial_bell, Method::complete_bell, Method::determinant,
                             Method::recurrence}) {
                expect_equal(Family::colored, k, n, to_string(m), count(Family::colored, k, n, m).value,
                             "oracle-series", series[n]);
                ++passed["colored-methods"];
            }
        }
    }
    const auto plane_series = oracle_series(Family::plane, 0, opt.max_n);
    for (std::uint64_t n = 0; n <= opt.max_n; ++n) {
        for (Method m : {Method::complete_bell, Method::determinant, Method::recurrence}) {
            expect_equal(Family::plane, 0, n, to_string(m), count(Family::plane, 0, n, m).value,
                         "oracle-series", plane_series[n]);
            ++passed["plane-methods"];
        }
    }

    // Brute-force enumeration inside its window.
    const std::uint64_t enum_n = std::min(opt.max_n, kEnumerationMaxN);
    for (std::int64_t k = 1; k <= std::min(opt.max_k, kEnumerationMaxK); ++k) {
        const auto reference = pk_recurrence_prefix(k, enum_n);
        for (std::uint64_t n = 0; n <= enum_n; ++n) {
            expect_equal(Family::colored, k, n, "oracle-enumeration",
                         oracle_enumerate_colored(k, n), "recurrence", reference[n]);
            ++passed["enumeration"];
        }
    }
    const auto plane_reference = pp_recurrence_prefix(enum_n);
    for (std::uint64_t n = 0; n <= enum_n; ++n) {
        expect_equal(Family::plane, 0, n, "oracle-enumeration", oracle_enumerate_plane(n),
                     "recurrence", plane_reference[n]);
        ++passed["enumeration"];
    }

    // Ordinary partitions from Euler's recurrence.
    const auto euler = partition_numbers_pentagonal(opt.max_n);
    const auto single = pk_recurrence_prefix(1, opt.max_n);
    for (std::uint64_t n = 0; n <= opt.max_n; ++n) {
        expect_equal(Family::colored, 1, n, "pentagonal-recurrence", euler[n], "recurrence",
                     single[n]);
        ++passed["pentagonal-recurrence"];
    }

    // Euler product coefficients against lambda_i / i!.
    const auto product = euler_product(opt.max_n);
    for (std::uint64_t i = 1; i <= opt.max_n; ++i) {
        const auto lambda = pentagonal_lambda(i).value;
        if (lambda != product[i] * factorial(i)) {
            throw MismatchError("pentagonal coefficient mismatch at i=" + std::to_string(i));
        }
        ++passed["pentagonal-identity"];
    }

    // p_k(n) increases strictly in k (n >= 1) and weakly in n.
    std::vector<Integer> previous_k;
    for (std::int64_t k = 1; k <= opt.max_k; ++k) {
        const auto row = pk_recurrence_prefix(k, opt.max_n);
        for (std::uint64_t n = 1; n <= opt.max_n; ++n) {
            if (row[n] < row[n - 1] || (!previous_k.empty() && row[n] <= previous_k[n])) {
                throw MismatchError("monotonicity violated at " +
                                    describe(Family::colored, k, n));
            }
            ++passed["monotonicity"];
        }
        previous_k = row;
    }

    for (const auto& [name, checks] : passed) {
        out << name << ": " << checks << " checks passed\n";
    }
    out << "verify: ok\n";
    return kExitOk;
}

std::vector<std::uint64_t> geometric_ladder(std::uint64_t max_n) {
    std::vector<std::uint64_t> ladder;
    for (std::uint64_t n = 1; n <= max_n; n *= 2) {
        ladder.push_back(n);
    }
    if (ladder.empty() || ladder.back() != max_n) {
        ladder.push_back(max_n);
    }
    return ladder;
}

int cmd_bench(const Options& opt, std::ostream& out) {
    std::vector<Method> methods;
    {
        std::stringstream list(opt.methods);
        std::string name;
        while (std::getline(list, name, ',')) {
            if (name.empty()) {
                continue;
            }
            auto method = parse_method(name);
            if (!method) {
                throw UsageError("unknown method '" + name + "'");
            }
            methods.push_back(*method);
        }
    }
    if (methods.empty()) {
        methods = {Method::partial_bell, Method::complete_bell, Method::determinant,
                   Method::recurrence, Method::oracle_series};
    }

    std::vector<Family> families;
    if (opt.family.empty() || opt.family == "all") {
        families = {Family::colored, Family::plane};
    } else {
        families = {require_family(opt.family)};
    }
    const std::int64_t k = opt.k.value_or(1);
    if (k < 0) {
        throw UsageError("--k must be nonnegative");
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.out_path.empty() && opt.out_path != "-") {
        file = open_output(opt.out_path);
        sink = &file;
    }

    struct Timed {
        Method method;
        Integer value;
        long long micros;
    };

    *sink << "family,k,n,method,wall_time_us,value_digits\n";
    for (Family family : families) {
        const std::int64_t colors = family == Family::colored ? k : 0;
        for (std::uint64_t n : geometric_ladder(opt.max_n)) {
            std::vector<Timed> rows;
            for (Method m : methods) {
                if (!method_supports(m, family)) {
                    continue;
                }
                if (m == Method::oracle_enumeration &&
                    (n > kEnumerationMaxN || colors > kEnumerationMaxK)) {
                    continue;
                }
                const auto start = std::chrono::steady_clock::now();
                auto result = count(family, colors, n, m);
                const auto stop = std::chrono::steady_clock::now();
                rows.push_back(
                    {m, std::move(result.value),
                     std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count()});
            }
            for (const auto& row : rows) {
                expect_equal(family, colors, n, to_string(rows.front().method),
                             rows.front().value, to_string(row.method), row.value);
            }
            for (const auto& row : rows) {
                *sink << to_string(family) << ',' << colors << ',' << n << ','
                      << to_string(row.method) << ',' << row.micros << ','
                      << decimal_digits(row.value) << '\n';
            }
        }
    }
    if (!*sink) {
        throw UsageError("write to '" + opt.out_path + "' failed");
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact k-colored and plane partition counts"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--cache", opt.cache_path,
                   "Line-delimited JSON result cache (default: $PARTCOUNT_CACHE)");

    auto* count_cmd = app.add_subcommand("count", "Print p_k(n) or pp(n)");
    count_cmd->fallthrough();
    count_cmd->add_option("family", opt.family, "colored or plane")->required();
    count_cmd->add_option("--k", opt.k, "Number of colors (colored only)");
    count_cmd->add_option("--n", opt.n, "Size")->required();
    count_cmd->add_option("--method", opt.method,
                          "partial-bell, complete-bell, determinant, recurrence, "
                          "oracle-series or oracle-enumeration");
    count_cmd->add_flag("--json", opt.json, "Print a JSON object");

    auto* table_cmd = app.add_subcommand("table", "Write a CSV of values for n = 0..max-n");
    table_cmd->fallthrough();
    table_cmd->add_option("family", opt.family, "colored or plane")->required();
    table_cmd->add_option("--k", opt.k, "Number of colors (colored only)");
    table_cmd->add_option("--max-n", opt.max_n, "Largest n")->required();
    table_cmd->add_option("--out", opt.out_path, "CSV output path")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check every method and oracle");
    verify_cmd->add_option("--max-n", opt.max_n, "Largest n in the sweep")->required();
    verify_cmd->add_option("--max-k", opt.max_k, "Largest number of colors")->required();

    auto* bench_cmd = app.add_subcommand("bench", "Time each method on a doubling ladder of n");
    bench_cmd->add_option("--max-n", opt.max_n, "Largest n")->required();
    bench_cmd->add_option("--methods", opt.methods, "Comma-separated method names");
    bench_cmd->add_option("--family", opt.family, "colored, plane or all (default all)");
    bench_cmd->add_option("--k", opt.k, "Number of colors for colored rows (default 1)");
    bench_cmd->add_option("--out", opt.out_path, "CSV output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (count_cmd->parsed()) {
            return cmd_count(opt, out);
        }
        if (table_cmd->parsed()) {
            return cmd_table(opt);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(opt, out);
        }
        return cmd_bench(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedSizeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const MismatchError& e) {
        err << e.what() << '\n';
        return kExitFailure;
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitFailure;
    } catch (const CacheError& e) {
        err << "cache error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace partcount::cli
