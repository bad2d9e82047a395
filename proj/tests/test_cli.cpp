#include <doctest.h>

#include "cli.hpp"
#include "partcount/cache.hpp"
#include "partcount/counts.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using partcount::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

fs::path temp_path(const std::string& name) {
    auto p = fs::temp_directory_path() / ("partcount_cli_" + name);
    fs::remove(p);
    return p;
}

}  // namespace

TEST_CASE("count prints exact values") {
    CHECK(invoke({"count", "colored", "--k", "2", "--n", "2"}).out == "5\n");
    CHECK(invoke({"count", "colored", "--k", "1", "--n", "0"}).out == "1\n");
    const auto plane = invoke({"count", "plane", "--n", "700"});
    CHECK(plane.code == 0);
    CHECK(plane.out == "1542248695905922088013690041381656661664744761954709483748320717869\n");
    for (const char* method : {"partial-bell", "complete-bell", "determinant", "recurrence",
                               "oracle-series", "oracle-enumeration"}) {
        CHECK(invoke({"count", "colored", "--k", "3", "--n", "7", "--method", method}).out ==
              "429\n");
    }
}

TEST_CASE("count JSON output round-trips") {
    const auto r = invoke({"count", "colored", "--k", "30", "--n", "200", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("family") == "colored");
    CHECK(j.at("k") == 30);
    CHECK(j.at("n") == 200);
    CHECK(j.at("method") == "recurrence");
    const auto value = j.at("value").get<std::string>();
    CHECK(value == "23945275792616100703623332622769220026826156718318470749445535353589");
    CHECK(partcount::to_decimal(partcount::from_decimal(value)) == value);
    CHECK(j.dump() + "\n" == r.out);

    const auto plane = nlohmann::json::parse(invoke({"count", "plane", "--n", "3", "--json"}).out);
    CHECK(plane.at("k").is_null());
    CHECK(plane.at("value") == "6");
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"count", "colored", "--n", "2"}).code == 2);
    CHECK(invoke({"count", "plane", "--k", "2", "--n", "2"}).code == 2);
    CHECK(invoke({"count", "cubic", "--n", "2"}).code == 2);
    CHECK(invoke({"count", "colored", "--k", "-1", "--n", "2"}).code == 2);
    CHECK(invoke({"count", "colored", "--k", "2", "--n", "2", "--method", "magic"}).code == 2);
    CHECK(invoke({"count", "plane", "--n", "2", "--method", "partial-bell"}).code == 2);
    CHECK(invoke({"count", "plane", "--n", "20", "--method", "oracle-enumeration"}).code == 2);
    CHECK(invoke({"count", "plane", "--n", "abc"}).code == 2);
    CHECK(invoke({"bench", "--max-n", "4", "--methods", "recurrence,warp"}).code == 2);
    CHECK(invoke({"verify", "--max-n", "0", "--max-k", "1"}).code == 2);
    CHECK(invoke({"table", "plane", "--max-n", "3", "--out", "/nonexistent/dir/t.csv"}).code == 2);
    const auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("count") != std::string::npos);
}

TEST_CASE("table writes CSV rows") {
    const auto path = temp_path("plane.csv");
    REQUIRE(invoke({"table", "plane", "--max-n", "3", "--out", path.string()}).code == 0);
    CHECK(read_lines(path) == std::vector<std::string>{"family,k,n,value", "plane,0,0,1",
                                                       "plane,0,1,1", "plane,0,2,3",
                                                       "plane,0,3,6"});

    REQUIRE(invoke({"table", "colored", "--k", "1", "--max-n", "5", "--out", path.string()}).code == 0);
    const auto colored = read_lines(path);
    REQUIRE(colored.size() == 7);
    const std::vector<std::string> values{"1", "1", "2", "3", "5", "7"};
    for (std::size_t n = 0; n < values.size(); ++n) {
        CHECK(colored[n + 1] == "colored,1," + std::to_string(n) + "," + values[n]);
    }

    REQUIRE(invoke({"table", "plane", "--max-n", "0", "--out", path.string()}).code == 0);
    CHECK(read_lines(path) == std::vector<std::string>{"family,k,n,value", "plane,0,0,1"});
    fs::remove(path);
}

TEST_CASE("verify sweep passes") {
    const auto r = invoke({"verify", "--max-n", "30", "--max-k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: ok") != std::string::npos);
    CHECK(r.out.find("colored-methods: 372 checks passed") != std::string::npos);
    CHECK(r.out.find("plane-methods: 93 checks passed") != std::string::npos);
}

TEST_CASE("bench rows agree and report digits") {
    const auto path = temp_path("bench.csv");
    const auto r = invoke({"bench", "--max-n", "200", "--family", "colored", "--k", "30",
                           "--methods", "recurrence,determinant,complete-bell", "--out",
                           path.string()});
    REQUIRE(r.code == 0);
    const auto lines = read_lines(path);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "family,k,n,method,wall_time_us,value_digits");
    // 1, 2, 4, ..., 128, 200 for three methods.
    CHECK(lines.size() == 1 + 9 * 3);
    std::size_t rows_at_200 = 0;
    for (const auto& line : lines) {
        if (line.rfind("colored,30,200,", 0) == 0) {
            ++rows_at_200;
            CHECK(line.substr(line.rfind(',') + 1) == "68");
        }
    }
    CHECK(rows_at_200 == 3);
    fs::remove(path);

    const auto plane = invoke({"bench", "--max-n", "700", "--family", "plane", "--methods",
                               "recurrence"});
    CHECK(plane.code == 0);
    CHECK(plane.out.find("plane,0,700,recurrence,") != std::string::npos);
}

TEST_CASE("cache flag and environment variable") {
    const auto path = temp_path("cache.jsonl");
    CHECK(invoke({"--cache", path.string(), "count", "colored", "--k", "2", "--n", "2"}).out ==
          "5\n");
    CHECK(invoke({"count", "plane", "--n", "3", "--cache", path.string()}).out == "6\n");
    auto lines = read_lines(path);
    REQUIRE(lines.size() == 2);
    CHECK(partcount::parse_cache_line(lines[0]) ==
          partcount::CacheRecord{1, partcount::Family::colored, 2, 2, "5"});

    // Cached value is served without recomputation.
    {
        std::ofstream out(path, std::ios::app);
        out << R"({"version":1,"family":"plane","k":0,"n":40,"value":"999"})" << '\n';
    }
    CHECK(invoke({"count", "plane", "--n", "40", "--cache", path.string()}).out == "999\n");

    ::setenv("PARTCOUNT_CACHE", path.string().c_str(), 1);
    CHECK(invoke({"count", "plane", "--n", "40"}).out == "999\n");
    CHECK(invoke({"count", "plane", "--n", "4"}).out == "13\n");
    ::unsetenv("PARTCOUNT_CACHE");
    CHECK(read_lines(path).size() == 4);

    {
        std::ofstream out(path, std::ios::app);
        out << R"({"version":1,"family":"plane","k":0,"n":40,"value":"998"})" << '\n';
    }
    const auto corrupt = invoke({"count", "plane", "--n", "40", "--cache", path.string()});
    CHECK(corrupt.code == 1);
    CHECK(corrupt.err.find("conflicting") != std::string::npos);

    {
        std::ofstream out(path, std::ios::trunc);
        out << "not json\n";
    }
    const auto malformed = invoke({"count", "plane", "--n", "1", "--cache", path.string()});
    CHECK(malformed.code == 1);
    CHECK(malformed.err.find(":1:") != std::string::npos);
    fs::remove(path);
}
