#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partcount/arith.hpp"
#include "partcount/bell.hpp"
#include "partcount/counts.hpp"

#include <optional>
#include <string>
#include <vector>

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

// Python int <-> mpz_class through decimal text.
namespace pybind11::detail {
template <>
struct type_caster<partcount::Integer> {
    PYBIND11_TYPE_CASTER(partcount::Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) {
            return false;
        }
        value = partcount::from_decimal(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const partcount::Integer& src, return_value_policy, handle) {
        return PyLong_FromString(src.get_str(10).c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

using namespace partcount;

Family family_arg(const std::string& text) {
    if (auto family = parse_family(text)) {
        return *family;
    }
    throw DomainError("unknown family '" + text + "'");
}

Method method_arg(const std::string& text) {
    if (auto method = parse_method(text)) {
        return *method;
    }
    throw DomainError("unknown method '" + text + "'");
}

std::uint64_t size_arg(std::int64_t n, const char* name) {
    if (n < 0) {
        throw DomainError(std::string(name) + " must be nonnegative");
    }
    return static_cast<std::uint64_t>(n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact k-colored and plane partition counts";

    // DomainError derives from std::domain_error, which pybind11 maps to ValueError.
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
    py::register_exception<UnsupportedSizeError>(m, "UnsupportedSizeError", PyExc_ValueError);

    m.def("factorial", [](std::int64_t n) { return factorial(size_arg(n, "n")); }, py::arg("n"));
    m.def("binomial",
          [](std::int64_t n, std::int64_t r) { return binomial(size_arg(n, "n"), size_arg(r, "r")); },
          py::arg("n"), py::arg("r"));
    m.def("rising_factorial",
          [](std::int64_t k, std::int64_t l) {
              return rising_factorial(size_arg(k, "k"), size_arg(l, "l"));
          },
          py::arg("k"), py::arg("l"));

    m.def("divisor_sums",
          [](std::int64_t max_n) {
              const auto table = build_divisor_table(size_arg(max_n, "max_n"));
              std::vector<Integer> s1, s2;
              for (std::size_t i = 1; i <= table.max_n(); ++i) {
                  s1.push_back(table.sigma1(i));
                  s2.push_back(table.sigma2(i));
              }
              return py::make_tuple(s1, s2);
          },
          py::arg("max_n"), "Lists (sigma(1..max_n), sigma2(1..max_n)).");

    m.def("pentagonal_lambda",
          [](std::int64_t i) {
              const auto c = pentagonal_lambda(size_arg(i, "i"));
              py::dict d;
              d["index"] = c.index;
              d["m"] = c.m ? py::cast(*c.m) : py::none();
              d["sign"] = c.sign ? py::cast(*c.sign) : py::none();
              d["value"] = c.value;
              return d;
          },
          py::arg("i"));

    m.def("partial_bell_table",
          [](std::vector<Integer> args, std::int64_t n_max) {
              const auto table =
                  partial_bell_table(BellArgumentSequence(std::move(args)), size_arg(n_max, "n_max"));
              std::vector<std::vector<Integer>> rows;
              for (std::size_t n = 0; n <= table.n_max(); ++n) {
                  const auto row = table.row(n);
                  rows.emplace_back(row.begin(), row.end());
              }
              return rows;
          },
          py::arg("args"), py::arg("n_max"), "Rows B[n][0..n] of partial Bell values.");
    m.def("partial_bell_explicit",
          [](std::vector<Integer> args, std::int64_t n, std::int64_t blocks) {
              return partial_bell_explicit(BellArgumentSequence(std::move(args)), size_arg(n, "n"),
                                           size_arg(blocks, "blocks"));
          },
          py::arg("args"), py::arg("n"), py::arg("blocks"));
    m.def("complete_bell",
          [](std::vector<Integer> args, std::int64_t n) {
              return complete_bell(BellArgumentSequence(std::move(args)), size_arg(n, "n"));
          },
          py::arg("args"), py::arg("n"));
    m.def("hessenberg_det",
          [](std::vector<Integer> c) {
              HessenbergSpec spec{std::move(c), 0};
              spec.n = spec.c.size();
              return hessenberg_det(spec);
          },
          py::arg("c"));
    m.def("dense_det", &dense_det_oracle, py::arg("matrix"));

    m.def("count",
          [](const std::string& family, std::int64_t n, std::int64_t k, const std::string& method) {
              return count(family_arg(family), k, size_arg(n, "n"), method_arg(method)).value;
          },
          py::arg("family"), py::arg("n"), py::arg("k") = 0, py::arg("method") = "recurrence");
    m.def("pk",
          [](std::int64_t k, std::int64_t n, const std::string& method) {
              return count(Family::colored, k, size_arg(n, "n"), method_arg(method)).value;
          },
          py::arg("k"), py::arg("n"), py::arg("method") = "recurrence",
          "Number of k-colored partitions of n.");
    m.def("pp",
          [](std::int64_t n, const std::string& method) {
              return count(Family::plane, 0, size_arg(n, "n"), method_arg(method)).value;
          },
          py::arg("n"), py::arg("method") = "recurrence", "Number of plane partitions of n.");
    m.def("table",
          [](const std::string& family, std::int64_t max_n, std::int64_t k) {
              const auto f = family_arg(family);
              const auto n = size_arg(max_n, "max_n");
              return f == Family::colored ? pk_recurrence_prefix(k, n) : pp_recurrence_prefix(n);
          },
          py::arg("family"), py::arg("max_n"), py::arg("k") = 0);
    m.def("oracle_series",
          [](const std::string& family, std::int64_t order, std::int64_t k) {
              return oracle_series(family_arg(family), k, size_arg(order, "order")).coeffs();
          },
          py::arg("family"), py::arg("order"), py::arg("k") = 0);
    m.def("oracle_enumerate_colored",
          [](std::int64_t k, std::int64_t n) { return oracle_enumerate_colored(k, size_arg(n, "n")); },
          py::arg("k"), py::arg("n"));
    m.def("oracle_enumerate_plane",
          [](std::int64_t n) { return oracle_enumerate_plane(size_arg(n, "n")); }, py::arg("n"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
