#include "partcount/series.hpp"

#include <algorithm>
#include <utility>

namespace partcount {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Integer(0)) {
    coeffs_[0] = 1;
}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw DomainError("a truncated series needs at least the constant term");
    }
}

TruncatedSeries& TruncatedSeries::divide_by_one_minus_qj(std::size_t j) {
    if (j == 0) {
        throw DomainError("1 / (1 - q^0) is not a power series");
    }
    for (std::size_t i = j; i < coeffs_.size(); ++i) {
        coeffs_[i] += coeffs_[i - j];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::multiply_by_one_minus_qj(std::size_t j) {
    if (j == 0) {
        throw DomainError("(1 - q^0) annihilates the series");
    }
    for (std::size_t i = coeffs_.size(); i-- > j;) {
        coeffs_[i] -= coeffs_[i - j];
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Integer> out(order + 1, Integer(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries euler_product(std::size_t order) {
    TruncatedSeries series(order);
    for (std::size_t j = 1; j <= order; ++j) {
        series.multiply_by_one_minus_qj(j);
    }
    return series;
}

}  // namespace partcount
