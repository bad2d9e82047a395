#include "partcount/integer.hpp"

#include <cctype>

namespace partcount {

Integer exact_div(const Integer& num, const Integer& den, std::string_view what) {
    if (den == 0) {
        throw InconsistencyError(std::string(what) + ": division by zero");
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw InconsistencyError(std::string(what) + ": " + num.get_str() +
                                 " is not divisible by " + den.get_str());
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

Integer from_decimal(std::string_view text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw DomainError("not a decimal integer: '" + std::string(text) + "'");
        }
    }
    // mpz_class rejects a leading '+'.
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

std::size_t decimal_digits(const Integer& value) {
    Integer magnitude = abs(value);
    return magnitude.get_str(10).size();
}

}  // namespace partcount
