#include "qweingarten/rational.hpp"

#include <stdexcept>

namespace qweingarten {

namespace {

bool is_decimal_integer(std::string_view text) {
    if (!text.empty() && text.front() == '-') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

std::string to_string(const BigRational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    BigRational out(BigInt(std::string(num), 10), BigInt(std::string(den), 10));
    if (out.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    out.canonicalize();
    return out;
}

std::string to_decimal(const BigRational& value, int digits) {
    if (digits < 0) {
        throw std::invalid_argument("to_decimal: negative digit count");
    }
    BigInt scale = pow(BigInt(10), static_cast<unsigned long>(digits));
    BigInt num = abs(value.get_num()) * scale;
    const BigInt& den = value.get_den();
    BigInt quotient = num / den;
    BigInt remainder = num - quotient * den;
    if (2 * remainder >= den) {
        quotient += 1;
    }
    std::string body = quotient.get_str(10);
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    if (sgn(value) < 0 && quotient != 0) {
        body.insert(0, 1, '-');
    }
    return body;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

BigRational pow(const BigRational& base, unsigned long exponent) {
    return BigRational(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
}

} // namespace qweingarten
