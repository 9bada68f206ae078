#include "graphzeta/rational.hpp"
#include "graphzeta/errors.hpp"

#include <cctype>

namespace graphzeta {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational rational_from_string(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos
                               ? std::string_view("1")
                               : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    Rational value(std::string(text), 10);
    if (value.get_den() == 0)
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

Rational rational_pow(const Rational& value, unsigned long exponent) {
    Rational result(1);
    Rational base = value;
    while (exponent != 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

} // namespace graphzeta
