#include "fano/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fano {

std::string to_string(const Rational& q) {
    const Integer n = boost::multiprecision::numerator(q);
    const Integer d = boost::multiprecision::denominator(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

namespace {

Integer parse_integer(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("empty integer");
    Integer value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad digit in '" + std::string(s) + "'");
        value = value * 10 + (s[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
    const Integer num = parse_integer(text.substr(0, slash), true);
    const Integer den = parse_integer(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace fano
