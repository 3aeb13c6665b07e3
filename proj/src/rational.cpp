#include "gt/rational.hpp"

#include <cctype>

#include "gt/errors.hpp"

namespace gt {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t i = 0;
    auto read_int = [&](const char* what) -> Integer {
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t digits_at = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits_at)
            throw ParseError(std::string("expected ") + what + " in rational", start);
        return Integer(s.substr(start, i - start));
    };
    Integer num = read_int("numerator");
    Integer den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_int("denominator");
        if (den == 0) throw ParseError("zero denominator", i - 1);
    }
    if (i != s.size()) throw ParseError("trailing characters in rational", i);
    return Rational(num, den);
}

std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace gt
