#include "freecalc/scalar.hpp"

#include <cctype>

namespace freecalc {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    size_t pos = 0;
    auto digits = [&](size_t start) {
        size_t p = start;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == start) throw ParseError("malformed rational literal '" + text + "'");
        return p;
    };
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    pos = digits(pos);
    if (pos == text.size()) return Rational(text);
    if (text[pos] != '/') throw ParseError("malformed rational literal '" + text + "'");
    size_t den_start = pos + 1;
    if (den_start < text.size() && text[den_start] == '+') ++den_start;
    size_t end = digits(den_start);
    if (end != text.size()) throw ParseError("malformed rational literal '" + text + "'");
    BigInt num(text.substr(0, pos));
    BigInt den(text.substr(den_start));
    if (den == 0) throw ParseError("rational literal with zero denominator");
    return Rational(num, den);
}

std::string rational_str(const Rational& x) { return x.str(); }

}  // namespace freecalc
