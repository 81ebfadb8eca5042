#include "frs/rational.hpp"

#include <stdexcept>

namespace frs {

namespace {

std::int64_t parse_int(const std::string& text) {
    std::size_t used = 0;
    std::int64_t v;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: not a number: '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("parse_rational: trailing characters in '" + text + "'");
    return v;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace frs
