#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace frs {

// All radii, rates and agreement thresholds are exact rationals. Several
// experiments sit exactly on a ball boundary, so floating point is never
// used for comparisons anywhere in the library.
using Rational = boost::rational<std::int64_t>;

// Largest integer <= r. Only called with non-negative values in practice,
// but correct for negative ones too.
inline std::int64_t floor_rational(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

// Accepts "a/b" or a bare integer "a".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

} // namespace frs
