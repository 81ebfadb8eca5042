#pragma once

#include "frs/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frs {

/// Dense univariate polynomial over a prime field. Coefficient i multiplies
/// X^i. The representation is canonical: the highest stored coefficient is
/// nonzero, and the zero polynomial stores no coefficients at all, so its
/// degree is "none" rather than an integer smuggled in as -1.
class Poly {
  public:
    Poly(PrimeField field, std::vector<Fe> coeffs);

    static Poly zero(const PrimeField& field) { return Poly(field, {}); }
    static Poly constant(const PrimeField& field, Fe c) { return Poly(field, {c}); }
    static Poly monomial(const PrimeField& field, std::size_t power, Fe coeff = 1);

    const PrimeField& field() const { return field_; }
    const std::vector<Fe>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;

    /// Coefficient of X^i; zero beyond the stored range.
    Fe coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    /// Horner evaluation.
    Fe eval(Fe x) const;

    bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

  private:
    PrimeField field_;
    std::vector<Fe> coeffs_;
};

Poly operator+(const Poly& p, const Poly& r);
Poly operator-(const Poly& p, const Poly& r);
Poly operator*(const Poly& p, const Poly& r);

Poly scale(const Poly& p, Fe c);

/// p(cX): coefficient i gets multiplied by c^i.
Poly dilate(const Poly& p, Fe c);

/// Canonical ordering on same-field polynomials: lexicographic on the
/// coefficient sequence from X^0 upward (shorter sequences padded with 0).
/// Used to sort decoder and oracle lists so set comparisons are exact.
bool poly_less(const Poly& a, const Poly& b);

/// Text form: space-separated decimal coefficients, lowest degree first.
/// The zero polynomial prints as "0".
std::string to_string(const Poly& p);
Poly parse_poly(const PrimeField& field, const std::string& text);

} // namespace frs
