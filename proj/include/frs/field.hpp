#pragma once

#include <cstdint>
#include <string>

namespace frs {

// A field element, always kept reduced to [0, q). Elements are plain
// integers; every operation goes through the owning PrimeField.
using Fe = std::uint64_t;

/// Arithmetic in GF(q) for a prime modulus q, together with a designated
/// element gamma whose exact multiplicative order is recorded. All values
/// passed in must already be reduced; all results are reduced.
///
/// The type is a small immutable value (q, gamma, order); copies are cheap
/// and shared use across threads is safe.
class PrimeField {
  public:
    /// Validates that q is prime (trial division; moduli here are small) and
    /// that gamma is a unit, then records gamma's exact order.
    PrimeField(std::uint64_t q, Fe gamma);

    std::uint64_t q() const { return q_; }
    Fe gamma() const { return gamma_; }
    std::uint64_t gamma_order() const { return gamma_order_; }

    Fe reduce(std::uint64_t v) const { return v % q_; }
    Fe add(Fe a, Fe b) const { return (a + b) % q_; }
    Fe sub(Fe a, Fe b) const { return (a + q_ - b) % q_; }
    Fe neg(Fe a) const { return a == 0 ? 0 : q_ - a; }
    Fe mul(Fe a, Fe b) const { return (a * b) % q_; }

    /// a^e by square-and-multiply. pow(a, 0) = 1 for every a, including
    /// a = 0 (the empty-product convention; no caller passes 0^0 with a
    /// nonzero gamma in play, but the value is pinned down regardless).
    Fe pow(Fe a, std::uint64_t e) const;

    /// Multiplicative inverse via Fermat. Throws std::invalid_argument on 0.
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    /// Exact multiplicative order of a unit a (smallest t > 0 with a^t = 1).
    std::uint64_t element_order(Fe a) const;

    bool operator==(const PrimeField& other) const = default;

    /// Fields are arithmetic-compatible iff the modulus matches; gamma is
    /// code metadata and does not affect ring operations.
    bool same_modulus(const PrimeField& other) const { return q_ == other.q_; }

  private:
    std::uint64_t q_;
    Fe gamma_;
    std::uint64_t gamma_order_;
};

bool is_prime(std::uint64_t n);

/// Builds GF(q) with a gamma of order >= min_order. A primitive element
/// (order exactly q-1) always exists for prime q and is preferred; the
/// search walks candidates in increasing order, so the result is the
/// smallest primitive root.
PrimeField make_field(std::uint64_t q, std::uint64_t min_order);

} // namespace frs
