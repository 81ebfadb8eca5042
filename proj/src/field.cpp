#include "frs/field.hpp"

#include <limits>
#include <stdexcept>

namespace frs {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t q, Fe gamma) : q_(q), gamma_(gamma), gamma_order_(0) {
    if (!is_prime(q)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(q) + " is not prime");
    // Products must fit in 64 bits without widening.
    if (q > (std::uint64_t{1} << 32)) throw std::invalid_argument("PrimeField: modulus too large");
    if (gamma == 0 || gamma >= q) throw std::invalid_argument("PrimeField: gamma must lie in [1, q)");
    gamma_order_ = element_order(gamma);
}

Fe PrimeField::pow(Fe a, std::uint64_t e) const {
    Fe result = 1 % q_;
    Fe base = a % q_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Fe PrimeField::inv(Fe a) const {
    if (a == 0) throw std::invalid_argument("PrimeField: division by zero");
    return pow(a, q_ - 2);
}

std::uint64_t PrimeField::element_order(Fe a) const {
    if (a == 0) throw std::invalid_argument("PrimeField: zero has no multiplicative order");
    Fe x = a;
    std::uint64_t t = 1;
    while (x != 1) {
        x = mul(x, a);
        ++t;
    }
    return t;
}

PrimeField make_field(std::uint64_t q, std::uint64_t min_order) {
    if (!is_prime(q)) throw std::invalid_argument("make_field: modulus " + std::to_string(q) + " is not prime");
    if (min_order < 1 || min_order > q - 1)
        throw std::invalid_argument("make_field: no element of order " + std::to_string(min_order) + " can exist in GF(" +
                                    std::to_string(q) + ")");

    Fe fallback = 0;
    for (Fe a = 1; a < q; ++a) {
        PrimeField probe(q, a);
        if (probe.gamma_order() == q - 1) return probe;
        if (fallback == 0 && probe.gamma_order() >= min_order) fallback = a;
    }
    if (fallback != 0) return PrimeField(q, fallback);
    // Unreachable: a primitive root exists for every prime modulus.
    throw std::logic_error("make_field: no element of sufficient order found");
}

} // namespace frs
