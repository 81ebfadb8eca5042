#include "frs/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace frs {

Rational decoding_radius(std::size_t m, std::size_t k, const Rational& R) {
    if (k < 1 || k > m) throw std::invalid_argument("decoding_radius: need 1 <= k <= m");
    if (R <= Rational(0)) throw std::invalid_argument("decoding_radius: rate must be positive");
    const auto mi = static_cast<std::int64_t>(m);
    const auto ki = static_cast<std::int64_t>(k);
    const Rational radius = Rational(ki, ki + 1) * (Rational(1) - Rational(mi, mi - ki + 1) * R);
    if (radius <= Rational(0))
        throw std::invalid_argument("decoding_radius: rate too high for this k and m (radius would be <= 0)");
    return radius;
}

std::uint64_t generic_list_bound(std::uint64_t k, std::uint64_t d) {
    if (k < 1 || d < 1) throw std::invalid_argument("generic_list_bound: need k >= 1 and d >= 1");
    std::uint64_t out = k;
    for (std::uint64_t i = 1; i < d; ++i) out *= k + 1;
    return out;
}

std::uint64_t frs_affine_bound(std::uint64_t k, std::uint64_t d) {
    if (k <= d) throw std::invalid_argument("frs_affine_bound: requires k > d");
    return (k - 1) * d + 1;
}

std::uint64_t frs_list_bound(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("frs_list_bound: need k >= 1");
    return (k - 1) * (k - 1) + 1;
}

RadiusOrder johnson_compare(std::uint64_t k, const Rational& R) {
    if (R <= Rational(0) || R >= Rational(1)) throw std::invalid_argument("johnson_compare: need 0 < R < 1");
    const auto ki = static_cast<std::int64_t>(k);
    const Rational rho = Rational(ki, ki + 1) * (Rational(1) - R);
    // rho vs 1 - sqrt(R): both 1 - rho and sqrt(R) are nonnegative here, so
    // compare squares. rho > 1 - sqrt(R) <=> sqrt(R) > 1 - rho <=> R > (1-rho)^2.
    const Rational rhs = (Rational(1) - rho) * (Rational(1) - rho);
    if (R > rhs) return RadiusOrder::frs_larger;
    if (R == rhs) return RadiusOrder::equal;
    return RadiusOrder::johnson_larger;
}

std::size_t min_folding(std::size_t k, const Rational& R, const Rational& eps) {
    if (eps <= Rational(0)) throw std::invalid_argument("min_folding: eps must be positive");
    if (R <= Rational(0) || R >= Rational(1)) throw std::invalid_argument("min_folding: need 0 < R < 1");
    const auto ki = static_cast<std::int64_t>(k);
    const Rational target = Rational(ki, ki + 1) * (Rational(1) - R - eps);
    for (std::size_t m = k;; ++m) {
        const auto mi = static_cast<std::int64_t>(m);
        // Radius is only defined once R < (m-k+1)/m.
        if (R >= Rational(mi - ki + 1, mi)) continue;
        if (decoding_radius(m, k, R) >= target) return m;
    }
}

BoundReport bound_report(std::size_t m, std::size_t k, const Rational& R, std::size_t d) {
    BoundReport r;
    r.m = m;
    r.k = k;
    r.rate = R;
    r.d = d;
    r.radius = decoding_radius(m, k, R);
    r.generic_bound = d >= 1 ? generic_list_bound(k, d) : 1;
    r.affine_bound_defined = k > d;
    if (r.affine_bound_defined) r.affine_bound = frs_affine_bound(k, d);
    r.list_bound = frs_list_bound(k);
    r.johnson_radius = 1.0 - std::sqrt(boost::rational_cast<double>(R));
    r.johnson_order = johnson_compare(k, R);
    return r;
}

namespace {

const char* order_name(RadiusOrder o) {
    switch (o) {
        case RadiusOrder::frs_larger: return "frs_larger";
        case RadiusOrder::equal: return "equal";
        case RadiusOrder::johnson_larger: return "johnson_larger";
    }
    return "?";
}

} // namespace

std::string to_text(const BoundReport& r) {
    std::ostringstream out;
    out << "m               " << r.m << "\n"
        << "k               " << r.k << "\n"
        << "rate            " << to_string(r.rate) << "\n"
        << "d               " << r.d << "\n"
        << "radius          " << to_string(r.radius) << "\n"
        << "generic_bound   " << r.generic_bound << "\n"
        << "affine_bound    " << (r.affine_bound_defined ? std::to_string(r.affine_bound) : std::string("n/a (k <= d)"))
        << "\n"
        << "list_bound      " << r.list_bound << "\n";
    out.precision(6);
    out << "johnson_radius  " << std::fixed << r.johnson_radius << "\n"
        << "johnson_order   " << order_name(r.johnson_order) << "\n";
    return out.str();
}

std::string to_csv(const BoundReport& r) {
    std::ostringstream out;
    out << "m,k,rate,d,radius,generic_bound,affine_bound,list_bound,johnson_order\n";
    out << r.m << ',' << r.k << ',' << to_string(r.rate) << ',' << r.d << ',' << to_string(r.radius) << ','
        << r.generic_bound << ',' << (r.affine_bound_defined ? std::to_string(r.affine_bound) : std::string("n/a"))
        << ',' << r.list_bound << ',' << order_name(r.johnson_order) << '\n';
    return out.str();
}

} // namespace frs
