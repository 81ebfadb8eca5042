#pragma once

#include "frs/rational.hpp"

#include <cstdint>
#include <string>

namespace frs {

/// k/(k+1) * (1 - m*R/(m-k+1)), the list-decoding radius certified for an
/// m-folded code with window parameter k at rate R. Exact rational.
/// Requires 1 <= k <= m and 0 < R < (m-k+1)/m (otherwise the radius would
/// be <= 0: the rate is too high for this k and m).
Rational decoding_radius(std::size_t m, std::size_t k, const Rational& R);

/// k*(k+1)^(d-1): list bound for a dimension-d affine subspace in a
/// general code of relative distance Delta, at radius k/(k+1)*Delta.
std::uint64_t generic_list_bound(std::uint64_t k, std::uint64_t d);

/// (k-1)*d + 1: the sharper bound for folded Reed-Solomon subspaces.
/// Requires k > d >= 0.
std::uint64_t frs_affine_bound(std::uint64_t k, std::uint64_t d);

/// (k-1)^2 + 1: the end-to-end list-size bound; equals
/// frs_affine_bound(k, k-1).
std::uint64_t frs_list_bound(std::uint64_t k);

enum class RadiusOrder { frs_larger, equal, johnson_larger };

/// Exact comparison of k/(k+1)*(1-R) against the Johnson radius 1-sqrt(R),
/// done by squaring so no floating point enters. Equality holds exactly at
/// R = 1/k^2.
RadiusOrder johnson_compare(std::uint64_t k, const Rational& R);

/// Least m such that decoding_radius(m, k, R) >= k/(k+1)*(1-R-eps).
/// Requires eps > 0 (the limit radius itself is approached, not attained,
/// once k >= 2).
std::size_t min_folding(std::size_t k, const Rational& R, const Rational& eps);

/// Everything the `bounds` subcommand prints, computed once.
struct BoundReport {
    std::size_t m = 0;
    std::size_t k = 0;
    Rational rate;
    std::size_t d = 0;

    Rational radius;
    std::uint64_t generic_bound = 0;
    std::uint64_t affine_bound = 0; // only when k > d
    bool affine_bound_defined = false;
    std::uint64_t list_bound = 0;
    double johnson_radius = 0.0; // display value; comparisons stay exact
    RadiusOrder johnson_order = RadiusOrder::equal;
};

BoundReport bound_report(std::size_t m, std::size_t k, const Rational& R, std::size_t d);

std::string to_text(const BoundReport& r);
std::string to_csv(const BoundReport& r);

} // namespace frs
