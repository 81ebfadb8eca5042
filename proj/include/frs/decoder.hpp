#pragma once

#include "frs/code.hpp"
#include "frs/rational.hpp"
#include "frs/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frs {

inline constexpr std::uint64_t kDefaultPruneLimit = 1'000'000;

/// The interpolated linear polynomial Q = A_0(X) + sum_s A_s(X) Y_s.
/// a[s-1] holds A_s; deg A_0 <= D + msg_len - 1 and deg A_s <= D.
struct InterpolationPoly {
    Poly a0;
    std::vector<Poly> a;
    std::size_t degree_param = 0; // D

    std::size_t k() const { return a.size(); }
    bool is_zero() const;
};

/// D = floor((N(m-k+1) - msg_len + 1)/(k+1)). Throws when the formula goes
/// negative (blocklength too small for this k).
std::size_t interpolation_degree(const FrsParams& params, std::size_t k);

/// Minimum number of agreed folded symbols that forces a codeword into the
/// extracted subspace: t_min = ceil((D + msg_len)/(m-k+1)).
std::size_t agreement_threshold(const FrsParams& params, std::size_t k);

/// Largest radius at which the subspace-containment guarantee holds:
/// (N - t_min + 1)/N. Always strictly larger than the closed-form
/// decoding_radius(m, k, R), so the default radius is always admissible.
Rational max_certified_radius(const FrsParams& params, std::size_t k);

/// Finds a nonzero Q whose evaluation vanishes on every length-k window of
/// every folded symbol of g: for symbol i and window offset j,
/// A_0(x) + sum_s A_s(x) g[i][j+s-1] = 0 at x = the evaluation point of
/// slot j. Unknowns exceed constraints by construction, so the kernel is
/// nonzero; the first canonical nullspace vector is returned (determinism).
InterpolationPoly interpolate(const FrsParams& params, std::size_t k, const FoldedWord& g);

/// Divides all components by the largest common power of X. After this,
/// some component has a nonzero constant term. Identity on already
/// normalized inputs. Q must be nonzero.
InterpolationPoly x_normalize(const InterpolationPoly& q);

/// Solves A_0(X) + sum_s A_s(X) f(gamma^(s-1) X) == 0 over the msg_len
/// coefficients of f. Requires Q nonzero and X-normalized. Returns the
/// solution set as an affine subspace, or nullopt when the system is
/// inconsistent (the list is genuinely empty). A dimension above k-1 would
/// contradict the containment theorem and raises ContractViolation.
std::optional<AffineSubspace> extract_subspace(const FrsParams& params, const InterpolationPoly& q);

/// All subspace members within `radius` of g by full enumeration of q^d
/// points. Sorted, deduplicated. `examined` (optional) accumulates the
/// number of distance checks.
std::vector<Poly> prune_exhaustive(const FrsParams& params, const AffineSubspace& H, const FoldedWord& g,
                                   const Rational& radius, std::uint64_t limit = kDefaultPruneLimit,
                                   std::size_t* examined = nullptr);

/// Dimension-1 fast path: each folded position votes for the unique alpha
/// consistent with g there (if any); alphas whose exact agreement count
/// meets the threshold are verified by a full distance check. Output equals
/// prune_exhaustive by construction.
std::vector<Poly> prune_dim1_frequency(const FrsParams& params, const AffineSubspace& H, const FoldedWord& g,
                                       const Rational& radius, std::size_t* examined = nullptr);

/// Recursive coordinate pinning: imposing agreement at position i cuts the
/// dimension by the rank of that position's agreement matrix; recurse until
/// dimension 0, then verify. Union over positions, deduplicated. Equals
/// prune_exhaustive on all inputs.
std::vector<Poly> prune_pinning(const FrsParams& params, const AffineSubspace& H, const FoldedWord& g,
                                const Rational& radius, std::uint64_t limit = kDefaultPruneLimit,
                                std::size_t* examined = nullptr);

struct DecodeStats {
    std::string strategy; // "exhaustive", "frequency", or "pinning"
    std::size_t candidates_examined = 0;
};

struct DecodeOutcome {
    std::optional<AffineSubspace> subspace; // nullopt: inconsistent extraction
    std::vector<Poly> list;
    Rational radius;
    DecodeStats stats;
};

/// Full pipeline: interpolate, normalize, extract, prune. The radius
/// defaults to the closed-form decoding radius for (m, k, R); an override
/// must lie in (0, max_certified_radius], where completeness still holds.
/// At radii up to the default, the list-size bound (k-1)^2+1 is asserted.
DecodeOutcome decode(const FrsParams& params, std::size_t k, const FoldedWord& g,
                     std::optional<Rational> radius = std::nullopt, std::uint64_t limit = kDefaultPruneLimit);

} // namespace frs
