#pragma once

#include "frs/code.hpp"
#include "frs/subspace.hpp"

#include <cstdint>
#include <vector>

namespace frs {

inline constexpr std::uint64_t kDefaultOracleLimit = 10'000'000;

/// Ground-truth list: every message polynomial whose encoding lies strictly
/// within `radius` of `center`, canonically sorted.
struct OracleList {
    std::vector<Poly> members;
    Rational radius;
    FoldedWord center;
};

/// Exhaustive scan of all q^msg_len messages. Throws LimitExceeded when the
/// message space is larger than `limit` — never truncates silently.
OracleList brute_force_list(const FrsParams& params, const FoldedWord& g, const Rational& radius,
                            std::uint64_t limit = kDefaultOracleLimit);

/// All q^d points of the subspace whose encodings lie strictly within
/// `radius` of g, canonically sorted. Same limit discipline.
OracleList subspace_ball_intersection(const FrsParams& params, const AffineSubspace& H, const FoldedWord& g,
                                      const Rational& radius, std::uint64_t limit = kDefaultOracleLimit);

/// A received word built to agree with each target on a near-equal share of
/// the folded positions: the positions are shuffled (seeded) and dealt
/// round-robin to the targets, and each position copies its assigned
/// target's encoded symbol. Every target must be a member of H. Used to
/// push list sizes up to the combinatorial bounds.
FoldedWord adversarial_center(const FrsParams& params, const AffineSubspace& H, const std::vector<Poly>& targets,
                              std::uint64_t seed);

} // namespace frs
