#pragma once

#include "frs/code.hpp"
#include "frs/linalg.hpp"
#include "frs/rational.hpp"
#include "frs/subspace.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace frs {

/// The m x d agreement matrix A_i of folded position `symbol` (0-based):
/// entry (j, s) = h_s(x) where x is the evaluation point of slot j of that
/// symbol and h_s runs over the subspace basis.
Matrix coordinate_matrix(const FrsParams& params, const AffineSubspace& H, std::size_t symbol);

/// Determinant of the d x d matrix with entry (i, j) = p_j(gamma^i X)
/// (rows i = 0..d-1), computed by cofactor expansion over the polynomial
/// ring. d never exceeds a handful here, so no fraction-free elimination
/// is needed. The determinant's degree is at most d * max(deg p_j); that
/// bound is asserted.
Poly folded_wronskian(const std::vector<Poly>& polys);

/// True iff the polynomials are linearly independent over GF(q).
/// Decided by nonzeroness of the folded Wronskian; requires every degree
/// to be below ord(gamma), the regime where that equivalence holds. The
/// result is cross-checked against the coefficient-matrix rank on every
/// call (cheap at these sizes); a mismatch would falsify the equivalence
/// and throws.
bool is_independent(const std::vector<Poly>& polys);

/// Per-position ranks of the agreement matrices of a subspace, plus the
/// global deficit statistics.
struct RankProfile {
    std::vector<std::size_t> ranks; // r_i for i = 0..N-1
    std::size_t d = 0;
    std::size_t deficit_sum = 0;   // sum of (d - r_i)
    Rational bound;                // d * msg_len / (m - d + 1)
    std::size_t bad_set_size = 0;  // positions with r_i = 0

    /// One CSV row: N,d,deficit_sum,bound,bad_set_size.
    std::string to_csv_row() const;
};

/// Computes all r_i and checks the deficit bound
/// sum(d - r_i) <= d * msg_len / (m - d + 1). A violation is reported as a
/// ContractViolation: it would mean the bound itself is wrong, not the input.
RankProfile rank_profile(const FrsParams& params, const AffineSubspace& H);

} // namespace frs
