#pragma once

#include "frs/linalg.hpp"
#include "frs/poly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace frs {

/// An affine subspace of the message space: all polynomials
/// f0 + alpha_1 h_1 + ... + alpha_d h_d with alpha_s in GF(q).
///
/// The basis polynomials are required to be linearly independent (checked
/// at construction via the rank of their coefficient matrix), so coordinates
/// of a member are unique and dim() is exactly d. A dimension-0 subspace
/// (empty basis) is a single polynomial and is perfectly legal.
class AffineSubspace {
  public:
    /// msg_len bounds the ambient message space: offset and every basis
    /// polynomial must have fewer than msg_len+1 coefficients... precisely,
    /// degree < msg_len. Throws std::invalid_argument on field mismatch,
    /// degree overflow, or a dependent basis.
    AffineSubspace(std::size_t msg_len, Poly offset, std::vector<Poly> basis);

    std::size_t msg_len() const { return msg_len_; }
    const PrimeField& field() const { return offset_.field(); }
    const Poly& offset() const { return offset_; }
    const std::vector<Poly>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    /// offset + sum alphas[s] * basis[s]. Requires one alpha per basis poly.
    Poly member(const std::vector<Fe>& alphas) const;

    /// The unique coordinate vector of f if f lies in the subspace.
    std::optional<std::vector<Fe>> coordinates_of(const Poly& f) const;

    bool contains(const Poly& f) const { return coordinates_of(f).has_value(); }

  private:
    std::size_t msg_len_;
    Poly offset_;
    std::vector<Poly> basis_;
};

} // namespace frs
