#pragma once

#include "frs/code.hpp"
#include "frs/rng.hpp"
#include "frs/subspace.hpp"

#include <cstddef>

namespace frs {

/// Uniform polynomial with degree < msg_len (each coefficient uniform, so
/// lower degrees occur with their natural probability).
Poly random_poly(const PrimeField& field, std::size_t msg_len, Rng& rng);

/// Same, conditioned on being nonzero (rejection; at most a couple draws).
Poly random_nonzero_poly(const PrimeField& field, std::size_t msg_len, Rng& rng);

/// Uniform folded word of the code's shape (not necessarily a codeword).
FoldedWord random_word(const FrsParams& params, Rng& rng);

/// Uniform affine subspace of dimension exactly d: random offset plus d
/// basis polynomials redrawn until independent. Requires d <= msg_len.
AffineSubspace random_subspace(const PrimeField& field, std::size_t msg_len, std::size_t d, Rng& rng);

} // namespace frs
