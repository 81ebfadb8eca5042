#include "frs/sampling.hpp"

#include "frs/linalg.hpp"

#include <stdexcept>

namespace frs {

Poly random_poly(const PrimeField& field, std::size_t msg_len, Rng& rng) {
    std::vector<Fe> coeffs(msg_len);
    for (Fe& c : coeffs) c = rng.element(field);
    return Poly(field, std::move(coeffs));
}

Poly random_nonzero_poly(const PrimeField& field, std::size_t msg_len, Rng& rng) {
    for (;;) {
        Poly p = random_poly(field, msg_len, rng);
        if (!p.is_zero()) return p;
    }
}

FoldedWord random_word(const FrsParams& params, Rng& rng) {
    std::vector<std::vector<Fe>> symbols(params.folded_length(), std::vector<Fe>(params.m()));
    for (auto& sym : symbols)
        for (Fe& v : sym) v = rng.element(params.field());
    return FoldedWord(std::move(symbols));
}

AffineSubspace random_subspace(const PrimeField& field, std::size_t msg_len, std::size_t d, Rng& rng) {
    if (d > msg_len)
        throw std::invalid_argument("random_subspace: dimension cannot exceed msg_len");
    const Poly offset = random_poly(field, msg_len, rng);
    for (;;) {
        std::vector<Poly> basis;
        basis.reserve(d);
        for (std::size_t s = 0; s < d; ++s) basis.push_back(random_poly(field, msg_len, rng));
        Matrix m(field, msg_len, d);
        for (std::size_t s = 0; s < d; ++s)
            for (std::size_t j = 0; j < msg_len; ++j) m.set(j, s, basis[s].coeff(j));
        if (rank(m) == d) return AffineSubspace(msg_len, offset, std::move(basis));
    }
}

} // namespace frs
