#include "frs/subspace.hpp"

#include <stdexcept>

namespace frs {

namespace {

// Columns are the basis polynomials' coefficient vectors, padded to msg_len.
Matrix basis_matrix(const PrimeField& field, std::size_t msg_len, const std::vector<Poly>& basis) {
    Matrix m(field, msg_len, basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s)
        for (std::size_t j = 0; j < msg_len; ++j)
            m.set(j, s, basis[s].coeff(j));
    return m;
}

} // namespace

AffineSubspace::AffineSubspace(std::size_t msg_len, Poly offset, std::vector<Poly> basis)
    : msg_len_(msg_len), offset_(std::move(offset)), basis_(std::move(basis)) {
    if (msg_len_ == 0) throw std::invalid_argument("AffineSubspace: msg_len must be positive");
    auto check = [&](const Poly& p, const char* what) {
        if (!p.field().same_modulus(offset_.field()))
            throw std::invalid_argument(std::string("AffineSubspace: ") + what + " over a different field");
        if (p.degree() && *p.degree() >= msg_len_)
            throw std::invalid_argument(std::string("AffineSubspace: ") + what + " degree exceeds message space");
    };
    check(offset_, "offset");
    for (const Poly& h : basis_) check(h, "basis polynomial");
    if (rank(basis_matrix(offset_.field(), msg_len_, basis_)) != basis_.size())
        throw std::invalid_argument("AffineSubspace: basis polynomials are linearly dependent");
}

Poly AffineSubspace::member(const std::vector<Fe>& alphas) const {
    if (alphas.size() != basis_.size())
        throw std::invalid_argument("AffineSubspace::member: expected one coordinate per basis polynomial");
    Poly f = offset_;
    for (std::size_t s = 0; s < basis_.size(); ++s) f = f + scale(basis_[s], alphas[s]);
    return f;
}

std::optional<std::vector<Fe>> AffineSubspace::coordinates_of(const Poly& f) const {
    if (!f.field().same_modulus(field()))
        throw std::invalid_argument("AffineSubspace::coordinates_of: field mismatch");
    if (f.degree() && *f.degree() >= msg_len_) return std::nullopt;
    const Poly delta = f - offset_;
    std::vector<Fe> rhs(msg_len_);
    for (std::size_t j = 0; j < msg_len_; ++j) rhs[j] = delta.coeff(j);
    const AffineSolutionSet sol = solve_affine(basis_matrix(field(), msg_len_, basis_), rhs);
    if (!sol.consistent) return std::nullopt;
    // Independent basis -> trivial kernel -> coordinates are unique.
    if (sol.dimension() != 0)
        throw std::logic_error("AffineSubspace::coordinates_of: non-unique coordinates for independent basis");
    return sol.particular;
}

} // namespace frs
