#include "frs/wronskian.hpp"

#include "frs/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frs {

Matrix coordinate_matrix(const FrsParams& params, const AffineSubspace& H, std::size_t symbol) {
    if (symbol >= params.folded_length())
        throw std::out_of_range("coordinate_matrix: symbol index out of range");
    if (!H.field().same_modulus(params.field()))
        throw std::invalid_argument("coordinate_matrix: subspace field does not match parameters");
    Matrix a(params.field(), params.m(), H.dim());
    for (std::size_t j = 0; j < params.m(); ++j) {
        const Fe x = params.eval_point(symbol, j);
        for (std::size_t s = 0; s < H.dim(); ++s) a.set(j, s, H.basis()[s].eval(x));
    }
    return a;
}

namespace {

// Determinant by cofactor expansion along the first column. `rows`/`cols`
// select the live submatrix.
Poly det_cofactor(const std::vector<std::vector<Poly>>& m, std::vector<std::size_t> rows,
                  const std::vector<std::size_t>& cols, const PrimeField& field) {
    if (cols.size() == 1) return m[rows[0]][cols[0]];
    Poly acc = Poly::zero(field);
    const std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Poly& pivot = m[rows[r]][cols[0]];
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_rows;
        sub_rows.reserve(rows.size() - 1);
        for (std::size_t t = 0; t < rows.size(); ++t)
            if (t != r) sub_rows.push_back(rows[t]);
        Poly term = pivot * det_cofactor(m, std::move(sub_rows), sub_cols, field);
        acc = (r % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

Poly folded_wronskian(const std::vector<Poly>& polys) {
    if (polys.empty()) throw std::invalid_argument("folded_wronskian: need at least one polynomial");
    const PrimeField& field = polys[0].field();
    for (const Poly& p : polys)
        if (!p.field().same_modulus(field)) throw std::invalid_argument("folded_wronskian: mixed fields");

    const std::size_t d = polys.size();
    std::vector<std::vector<Poly>> m;
    m.reserve(d);
    Fe g = 1; // gamma^i for row i
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Poly> row;
        row.reserve(d);
        for (std::size_t j = 0; j < d; ++j) row.push_back(dilate(polys[j], g));
        m.push_back(std::move(row));
        g = field.mul(g, field.gamma());
    }

    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    Poly det = det_cofactor(m, idx, idx, field);

    std::size_t max_deg = 0;
    for (const Poly& p : polys)
        if (p.degree()) max_deg = std::max(max_deg, *p.degree());
    if (det.degree() && *det.degree() > d * max_deg)
        throw std::logic_error("folded_wronskian: determinant degree exceeds d * max degree");
    return det;
}

bool is_independent(const std::vector<Poly>& polys) {
    if (polys.empty()) return true;
    const PrimeField& field = polys[0].field();
    std::size_t max_len = 1;
    for (const Poly& p : polys) {
        if (p.degree() && *p.degree() >= field.gamma_order())
            throw std::invalid_argument("is_independent: degree must be below ord(gamma)");
        max_len = std::max(max_len, p.coeffs().size());
    }

    const bool by_wronskian = !folded_wronskian(polys).is_zero();

    Matrix coeffs(field, max_len, polys.size());
    for (std::size_t s = 0; s < polys.size(); ++s)
        for (std::size_t j = 0; j < max_len; ++j) coeffs.set(j, s, polys[s].coeff(j));
    const bool by_rank = rank(coeffs) == polys.size();

    if (by_wronskian != by_rank)
        throw std::logic_error("is_independent: Wronskian and rank tests disagree");
    return by_wronskian;
}

std::string RankProfile::to_csv_row() const {
    std::ostringstream out;
    out << ranks.size() << ',' << d << ',' << deficit_sum << ',' << to_string(bound) << ',' << bad_set_size;
    return out.str();
}

RankProfile rank_profile(const FrsParams& params, const AffineSubspace& H) {
    const std::size_t d = H.dim();
    if (d > params.m())
        throw std::invalid_argument("rank_profile: subspace dimension exceeds folding parameter");
    if (H.msg_len() != params.msg_len())
        throw std::invalid_argument("rank_profile: subspace message length does not match parameters");

    RankProfile out;
    out.d = d;
    out.bound = Rational(static_cast<std::int64_t>(d) * static_cast<std::int64_t>(params.msg_len()),
                         static_cast<std::int64_t>(params.m() - d + 1));
    const std::size_t N = params.folded_length();
    out.ranks.reserve(N);
    for (std::size_t i = 0; i < N; ++i) {
        const std::size_t r = rank(coordinate_matrix(params, H, i));
        out.ranks.push_back(r);
        out.deficit_sum += d - r;
        if (r == 0) ++out.bad_set_size;
    }
    if (Rational(static_cast<std::int64_t>(out.deficit_sum)) > out.bound)
        throw ContractViolation("rank_profile: deficit sum " + std::to_string(out.deficit_sum) +
                                " exceeds bound " + to_string(out.bound));
    return out;
}

} // namespace frs
