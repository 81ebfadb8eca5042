#include "frs/linalg.hpp"

#include <stdexcept>

namespace frs {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(const PrimeField& field, const std::vector<std::vector<Fe>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

namespace {

// In-place reduced row echelon form of [M | extra] where extra may be empty
// (extra carries the right-hand side). Returns the pivot column of each
// pivot row, in order.
std::vector<std::size_t> rref(Matrix& m, std::vector<Fe>* extra) {
    const auto& f = m.field();
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Fe t = m.at(a, j);
            m.set(a, j, m.at(b, j));
            m.set(b, j, t);
        }
        if (extra) std::swap((*extra)[a], (*extra)[b]);
    };

    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        swap_rows(pivot_row, sel);

        const Fe inv = f.inv(m.at(pivot_row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.set(pivot_row, j, f.mul(m.at(pivot_row, j), inv));
        if (extra) (*extra)[pivot_row] = f.mul((*extra)[pivot_row], inv);

        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row) continue;
            const Fe factor = m.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(pivot_row, j))));
            if (extra) (*extra)[i] = f.sub((*extra)[i], f.mul(factor, (*extra)[pivot_row]));
        }

        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

std::vector<Fe> apply(const Matrix& m, const std::vector<Fe>& x) {
    const auto& f = m.field();
    std::vector<Fe> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Fe acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m.at(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

} // namespace

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    return rref(work, nullptr).size();
}

AffineSolutionSet solve_affine(const Matrix& m, const std::vector<Fe>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_affine: rhs length does not match row count");
    const auto& f = m.field();

    Matrix work = m;
    std::vector<Fe> rhs = b;
    for (Fe& v : rhs) v %= f.q();
    const std::vector<std::size_t> pivot_cols = rref(work, &rhs);

    // A zero row with nonzero rhs means no solution.
    for (std::size_t i = pivot_cols.size(); i < work.rows(); ++i) {
        if (rhs[i] != 0) return AffineSolutionSet{};
    }

    std::vector<bool> is_pivot(work.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    AffineSolutionSet out;
    out.consistent = true;
    out.particular.assign(work.cols(), 0);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) out.particular[pivot_cols[i]] = rhs[i];

    for (std::size_t free_col = 0; free_col < work.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Fe> v(work.cols(), 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = f.neg(work.at(i, free_col));
        out.basis.push_back(std::move(v));
    }

    // Re-substitution self-check; failures here are bugs in elimination.
    std::vector<Fe> reduced_b = b;
    for (Fe& v : reduced_b) v %= f.q();
    if (apply(m, out.particular) != reduced_b) throw std::logic_error("solve_affine: particular solution failed re-substitution");
    for (const auto& v : out.basis) {
        for (Fe r : apply(m, v)) {
            if (r != 0) throw std::logic_error("solve_affine: kernel vector failed re-substitution");
        }
    }
    return out;
}

std::vector<std::vector<Fe>> nullspace(const Matrix& m) {
    return solve_affine(m, std::vector<Fe>(m.rows(), 0)).basis;
}

} // namespace frs
