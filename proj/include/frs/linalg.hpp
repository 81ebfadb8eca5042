#pragma once

#include "frs/field.hpp"

#include <cstddef>
#include <vector>

namespace frs {

/// Dense row-major matrix over a prime field. Entries are always reduced.
class Matrix {
  public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols);
    static Matrix from_rows(const PrimeField& field, const std::vector<std::vector<Fe>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Fe v) { data_[r * cols_ + c] = v % field_.q(); }

  private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Fe> data_;
};

/// Full solution set of a linear system M x = b: one particular solution
/// plus a basis of the kernel, or an explicit inconsistency marker.
/// Inconsistency is a value, not an error.
struct AffineSolutionSet {
    bool consistent = false;
    std::vector<Fe> particular;
    std::vector<std::vector<Fe>> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// Rank by Gauss-Jordan elimination with first-nonzero pivoting. Exact
/// field arithmetic, so there are no tolerance questions.
std::size_t rank(const Matrix& m);

/// Solves M x = b. The kernel basis follows the reduced-echelon convention
/// (each free variable set to 1 in turn, others 0), so outputs are canonical
/// and comparable bit-exactly. Every returned vector is re-substituted into
/// the system before returning; a mismatch is an internal bug and throws.
AffineSolutionSet solve_affine(const Matrix& m, const std::vector<Fe>& b);

/// Basis of {x : M x = 0}; empty when the kernel is trivial.
std::vector<std::vector<Fe>> nullspace(const Matrix& m);

} // namespace frs
