#ifndef AGC_LINALG_HPP
#define AGC_LINALG_HPP

#include "agc/field.hpp"

namespace agc {

using Row = std::vector<FieldElement>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

/// Canonical basis of the right kernel of an (r x c) matrix.  Each basis
/// vector corresponds to one free column (ascending), with a 1 there.
Matrix kernel_basis(const Matrix& m, int ncols, const LevelPtr& level);

/// True if v lies in the row span of `basis` (basis need not be reduced).
bool in_row_span(const Matrix& basis, const Row& v, const LevelPtr& level);

/// Rows of `v` that extend the row space of `w`: a basis of V modulo W,
/// selected greedily in order.  Returned rows are rows of `v`.
Matrix complement_basis(const Matrix& v, const Matrix& w, const LevelPtr& level);

/// Matrix product A * B^T == 0 check, for duality tests.
bool orthogonal(const Matrix& a, const Matrix& b, const LevelPtr& level);

} // namespace agc

#endif
