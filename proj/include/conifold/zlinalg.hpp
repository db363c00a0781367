#pragma once

#include "conifold/matrix.hpp"

#include <vector>

namespace conifold {

// Rank over Z (= rank over Q), fraction-free Bareiss elimination with full
// pivoting. Pivot choice: smallest nonzero |entry|, lowest (row, col) on ties.
int rank_exact(const IntegerMatrix& m);

// Original column indices that carry pivots in the elimination above, sorted.
// Projecting onto these columns preserves the rank and the row-relation lattice
// of every row subset (the projection is injective on the row space).
std::vector<std::size_t> pivot_columns(const IntegerMatrix& m);

// Basis of the left kernel { v : v^T m = 0 } as matrix rows. Rows are the
// Hermite-reduced basis of the full integer relation lattice, each divided by
// its content, pivots positive (so the first nonzero entry of each row is
// positive), ordered by pivot column. Deterministic.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

// u * a * v = d with |det u| = |det v| = 1, d diagonal, nonnegative,
// d[i] divides d[i+1].
struct SmithDecomposition {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
    std::vector<Integer> diagonal() const;
};
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// Whether v is a rational combination of the rows of m.
bool in_row_span(const IntegerMatrix& m, const std::vector<Integer>& v);

// Exact determinant of a square matrix (Bareiss, with pivot-swap sign
// bookkeeping). Used by tests to certify unimodularity of transforms.
Integer determinant(const IntegerMatrix& m);

// Divide by the content and make the first nonzero entry positive.
// The zero vector is returned unchanged.
std::vector<Integer> primitive_normalized(std::vector<Integer> v);

}  // namespace conifold
