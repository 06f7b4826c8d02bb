#pragma once

// Dense exact linear algebra over the rationals: row reduction, rank,
// nullspace, linear solve. Matrices here are small (at most a few hundred
// rows), so plain fraction-based Gaussian elimination is fine.

#include "dcg/rational.hpp"

#include <optional>
#include <vector>

namespace dcg {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major

// Reduce `m` in place to reduced row echelon form; returns the pivot columns.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// Basis of the right nullspace of `m` (vectors of length = #columns),
// returned in reduced row echelon form.
RatMat nullspace(const RatMat& m, int ncols);

// Solve m * x = b exactly. Returns std::nullopt if inconsistent; if the
// system is underdetermined, free variables are set to zero.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

// Row space intersection of two RREF-able row sets (each row a vector of
// the same length). Result is in RREF.
RatMat intersect_row_spaces(const RatMat& a, const RatMat& b, int ncols);

} // namespace dcg
