#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubhom/int_matrix.hpp"

namespace cubhom {

/// Smith normal form U * M * V = S with U, V unimodular and S diagonal,
/// diag entries nonnegative and forming a divisibility chain d1 | d2 | ...
struct SmithResult {
    IntMatrix u, s, v;
};

SmithResult snf(const IntMatrix& m);

/// Diagonal of the Smith form only.
std::vector<Int> smith_diagonal(const IntMatrix& m);

/// Column echelon form E = M * V with V unimodular.  Pivot rows are
/// strictly increasing across pivot columns, pivots are positive, and every
/// entry above a pivot is zero.  Columns beyond the pivots are zero.
struct ColEchelon {
    IntMatrix e, v;
    std::vector<std::pair<int, int>> pivots;  // (row, col)
};

ColEchelon col_echelon(const IntMatrix& m);

/// Generators of { x : M x = 0 } as columns, in canonical Hermite form.
IntMatrix integer_kernel(const IntMatrix& m);

/// One integer solution of M x = b, if any.
std::optional<std::vector<Int>> solve(const IntMatrix& m, const std::vector<Int>& b);

/// Columnwise integer solutions X of M X = B, if all columns are solvable.
std::optional<IntMatrix> solve_columns(const IntMatrix& m, const IntMatrix& b);

/// Canonical generator matrix of the lattice spanned by the columns of M
/// (Hermite normal form with zero columns dropped).  Two column sets span
/// the same lattice iff their canonical forms are equal matrices.
IntMatrix lattice_canonical(const IntMatrix& m);

bool lattice_equal(const IntMatrix& a, const IntMatrix& b);
bool lattice_member(const IntMatrix& lattice_gens, const std::vector<Int>& v);
/// Canonical form of the lattice spanned by the columns of both arguments.
IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);

Int determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace cubhom
