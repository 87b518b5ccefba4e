#pragma once

#include <optional>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

/// Dense integer matrix, row-major. Small and exact: everything in this
/// project is desk scale (dimensions well under 25).
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // rows*cols entries

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}

  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  IntMatrix transpose() const;
  IntVec row(int i) const;
  IntVec col(int j) const;

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
IntVec mul(const IntMatrix& x, const IntVec& v);

/// Invertible change of basis on both sides bringing an integer matrix to
/// diagonal form: u * a * v = s with s diagonal, nonnegative, and each
/// diagonal entry dividing the next. u and v are unimodular; uinv is the
/// exact inverse of u (tracked during the reduction, so it is integral by
/// construction).
struct SmithDecomposition {
  IntMatrix u, uinv, s, v;
  int rank = 0;  // number of nonzero diagonal entries
};

/// Deterministic Smith normal form via elementary row/column operations.
/// Pivot choice: minimum absolute value, ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Exact determinant (Bareiss fraction-free elimination). Square input.
Int determinant(const IntMatrix& a);

/// Rank over Q.
int rational_rank(const IntMatrix& a);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Projection Z^m ->> coker(a) for a full-column-rank a (m x n) with free
/// cokernel, together with a splitting:
///   proj:    r x m with proj * a = 0           (r = m - n)
///   section: m x r with proj * section = id_r
/// Throws TorsionCokernelError when the cokernel has torsion and
/// std::invalid_argument when a is not of full column rank.
struct CokernelProjection {
  int rank = 0;  // r
  IntMatrix proj;
  IntMatrix section;
};
CokernelProjection cokernel_projection(const IntMatrix& a);

/// Solve a*x = b over the integers; std::nullopt when no integral solution
/// exists (including rational-but-not-integral and inconsistent systems).
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

// ---- rational helpers (used by the polyhedral layer) ----

using RatMat = std::vector<RatVec>;

int rat_rank(RatMat m);

/// Any solution of m*x = b over Q; std::nullopt when inconsistent. When the
/// system is underdetermined the free variables are set to zero.
std::optional<RatVec> rat_solve(RatMat m, RatVec b);

/// Basis of the nullspace of m over Q.
std::vector<RatVec> rat_nullspace(RatMat m);

}  // namespace toric
