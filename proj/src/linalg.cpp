#include "toric/linalg.hpp"

#include <algorithm>

namespace toric {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (int(rows[i].size()) != m.cols)
      throw std::invalid_argument("ragged rows in matrix literal");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntVec IntMatrix::row(int i) const {
  IntVec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMatrix::col(int j) const {
  IntVec c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix size mismatch");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

IntVec mul(const IntMatrix& x, const IntVec& v) {
  if (x.cols != int(v.size()))
    throw std::invalid_argument("matrix/vector size mismatch");
  IntVec r(x.rows, Int(0));
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i] += x.at(i, j) * v[j];
  return r;
}

namespace {

// Elementary operations applied simultaneously to s, the accumulated
// transform, and (for row ops) the tracked inverse.
struct SnfWork {
  IntMatrix s, u, uinv, v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    // (swap rows of u)  =>  uinv gets its columns swapped
    for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i += k * row j
  void add_row(int i, int j, const Int& k) {
    if (k == 0) return;
    for (int c = 0; c < s.cols; ++c) s.at(i, c) += k * s.at(j, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) += k * u.at(j, c);
    // inverse op on uinv: col j -= k * col i
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, j) -= k * uinv.at(r, i);
  }
  // col i += k * col j
  void add_col(int i, int j, const Int& k) {
    if (k == 0) return;
    for (int r = 0; r < s.rows; ++r) s.at(r, i) += k * s.at(r, j);
    for (int r = 0; r < v.rows; ++r) v.at(r, i) += k * v.at(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
  }
};

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SnfWork w;
  w.s = a;
  w.u = IntMatrix::identity(a.rows);
  w.uinv = IntMatrix::identity(a.rows);
  w.v = IntMatrix::identity(a.cols);

  int t = 0;
  const int tmax = std::min(a.rows, a.cols);
  while (t < tmax) {
    // deterministic pivot: smallest |entry| != 0 in the trailing block,
    // ties by lowest (row, col)
    int pi = -1, pj = -1;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j) {
        if (w.s.at(i, j) == 0) continue;
        if (pi < 0 || iabs(w.s.at(i, j)) < iabs(w.s.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool again = true;
    while (again) {
      again = false;
      // clear column t with floor-free truncating quotients; a nonzero
      // remainder becomes the new (smaller) pivot on the next sweep
      for (int i = t + 1; i < a.rows; ++i) {
        if (w.s.at(i, t) == 0) continue;
        Int q = w.s.at(i, t) / w.s.at(t, t);
        w.add_row(i, t, -q);
        if (w.s.at(i, t) != 0) {
          w.swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < a.cols; ++j) {
        if (w.s.at(t, j) == 0) continue;
        Int q = w.s.at(t, j) / w.s.at(t, t);
        w.add_col(j, t, -q);
        if (w.s.at(t, j) != 0) {
          w.swap_cols(t, j);
          again = true;
        }
      }
    }

    // divisibility fixup: the pivot must divide every remaining entry;
    // folding an offending row into row t strictly shrinks the pivot
    bool fixed = true;
    for (int i = t + 1; i < a.rows && fixed; ++i)
      for (int j = t + 1; j < a.cols && fixed; ++j)
        if (w.s.at(i, j) % w.s.at(t, t) != 0) {
          w.add_row(t, i, Int(1));
          fixed = false;
        }
    if (!fixed) continue;  // redo column clearing with the enlarged row

    if (w.s.at(t, t) < 0) w.negate_row(t);
    ++t;
  }

  SmithDecomposition d;
  d.s = w.s;
  d.u = w.u;
  d.uinv = w.uinv;
  d.v = w.v;
  d.rank = t;
  return d;
}

Int determinant(const IntMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("determinant: not square");
  const int n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        // Bareiss: exact division keeps entries small and integral
        m.at(i, j) =
            (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

int rational_rank(const IntMatrix& a) {
  RatMat m(a.rows, RatVec(a.cols));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m[i][j] = Rat(a.at(i, j));
  return rat_rank(std::move(m));
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  Int det = determinant(a);
  if (det != 1 && det != -1)
    throw std::invalid_argument("inverse_unimodular: |det| != 1");
  const int n = a.rows;
  // Gauss-Jordan over Q; the result is integral because |det| = 1.
  RatMat m(n, RatVec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    std::swap(m[col], m[p]);
    Rat piv = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integral(m[i][n + j]))
        throw std::logic_error("inverse_unimodular: non-integral inverse");
      inv.at(i, j) = boost::multiprecision::numerator(m[i][n + j]);
    }
  return inv;
}

CokernelProjection cokernel_projection(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  if (d.rank != a.cols)
    throw std::invalid_argument("cokernel_projection: not full column rank");
  for (int k = 0; k < d.rank; ++k)
    if (d.s.at(k, k) != 1)
      throw TorsionCokernelError(
          "cokernel has torsion (invariant factor " +
          d.s.at(k, k).str() + ")");
  CokernelProjection c;
  c.rank = a.rows - a.cols;
  c.proj = IntMatrix(c.rank, a.rows);
  c.section = IntMatrix(a.rows, c.rank);
  for (int i = 0; i < c.rank; ++i)
    for (int j = 0; j < a.rows; ++j) c.proj.at(i, j) = d.u.at(a.cols + i, j);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < c.rank; ++j)
      c.section.at(i, j) = d.uinv.at(i, a.cols + j);
  return c;
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  if (int(b.size()) != a.rows)
    throw std::invalid_argument("solve_integer: size mismatch");
  SmithDecomposition d = smith_normal_form(a);
  IntVec c = mul(d.u, b);
  IntVec y(a.cols, Int(0));
  for (int k = 0; k < d.rank; ++k) {
    if (c[k] % d.s.at(k, k) != 0) return std::nullopt;
    y[k] = c[k] / d.s.at(k, k);
  }
  for (int k = d.rank; k < a.rows; ++k)
    if (c[k] != 0) return std::nullopt;
  return mul(d.v, y);
}

int rat_rank(RatMat m) {
  if (m.empty()) return 0;
  const int rows = int(m.size());
  const int cols = int(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[rank], m[p]);
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[rank][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<RatVec> rat_solve(RatMat m, RatVec b) {
  const int rows = int(m.size());
  const int cols = rows ? int(m[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    std::swap(b[r], b[p]);
    Rat piv = m[r][col];
    for (int j = col; j < cols; ++j) m[r][j] /= piv;
    b[r] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (int k = 0; k < r; ++k) x[pivot_col[k]] = b[k];
  return x;
}

std::vector<RatVec> rat_nullspace(RatMat m) {
  const int rows = int(m.size());
  const int cols = rows ? int(m[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rat piv = m[r][col];
    for (int j = col; j < cols; ++j) m[r][j] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec x(cols, Rat(0));
    x[free] = 1;
    for (int k = 0; k < r; ++k) x[pivot_col[k]] = -m[k][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace toric
