#include "toric/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/linalg.hpp"

namespace toric {

namespace {

/// Calls fn(indices) for every k-subset of {0..n-1}, ascending.
template <typename Fn>
void for_each_subset(int n, int k, Fn fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls fn(point) for every lattice point of the box [lo, hi].
template <typename Fn>
void for_each_box_point(const IntVec& lo, const IntVec& hi, Fn fn) {
  const size_t d = lo.size();
  for (size_t k = 0; k < d; ++k)
    if (lo[k] > hi[k]) return;
  IntVec x = lo;
  while (true) {
    fn(x);
    size_t k = 0;
    while (k < d) {
      if (x[k] < hi[k]) {
        ++x[k];
        break;
      }
      x[k] = lo[k];
      ++k;
    }
    if (k == d) break;  // odometer wrapped (also ends the d == 0 case)
  }
}

bool satisfies(const Constraint& c, const IntVec& x) {
  Int v = dot(c.normal, x);
  return c.strict ? v > c.rhs : v >= c.rhs;
}

bool satisfies_all(const HPolyhedron& p, const IntVec& x) {
  for (const auto& c : p.cons)
    if (!satisfies(c, x)) return false;
  return true;
}

/// Scale a rational vector to the primitive integer vector on the same ray.
IntVec to_primitive_int(const RatVec& w) {
  Int l = 1;
  for (const auto& q : w)
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  IntVec v(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    Rat scaled = w[i] * l;
    v[i] = boost::multiprecision::numerator(scaled);
  }
  return primitive(v);
}

/// Whether p lies in the convex hull of verts, decided exactly by testing
/// feasibility of the barycentric system in the coefficient space.
bool in_convex_hull(const std::vector<RatVec>& verts, const IntVec& p) {
  const int nv = int(verts.size());
  const int d = int(p.size());
  HPolyhedron sys;
  sys.dim = nv;
  auto add_eq = [&](const IntVec& coeff, const Int& rhs) {
    sys.cons.push_back({coeff, rhs, false});
    sys.cons.push_back({neg(coeff), -rhs, false});
  };
  for (int i = 0; i < d; ++i) {
    Int l = 1;
    for (const auto& v : verts)
      l = boost::multiprecision::lcm(l,
                                     boost::multiprecision::denominator(v[i]));
    IntVec coeff(nv);
    for (int j = 0; j < nv; ++j)
      coeff[j] = boost::multiprecision::numerator(Rat(verts[j][i] * l));
    add_eq(coeff, p[i] * l);
  }
  add_eq(IntVec(nv, Int(1)), 1);  // coefficients sum to one
  for (int j = 0; j < nv; ++j) {
    IntVec e(nv, Int(0));
    e[j] = 1;
    sys.cons.push_back({e, Int(0), false});
  }
  return fm_feasible(sys);
}

}  // namespace

HPolyhedron tighten_strict(const HPolyhedron& p) {
  HPolyhedron q;
  q.dim = p.dim;
  q.cons.reserve(p.cons.size());
  for (const auto& c : p.cons)
    q.cons.push_back(c.strict ? Constraint{c.normal, c.rhs + 1, false} : c);
  return q;
}

bool fm_feasible(const HPolyhedron& p) {
  // (normal -> strongest (rhs, strict)); constraints with equal normals are
  // subsumed by the one with the largest right-hand side.
  using Key = IntVec;
  std::map<Key, std::pair<Int, bool>> live;

  auto insert = [&](IntVec n, Int r, bool strict) -> bool {
    // returns false when the constraint is already unsatisfiable (0 >= r > 0)
    Int g = boost::multiprecision::gcd(content(n), boost::multiprecision::abs(r));
    if (g > 1) {
      for (auto& x : n) x /= g;
      r /= g;
    }
    if (is_zero(n)) return strict ? r < 0 : r <= 0;  // keep nothing; just test
    auto it = live.find(n);
    if (it == live.end()) {
      live.emplace(std::move(n), std::make_pair(std::move(r), strict));
    } else if (r > it->second.first ||
               (r == it->second.first && strict && !it->second.second)) {
      it->second = {std::move(r), strict};
    }
    return true;
  };

  for (const auto& c : p.cons) {
    if (int(c.normal.size()) != p.dim)
      throw std::invalid_argument("constraint dimension mismatch");
    if (!insert(c.normal, c.rhs, c.strict)) return false;
  }

  for (int var = p.dim - 1; var >= 0; --var) {
    std::vector<std::pair<Key, std::pair<Int, bool>>> lower, upper, rest;
    for (auto& kv : live) {
      const Int& a = kv.first[var];
      if (a > 0)
        lower.push_back(kv);
      else if (a < 0)
        upper.push_back(kv);
      else
        rest.push_back(kv);
    }
    live.clear();
    for (auto& kv : rest)
      if (!insert(kv.first, kv.second.first, kv.second.second)) return false;
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        const Int& a = lo.first[var];   // a > 0
        const Int& b = up.first[var];   // b < 0
        IntVec n(p.dim, Int(0));
        for (int j = 0; j < p.dim; ++j)
          n[j] = (-b) * lo.first[j] + a * up.first[j];
        Int r = (-b) * lo.second.first + a * up.second.first;
        if (!insert(std::move(n), std::move(r),
                    lo.second.second || up.second.second))
          return false;
      }
  }
  return true;
}

Decomposition decompose(const HPolyhedron& input) {
  HPolyhedron p = tighten_strict(input);
  Decomposition d;
  d.feasible = fm_feasible(p);
  if (!d.feasible) return d;
  if (p.dim == 0) {
    d.vertices.push_back({});
    return d;
  }

  RatMat normals;
  for (const auto& c : p.cons) {
    RatVec row(p.dim);
    for (int j = 0; j < p.dim; ++j) row[j] = Rat(c.normal[j]);
    normals.push_back(std::move(row));
  }
  if (rat_rank(normals) < p.dim) {
    d.has_lineality = true;
    return d;
  }

  const int m = int(p.cons.size());

  // Vertices: solutions of full-rank dim-subsets of tight constraints that
  // satisfy the whole system.
  std::set<RatVec> verts;
  for_each_subset(m, p.dim, [&](const std::vector<int>& idx) {
    RatMat mat;
    RatVec rhs;
    for (int i : idx) {
      mat.push_back(normals[i]);
      rhs.push_back(Rat(p.cons[i].rhs));
    }
    if (rat_rank(mat) < p.dim) return;
    auto x = rat_solve(mat, rhs);
    if (!x) return;
    for (const auto& c : p.cons) {
      Rat v = 0;
      for (int j = 0; j < p.dim; ++j) v += Rat(c.normal[j]) * (*x)[j];
      if (v < Rat(c.rhs)) return;
    }
    verts.insert(*x);
  });
  d.vertices.assign(verts.begin(), verts.end());
  if (d.vertices.empty())
    throw std::logic_error("feasible pointed polyhedron without vertices");

  // Extreme recession rays: one-dimensional kernels of (dim-1)-subsets of
  // normals that satisfy the homogeneous system.  A rowless matrix carries
  // no ambient dimension, so the one-dimensional case (empty subsets, kernel
  // the whole line) tests the two directions explicitly.
  std::set<IntVec> rays;
  auto admit_directions = [&](IntVec v) {
    for (int sign = 0; sign < 2; ++sign) {
      bool ok = true;
      for (const auto& c : p.cons)
        if (dot(c.normal, v) < 0) {
          ok = false;
          break;
        }
      if (ok) rays.insert(v);
      v = neg(v);
    }
  };
  if (p.dim == 1) {
    admit_directions(IntVec{Int(1)});
  } else {
    for_each_subset(m, p.dim - 1, [&](const std::vector<int>& idx) {
      RatMat mat;
      for (int i : idx) mat.push_back(normals[i]);
      auto kernel = rat_nullspace(std::move(mat));
      if (kernel.size() != 1) return;
      admit_directions(to_primitive_int(kernel[0]));
    });
  }
  d.recession_rays.assign(rays.begin(), rays.end());
  return d;
}

std::vector<IntVec> bounded_part_lattice_points(const HPolyhedron& input) {
  HPolyhedron p = tighten_strict(input);
  Decomposition d = decompose(p);
  if (!d.feasible) return {};
  if (d.has_lineality)
    throw InvalidInputError("polyhedron contains a line; no bounded part");
  if (p.dim == 0) return {IntVec{}};

  IntVec lo(p.dim), hi(p.dim);
  for (int k = 0; k < p.dim; ++k) {
    Rat mn = d.vertices[0][k], mx = d.vertices[0][k];
    for (const auto& v : d.vertices) {
      if (v[k] < mn) mn = v[k];
      if (v[k] > mx) mx = v[k];
    }
    lo[k] = rat_ceil(mn);
    hi[k] = rat_floor(mx);
  }

  const bool bounded = d.recession_rays.empty();
  std::vector<IntVec> out;
  for_each_box_point(lo, hi, [&](const IntVec& x) {
    if (bounded ? satisfies_all(p, x) : in_convex_hull(d.vertices, x))
      out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> minimal_integer_solutions(const HPolyhedron& input) {
  HPolyhedron p = tighten_strict(input);
  for (const auto& c : p.cons)
    if (!all_nonneg(c.normal))
      throw NotMonotoneError(
          "constraint normal has a negative entry; solution set is not "
          "upward closed");
  for (int k = 0; k < p.dim; ++k) {
    IntVec e(p.dim, Int(0));
    e[k] = 1;
    p.cons.push_back({e, Int(0), false});
  }

  Decomposition d = decompose(p);
  if (!d.feasible) return {};

  // With nonnegative normals the recession cone is exactly the positive
  // orthant, so every minimal solution q satisfies q <= v + 1 componentwise
  // for some vertex v: walking down from q along any axis must exit the
  // polyhedron, which pins q near the bounded part.
  IntVec hi(p.dim, Int(0));
  for (int k = 0; k < p.dim; ++k) {
    Rat mx = 0;
    for (const auto& v : d.vertices)
      if (v[k] > mx) mx = v[k];
    hi[k] = rat_ceil(mx) + 1;
  }
  IntVec lo = zero_vec(p.dim);

  std::vector<IntVec> sols;
  for_each_box_point(lo, hi, [&](const IntVec& x) {
    if (satisfies_all(p, x)) sols.push_back(x);
  });

  std::vector<IntVec> minimal;
  for (const auto& x : sols) {
    bool dominated = false;
    for (const auto& y : sols)
      if (y != x && dominates_leq(y, x)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(x);
  }
  std::sort(minimal.begin(), minimal.end());

  // Guard: on a strictly larger box, membership must coincide with
  // domination by some minimal element.
  IntVec hi2(p.dim);
  for (int k = 0; k < p.dim; ++k) hi2[k] = hi[k] + 2;
  bool ok = true;
  for_each_box_point(lo, hi2, [&](const IntVec& x) {
    if (!ok) return;
    bool member = satisfies_all(p, x);
    bool dominated = false;
    for (const auto& m : minimal)
      if (dominates_leq(m, x)) {
        dominated = true;
        break;
      }
    if (member != dominated) ok = false;
  });
  if (!ok)
    throw NotMonotoneError(
        "minimal solutions do not generate the solution set");
  return minimal;
}

}  // namespace toric
