#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/polyhedron.hpp"

namespace toric {

namespace {

/// Rays of the cone as a |c| x n integer matrix (rows are ray vectors).
IntMatrix cone_ray_matrix(const Fan& f, const Cone& c) {
  IntMatrix m(int(c.size()), f.n);
  for (size_t i = 0; i < c.size(); ++i)
    for (int j = 0; j < f.n; ++j) m.at(int(i), j) = f.rays[c[i]][j];
  return m;
}

/// Solves sum_i lambda_i * u_{c[i]} = v over Q.  Returns the coefficient
/// vector when consistent (unique for linearly independent rays).
std::optional<RatVec> cone_coordinates(const Fan& f, const Cone& c,
                                       const IntVec& v) {
  RatMat m(f.n, RatVec(c.size()));
  RatVec b(f.n);
  for (int row = 0; row < f.n; ++row) {
    for (size_t i = 0; i < c.size(); ++i) m[row][i] = Rat(f.rays[c[i]][row]);
    b[row] = Rat(v[row]);
  }
  return rat_solve(std::move(m), std::move(b));
}

bool subset_of(const Cone& a, const Cone& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<Cone> all_cones(const Fan& f) {
  std::set<Cone> seen;
  for (const auto& mc : f.max_cones) {
    const int k = int(mc.size());
    for (unsigned bits = 0; bits < (1u << k); ++bits) {
      Cone c;
      for (int i = 0; i < k; ++i)
        if (bits & (1u << i)) c.push_back(mc[i]);
      seen.insert(std::move(c));
    }
  }
  std::vector<Cone> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_face(const Fan& f, const Cone& c) {
  for (const auto& mc : f.max_cones)
    if (subset_of(c, mc)) return true;
  return false;
}

bool cone_contains(const Fan& f, const Cone& c, const IntVec& v) {
  if (c.empty()) return is_zero(v);
  auto lambda = cone_coordinates(f, c, v);
  if (!lambda) return false;
  for (const auto& x : *lambda)
    if (x < 0) return false;
  return true;
}

bool cone_relint_contains(const Fan& f, const Cone& c, const IntVec& v) {
  if (c.empty()) return is_zero(v);
  auto lambda = cone_coordinates(f, c, v);
  if (!lambda) return false;
  for (const auto& x : *lambda)
    if (x <= 0) return false;
  return true;
}

int lowest_max_cone_containing(const Fan& f, const IntVec& v) {
  for (size_t i = 0; i < f.max_cones.size(); ++i)
    if (cone_contains(f, f.max_cones[i], v)) return int(i);
  return -1;
}

bool is_smooth(const Fan& f) {
  for (const auto& mc : f.max_cones) {
    SmithDecomposition d = smith_normal_form(cone_ray_matrix(f, mc));
    if (d.rank != int(mc.size())) return false;
    for (int k = 0; k < d.rank; ++k)
      if (d.s.at(k, k) != 1) return false;
  }
  return true;
}

bool is_complete(const Fan& f) {
  if (f.max_cones.empty()) return false;
  for (const auto& mc : f.max_cones) {
    if (int(mc.size()) != f.n) return false;
    if (rational_rank(cone_ray_matrix(f, mc)) != f.n) return false;
  }
  // every facet must separate exactly two maximal cones
  std::map<Cone, std::vector<int>> facet_owners;
  for (size_t i = 0; i < f.max_cones.size(); ++i) {
    const Cone& mc = f.max_cones[i];
    for (size_t drop = 0; drop < mc.size(); ++drop) {
      Cone facet;
      for (size_t j = 0; j < mc.size(); ++j)
        if (j != drop) facet.push_back(mc[j]);
      facet_owners[facet].push_back(int(i));
    }
  }
  for (const auto& [facet, owners] : facet_owners)
    if (owners.size() != 2) return false;
  // adjacency graph of maximal cones must be connected
  std::vector<int> comp(f.max_cones.size(), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  std::multimap<int, int> adj;
  for (const auto& [facet, owners] : facet_owners) {
    adj.emplace(owners[0], owners[1]);
    adj.emplace(owners[1], owners[0]);
  }
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    auto [lo, hi] = adj.equal_range(c);
    for (auto it = lo; it != hi; ++it)
      if (comp[it->second] < 0) {
        comp[it->second] = 0;
        stack.push_back(it->second);
      }
  }
  for (int c : comp)
    if (c < 0) return false;
  return true;
}

FanReport validate_fan(const Fan& f) {
  FanReport rep;
  auto& errs = rep.errors;

  if (f.n < 1) errs.push_back("lattice rank must be positive");
  std::set<IntVec> ray_set;
  for (size_t i = 0; i < f.rays.size(); ++i) {
    const IntVec& u = f.rays[i];
    if (int(u.size()) != f.n) {
      errs.push_back("ray " + std::to_string(i) + " has wrong dimension");
      continue;
    }
    if (is_zero(u)) {
      errs.push_back("ray " + std::to_string(i) + " is zero");
      continue;
    }
    if (primitive(u) != u)
      errs.push_back("ray " + std::to_string(i) + " is not primitive");
    if (!ray_set.insert(u).second)
      errs.push_back("ray " + std::to_string(i) + " duplicates another ray");
  }
  std::set<Cone> cone_set;
  std::vector<bool> used(f.rays.size(), false);
  for (size_t i = 0; i < f.max_cones.size(); ++i) {
    const Cone& c = f.max_cones[i];
    bool shape_ok = true;
    for (size_t j = 0; j < c.size(); ++j) {
      if (c[j] < 0 || c[j] >= int(f.rays.size())) {
        errs.push_back("cone " + std::to_string(i) + " has a ray index out of range");
        shape_ok = false;
        break;
      }
      if (j > 0 && c[j] <= c[j - 1]) {
        errs.push_back("cone " + std::to_string(i) + " is not strictly sorted");
        shape_ok = false;
        break;
      }
    }
    if (!shape_ok) continue;
    for (int r : c) used[r] = true;
    if (!cone_set.insert(c).second)
      errs.push_back("cone " + std::to_string(i) + " duplicates another cone");
  }
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      errs.push_back("ray " + std::to_string(i) + " is not used by any cone");
  for (size_t i = 0; i < f.max_cones.size() && errs.empty(); ++i)
    for (size_t j = 0; j < f.max_cones.size(); ++j)
      if (i != j && subset_of(f.max_cones[i], f.max_cones[j])) {
        errs.push_back("cone " + std::to_string(i) +
                       " is contained in cone " + std::to_string(j));
        break;
      }
  if (!errs.empty()) return rep;

  for (size_t i = 0; i < f.max_cones.size(); ++i) {
    const Cone& c = f.max_cones[i];
    if (rational_rank(cone_ray_matrix(f, c)) != int(c.size()))
      errs.push_back("cone " + std::to_string(i) +
                     " is not simplicial (dependent rays)");
  }
  if (!errs.empty()) return rep;

  // The defining property of a fan: distinct cones have disjoint relative
  // interiors.  relint(A) meets relint(B) iff A.lam = B.nu has a solution
  // with lam, nu > 0, which after rescaling means lam, nu >= 1.
  std::vector<Cone> cones = all_cones(f);
  for (size_t a = 0; a < cones.size(); ++a)
    for (size_t b = a + 1; b < cones.size(); ++b) {
      if (subset_of(cones[a], cones[b]) || subset_of(cones[b], cones[a]))
        continue;  // a proper face; interiors are disjoint by simpliciality
      const int ka = int(cones[a].size()), kb = int(cones[b].size());
      HPolyhedron sys;
      sys.dim = ka + kb;
      for (int row = 0; row < f.n; ++row) {
        IntVec coeff(ka + kb);
        for (int p = 0; p < ka; ++p) coeff[p] = f.rays[cones[a][p]][row];
        for (int q = 0; q < kb; ++q) coeff[ka + q] = -f.rays[cones[b][q]][row];
        sys.cons.push_back({coeff, Int(0), false});
        sys.cons.push_back({neg(coeff), Int(0), false});
      }
      for (int k = 0; k < ka + kb; ++k) {
        IntVec e(ka + kb, Int(0));
        e[k] = 1;
        sys.cons.push_back({e, Int(1), false});
      }
      if (fm_feasible(sys)) {
        errs.push_back("cones overlap: interiors of two cones intersect");
        rep.valid = false;
        return rep;
      }
    }

  rep.valid = errs.empty();
  if (rep.valid) {
    rep.smooth = is_smooth(f);
    rep.complete = is_complete(f);
  }
  return rep;
}

IntVec div_char(const Fan& f, const IntVec& m) {
  IntVec d(f.rays.size());
  for (size_t i = 0; i < f.rays.size(); ++i) d[i] = dot(m, f.rays[i]);
  return d;
}

ClassGroup class_group(const Fan& f) {
  IntMatrix rays(int(f.rays.size()), f.n);
  for (size_t i = 0; i < f.rays.size(); ++i)
    for (int j = 0; j < f.n; ++j) rays.at(int(i), j) = f.rays[i][j];
  CokernelProjection c = cokernel_projection(rays);
  return {c.rank, c.proj, c.section};
}

IntVec divisor_class(const ClassGroup& cg, const IntVec& d) {
  return mul(cg.deg, d);
}

IntVec cartier_data(const Fan& f, int max_cone, const IntVec& d) {
  const Cone& c = f.max_cones.at(max_cone);
  IntVec rhs(c.size());
  for (size_t i = 0; i < c.size(); ++i) rhs[i] = -d[c[i]];
  auto m = solve_integer(cone_ray_matrix(f, c), rhs);
  if (!m)
    throw InvalidInputError("divisor has no integral local datum on cone " +
                            std::to_string(max_cone));
  return *m;
}

Fan projective_space(int n) {
  if (n < 1) throw InvalidInputError("projective space needs dimension >= 1");
  Fan f;
  f.n = n;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    f.rays.push_back(std::move(e));
  }
  f.rays.push_back(IntVec(n, Int(-1)));
  // maximal cones: all n-subsets of the n+1 rays
  for (int omit = n; omit >= 0; --omit) {
    Cone c;
    for (int i = 0; i <= n; ++i)
      if (i != omit) c.push_back(i);
    f.max_cones.push_back(std::move(c));
  }
  return f;
}

Fan hirzebruch(int a) {
  Fan f;
  f.n = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, Int(a)}, {0, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return f;
}

Fan product_fan(const Fan& f, const Fan& g) {
  Fan p;
  p.n = f.n + g.n;
  for (const auto& u : f.rays) {
    IntVec v(p.n, Int(0));
    for (int j = 0; j < f.n; ++j) v[j] = u[j];
    p.rays.push_back(std::move(v));
  }
  for (const auto& u : g.rays) {
    IntVec v(p.n, Int(0));
    for (int j = 0; j < g.n; ++j) v[f.n + j] = u[j];
    p.rays.push_back(std::move(v));
  }
  const int off = int(f.rays.size());
  for (const auto& a : f.max_cones)
    for (const auto& b : g.max_cones) {
      Cone c = a;
      for (int r : b) c.push_back(off + r);
      p.max_cones.push_back(std::move(c));
    }
  return p;
}

Fan star_subdivision(const Fan& f, const Cone& c) {
  if (c.size() < 2)
    throw InvalidConeError("star subdivision needs a cone of dimension >= 2");
  if (!is_face(f, c))
    throw InvalidConeError("star subdivision center is not a cone of the fan");
  Fan g;
  g.n = f.n;
  g.rays = f.rays;
  IntVec barycenter(f.n, Int(0));
  for (int r : c) barycenter = add(barycenter, f.rays[r]);
  const int new_ray = int(g.rays.size());
  g.rays.push_back(primitive(barycenter));

  std::vector<Cone> split;
  for (const auto& mc : f.max_cones) {
    if (!subset_of(c, mc)) {
      g.max_cones.push_back(mc);
      continue;
    }
    std::vector<Cone> pieces;
    for (int drop : c) {
      Cone piece;
      for (int r : mc)
        if (r != drop) piece.push_back(r);
      piece.push_back(new_ray);
      std::sort(piece.begin(), piece.end());
      pieces.push_back(std::move(piece));
    }
    std::sort(pieces.begin(), pieces.end());
    for (auto& piece : pieces) split.push_back(std::move(piece));
  }
  for (auto& piece : split) g.max_cones.push_back(std::move(piece));
  return g;
}

}  // namespace toric
