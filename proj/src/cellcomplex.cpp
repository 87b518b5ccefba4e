#include "toric/cellcomplex.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

bool subset_of(const Cone& a, const Cone& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Differential from masked dim-d cells to masked dim-(d+1) cells.
IntMatrix masked_differential(const CellComplexP& p, const SubcomplexMask& mask,
                              int d, const std::vector<int>& local_index) {
  int rows = 0, cols = 0;
  for (int i = p.dim_offset[d]; i < p.dim_offset[d + 1]; ++i)
    if (mask[i]) ++cols;
  for (int i = p.dim_offset[d + 1]; i < p.dim_offset[d + 2]; ++i)
    if (mask[i]) ++rows;
  IntMatrix m(rows, cols);
  for (int i = p.dim_offset[d]; i < p.dim_offset[d + 1]; ++i) {
    if (!mask[i]) continue;
    for (const auto& [j, sign] : p.incidence[i])
      if (mask[j]) m.at(local_index[j], local_index[i]) = sign;
  }
  return m;
}

}  // namespace

CellComplexP build_P(const Fan& f) {
  for (size_t c = 0; c < f.max_cones.size(); ++c) {
    const Cone& mc = f.max_cones[c];
    IntMatrix rays(int(mc.size()), f.n);
    for (size_t i = 0; i < mc.size(); ++i)
      for (int j = 0; j < f.n; ++j) rays.at(int(i), j) = f.rays[mc[i]][j];
    if (rational_rank(rays) != int(mc.size()))
      throw NotSimplicialError("maximal cone " + std::to_string(c) +
                               " has linearly dependent rays");
  }

  CellComplexP p;
  p.n = f.n;
  p.cells = all_cones(f);
  // all_cones sorts by cone dimension ascending; cells go by cell dimension
  // ascending, i.e. cone dimension descending
  std::sort(p.cells.begin(), p.cells.end(), [](const Cone& a, const Cone& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  p.cell_dim.resize(p.cells.size());
  p.dim_offset.assign(p.n + 2, 0);
  for (size_t i = 0; i < p.cells.size(); ++i) {
    p.cell_dim[i] = p.n - int(p.cells[i].size());
    p.index[p.cells[i]] = int(i);
    p.dim_offset[p.cell_dim[i] + 1] += 1;
  }
  for (int d = 0; d <= p.n; ++d) p.dim_offset[d + 1] += p.dim_offset[d];

  p.incidence.resize(p.cells.size());
  for (size_t i = 0; i < p.cells.size(); ++i) {
    const Cone& c = p.cells[i];
    for (size_t pos = 0; pos < c.size(); ++pos) {
      Cone sub;
      for (size_t q = 0; q < c.size(); ++q)
        if (q != pos) sub.push_back(c[q]);
      int j = p.cell_index(sub);
      if (j < 0) continue;  // cannot happen: subsets of cones are cones
      p.incidence[i].emplace_back(j, pos % 2 == 0 ? 1 : -1);
    }
  }
  return p;
}

std::vector<Int> f_vector(const CellComplexP& p) {
  std::vector<Int> f(p.n + 1, Int(0));
  for (int d = 0; d <= p.n; ++d)
    f[d] = p.dim_offset[d + 1] - p.dim_offset[d];
  return f;
}

SubcomplexMask full_mask(const CellComplexP& p) {
  return SubcomplexMask(p.cells.size(), 1);
}

SubcomplexMask score_mask(const CellComplexP& p, const IntVec& ray_score) {
  SubcomplexMask mask(p.cells.size(), 1);
  for (size_t i = 0; i < p.cells.size(); ++i)
    for (int r : p.cells[i])
      if (ray_score[r] < 0) {
        mask[i] = 0;
        break;
      }
  return mask;
}

SubcomplexMask p_x_subcomplex(const CellComplexP& p, const Cone& gamma) {
  SubcomplexMask mask(p.cells.size(), 0);
  for (size_t i = 0; i < p.cells.size(); ++i)
    mask[i] = subset_of(gamma, p.cells[i]) ? 1 : 0;
  return mask;
}

SubcomplexMask fibre_subcomplex(const CellComplexP& p,
                                const ToricMorphism& phi,
                                const Cone& target_cone) {
  SubcomplexMask mask(p.cells.size(), 0);
  for (size_t i = 0; i < p.cells.size(); ++i) {
    IntVec bary(phi.source.n, Int(0));
    for (int r : p.cells[i]) bary = add(bary, phi.source.rays[r]);
    mask[i] =
        cone_relint_contains(phi.target, target_cone, mul(phi.map, bary))
            ? 1
            : 0;
  }
  return mask;
}

std::vector<Int> subcomplex_cohomology(const CellComplexP& p,
                                       const SubcomplexMask& mask) {
  std::vector<int> local_index(p.cells.size(), -1);
  std::vector<int> count(p.n + 1, 0);
  for (size_t i = 0; i < p.cells.size(); ++i)
    if (mask[i]) local_index[i] = count[p.cell_dim[i]]++;

  std::vector<IntMatrix> diff(p.n);
  for (int d = 0; d < p.n; ++d)
    diff[d] = masked_differential(p, mask, d, local_index);
  for (int d = 0; d + 1 < p.n; ++d) {
    IntMatrix z(diff[d + 1].rows, diff[d].cols);
    if (!(mul(diff[d + 1], diff[d]) == z))
      throw std::logic_error(
          "restricted differential does not square to zero");
  }

  std::vector<int> rank(p.n, 0);
  for (int d = 0; d < p.n; ++d) rank[d] = rational_rank(diff[d]);

  std::vector<Int> h(p.n + 1, Int(0));
  for (int d = 0; d <= p.n; ++d) {
    Int value = count[d];
    if (d < p.n) value -= rank[d];
    if (d > 0) value -= rank[d - 1];
    h[d] = value;
  }
  return h;
}

std::vector<Int> graded_cech_at(const CellComplexP& p, const Fan& f,
                                const IntVec& d, const IntVec& m) {
  IntVec score = add(div_char(f, m), d);
  return subcomplex_cohomology(p, score_mask(p, score));
}

CoverReport verify_cover_axioms(const CellComplexP& p, const Fan& f) {
  CoverReport rep;
  rep.f_vec = f_vector(p);

  // p1: cones and cells are in dimension-reversing bijection
  std::vector<Cone> cones = all_cones(f);
  std::set<Cone> cone_set(cones.begin(), cones.end());
  std::set<Cone> cell_set(p.cells.begin(), p.cells.end());
  bool p1 = cone_set == cell_set && p.cells.size() == cones.size();
  for (size_t i = 0; i < p.cells.size() && p1; ++i)
    if (p.cell_dim[i] != p.n - int(p.cells[i].size())) p1 = false;
  p1 = p1 && rep.f_vec[p.n] == 1;  // unique top cell (the zero cone)
  rep.p1 = p1;

  // d^2 = 0 on the full complex
  rep.d2_zero = true;
  try {
    subcomplex_cohomology(p, full_mask(p));
  } catch (const std::logic_error&) {
    rep.d2_zero = false;
  }

  // p2: every star P_x is contractible (skipped when d^2 already fails)
  rep.p2 = rep.d2_zero;
  for (const auto& gamma : cones) {
    if (!rep.p2) break;
    try {
      std::vector<Int> h = subcomplex_cohomology(p, p_x_subcomplex(p, gamma));
      for (int d = 0; d <= p.n; ++d)
        if (h[d] != (d == 0 ? 1 : 0)) {
          rep.p2 = false;
          break;
        }
    } catch (const std::logic_error&) {
      rep.p2 = false;
    }
  }

  // p3/p4: codimension-2 intervals are diamonds with cancelling signs
  auto cone_name = [&](int i) {
    std::string s = "{";
    for (size_t k = 0; k < p.cells[i].size(); ++k) {
      if (k) s += ",";
      s += std::to_string(p.cells[i][k]);
    }
    return s + "}";
  };
  for (size_t i = 0; i < p.cells.size(); ++i) {
    std::map<int, std::pair<int, int>> two_step;  // end cell -> (paths, signed sum)
    for (const auto& [j, s1] : p.incidence[i])
      for (const auto& [k, s2] : p.incidence[j]) {
        auto& entry = two_step[k];
        entry.first += 1;
        entry.second += s1 * s2;
      }
    for (const auto& [k, entry] : two_step) {
      if (entry.first != 2)
        rep.p3_violations.push_back("interval " + cone_name(int(i)) + " -> " +
                                    cone_name(k) + " has " +
                                    std::to_string(entry.first) +
                                    " intermediate cells");
      if (entry.second != 0)
        rep.p4_violations.push_back("signs around " + cone_name(int(i)) +
                                    " -> " + cone_name(k) +
                                    " do not cancel");
    }
  }

  rep.pass = rep.p1 && rep.p2 && rep.d2_zero && rep.p3_violations.empty() &&
             rep.p4_violations.empty();
  return rep;
}

}  // namespace toric
