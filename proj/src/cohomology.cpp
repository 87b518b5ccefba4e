#include "toric/cohomology.hpp"

#include <algorithm>
#include <string>

#include "toric/polyhedron.hpp"

namespace toric {

namespace {

constexpr int kMaxPatternRays = 14;

// Faces of the vanishing-pattern complex of j, grouped by cardinality
// (index k holds the faces with k vertices; index 0 is {the empty face}).
// A subset of j is a face iff it spans a cone, and because the fan is
// simplicial it suffices to test membership in the face set.
std::vector<std::vector<Cone>> pattern_faces(const std::vector<int>& j,
                                             const std::set<Cone>& faces) {
  std::vector<std::vector<Cone>> by_size(j.size() + 1);
  const std::size_t count = std::size_t{1} << j.size();
  for (std::size_t bits = 0; bits < count; ++bits) {
    Cone s;
    for (std::size_t p = 0; p < j.size(); ++p)
      if (bits & (std::size_t{1} << p)) s.push_back(j[p]);
    if (s.empty() || faces.count(s)) by_size[s.size()].push_back(s);
  }
  for (auto& level : by_size) std::sort(level.begin(), level.end());
  return by_size;
}

// Reduced simplicial cochain ranks.  Entry i of the result is the rank of
// reduced cohomology in degree i-1, i.e. the defect at the faces with i
// vertices.  The coboundary from k-vertex faces to (k+1)-vertex faces sends
// a face T to the signed sum of its vertex deletions.
std::vector<Int> ranks_from_faces(const std::vector<std::vector<Cone>>& faces,
                                  int n) {
  std::vector<Int> counts(faces.size(), 0);
  std::vector<Int> d_rank(faces.size(), 0);  // rank of d out of level k
  for (std::size_t k = 0; k < faces.size(); ++k)
    counts[k] = Int(faces[k].size());
  for (std::size_t k = 0; k + 1 < faces.size(); ++k) {
    const auto& lo = faces[k];
    const auto& hi = faces[k + 1];
    if (lo.empty() || hi.empty()) continue;
    std::map<Cone, int> lo_index;
    for (std::size_t i = 0; i < lo.size(); ++i) lo_index[lo[i]] = int(i);
    RatMat d(hi.size(), RatVec(lo.size(), Rat(0)));
    for (std::size_t t = 0; t < hi.size(); ++t) {
      for (std::size_t p = 0; p < hi[t].size(); ++p) {
        Cone s = hi[t];
        s.erase(s.begin() + long(p));
        d[t][lo_index.at(s)] = (p % 2 == 0) ? Rat(1) : Rat(-1);
      }
    }
    d_rank[k] = rat_rank(d);
  }
  std::vector<Int> h(std::size_t(n) + 1, 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i < counts.size()) {
      Int cut = d_rank[i] + (i > 0 ? d_rank[i - 1] : Int(0));
      h[i] = counts[i] - cut;
    }
  }
  return h;
}

std::set<Cone> face_set(const Fan& f) {
  auto cones = all_cones(f);
  return std::set<Cone>(cones.begin(), cones.end());
}

void check_ray_budget(std::size_t count) {
  if (count > kMaxPatternRays)
    throw TooManyRaysError("pattern enumeration supports at most " +
                           std::to_string(kMaxPatternRays) + " rays, got " +
                           std::to_string(count));
}

bool is_zero_vector(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

std::vector<Int> reduced_cohomology_ranks(const Fan& f,
                                          const std::vector<int>& j) {
  check_ray_budget(j.size());
  Cone sorted = j;
  std::sort(sorted.begin(), sorted.end());
  return ranks_from_faces(pattern_faces(sorted, face_set(f)), f.n);
}

NegAnalyzer::NegAnalyzer(const Fan& f) : fan_(f), faces_(face_set(f)) {}

const std::vector<Int>& NegAnalyzer::ranks(const std::vector<int>& j) {
  auto it = cache_.find(j);
  if (it != cache_.end()) return it->second;
  check_ray_budget(j.size());
  auto h = ranks_from_faces(pattern_faces(j, faces_), fan_.n);
  return cache_.emplace(j, std::move(h)).first->second;
}

namespace {

// Enumerates the subsets of `universe` (sorted ray indices), invoking the
// callback with each subset in sorted form.
template <typename Fn>
void for_each_pattern(const std::vector<int>& universe, Fn&& fn) {
  check_ray_budget(universe.size());
  const std::size_t count = std::size_t{1} << universe.size();
  for (std::size_t bits = 0; bits < count; ++bits) {
    std::vector<int> j;
    for (std::size_t p = 0; p < universe.size(); ++p)
      if (bits & (std::size_t{1} << p)) j.push_back(universe[p]);
    fn(j);
  }
}

void sort_patterns(std::vector<std::vector<int>>& out) {
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace

std::vector<std::vector<int>> neg_sets(const Fan& f, int i) {
  std::vector<int> universe(f.rays.size());
  for (std::size_t r = 0; r < universe.size(); ++r) universe[r] = int(r);
  NegAnalyzer analyzer(f);
  std::vector<std::vector<int>> out;
  for_each_pattern(universe, [&](const std::vector<int>& j) {
    if (analyzer.ranks(j)[std::size_t(i)] != 0) out.push_back(j);
  });
  sort_patterns(out);
  return out;
}

std::vector<std::vector<int>> restricted_neg_sets(const ToricMorphism& phi,
                                                  const Cone& target_cone,
                                                  int i) {
  const std::vector<int> universe = rays_into_cone(phi, target_cone);
  NegAnalyzer analyzer(phi.source);
  std::vector<std::vector<int>> out;
  for_each_pattern(universe, [&](const std::vector<int>& j) {
    if (analyzer.ranks(j)[std::size_t(i)] != 0) out.push_back(j);
  });
  sort_patterns(out);
  return out;
}

CohomologyTable h_i(const Fan& f, const IntVec& d) {
  if (d.size() != f.rays.size())
    throw InvalidInputError("divisor length does not match ray count");
  const int n = f.n;
  CohomologyTable table;
  table.h.assign(std::size_t(n) + 1, 0);
  table.degrees.assign(std::size_t(n) + 1, {});

  std::vector<int> universe(f.rays.size());
  for (std::size_t r = 0; r < universe.size(); ++r) universe[r] = int(r);
  NegAnalyzer analyzer(f);

  for_each_pattern(universe, [&](const std::vector<int>& j) {
    const auto& ranks = analyzer.ranks(j);
    if (is_zero_vector(ranks)) return;

    // Degrees whose vanishing pattern is exactly j: rays in j are strictly
    // negative after twisting, the rest are nonnegative.
    HPolyhedron p;
    p.dim = n;
    std::set<int> in_j(j.begin(), j.end());
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
      if (in_j.count(int(r)))
        p.cons.push_back({neg(f.rays[r]), Int(d[r] + 1), false});
      else
        p.cons.push_back({f.rays[r], Int(-d[r]), false});
    }
    auto dec = decompose(p);
    if (!dec.feasible) return;
    if (dec.has_lineality || !dec.recession_rays.empty()) {
      std::string desc = "{";
      for (std::size_t t = 0; t < j.size(); ++t)
        desc += (t ? "," : "") + std::to_string(j[t]);
      desc += "}";
      throw UnboundedContributionError(
          "vanishing pattern " + desc +
          " contributes in unboundedly many degrees");
    }
    auto pts = bounded_part_lattice_points(p);
    if (pts.empty()) return;
    for (std::size_t i = 0; i < table.h.size(); ++i) {
      if (ranks[i] == 0) continue;
      table.h[i] += ranks[i] * Int(pts.size());
      for (const auto& m : pts) table.degrees[i].emplace_back(m, ranks[i]);
    }
  });

  for (auto& level : table.degrees)
    std::sort(level.begin(), level.end());
  return table;
}

}  // namespace toric
