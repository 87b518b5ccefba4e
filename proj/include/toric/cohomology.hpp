#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "toric/morphism.hpp"

namespace toric {

/// Reduced cohomology ranks of the vanishing-pattern complex of the ray set
/// J: the simplicial complex whose faces are the subsets of J spanning a
/// cone of the fan.  Entry i of the result is dim \tilde H^{i-1}, so the
/// vector aligns with sheaf cohomology degrees: the empty pattern gives
/// (1, 0, ..., 0), a disconnected pattern contributes in entry 1, and so on.
/// The result has n+1 entries.
std::vector<Int> reduced_cohomology_ranks(const Fan& f,
                                          const std::vector<int>& j);

/// Memoizes pattern cohomology over one fan (the scan over degrees of a
/// divisor hits the same patterns over and over).
class NegAnalyzer {
public:
  explicit NegAnalyzer(const Fan& f);
  const Fan& fan() const { return fan_; }
  /// Ranks for the pattern j (must be sorted ascending).
  const std::vector<Int>& ranks(const std::vector<int>& j);

private:
  Fan fan_;
  std::set<Cone> faces_;
  std::map<std::vector<int>, std::vector<Int>> cache_;
};

/// All ray patterns whose complex has nonzero reduced cohomology in entry i.
/// Scans the 2^(#rays) subsets; TooManyRaysError beyond 14 rays.  Patterns
/// are returned sorted by size, then lexicographically.
std::vector<std::vector<int>> neg_sets(const Fan& f, int i);

/// neg_sets filtered to patterns supported on rays mapping into the given
/// target cone: the patterns that can contribute over that chart.
std::vector<std::vector<int>> restricted_neg_sets(const ToricMorphism& phi,
                                                  const Cone& target_cone,
                                                  int i);

/// Sheaf cohomology of the divisor d on a complete fan, with the full list
/// of contributing characters: degrees[i] holds (character, multiplicity)
/// pairs summing to h[i].
struct CohomologyTable {
  std::vector<Int> h;  ///< h^0 .. h^n
  std::vector<std::vector<std::pair<IntVec, Int>>> degrees;
};

/// Computes the table by enumerating vanishing patterns and counting lattice
/// points of each pattern's degree polyhedron.  A feasible unbounded pattern
/// with nonzero cohomology raises UnboundedContributionError (the fan is not
/// complete); more than 14 rays raises TooManyRaysError.
CohomologyTable h_i(const Fan& f, const IntVec& d);

}  // namespace toric
