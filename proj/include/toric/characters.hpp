#pragma once

#include <vector>

#include "toric/cohomology.hpp"
#include "toric/morphism.hpp"

namespace toric {

/// Coordinates on the character lattice of the fibre torus: `proj` maps a
/// source character onto its fibre part (a tuple of length `rank`), and
/// `section` splits it, so proj * section = identity and proj kills every
/// character pulled back from the target.
struct KernelCharacters {
  int rank = 0;
  IntMatrix proj;     ///< rank x n_source
  IntMatrix section;  ///< n_source x rank
};

/// Splits the source character lattice along the fibration.  Throws
/// InvalidInputError when the lattice map is not surjective over Q and
/// TorsionCokernelError when the quotient lattice has torsion.
KernelCharacters kernel_characters(const ToricMorphism& phi);

/// Source characters that contribute to cohomology entry i of the divisor d
/// over the chart of the given target maximal cone: lattice points of the
/// bounded parts of the vanishing-pattern polyhedra cut out by the rays
/// mapping into that cone.  Sorted lexicographically.  Throws
/// UnboundedContributionError when a pattern is unbounded transversally to
/// the fibre direction.
std::vector<IntVec> gamma_sigma(const ToricMorphism& phi, const IntVec& d,
                                int i, int target_max_cone);

/// Contributing characters of the whole family, chart by chart.
struct CharacterSet {
  KernelCharacters kernel;
  std::vector<std::vector<IntVec>> gamma;      ///< per target maximal cone
  std::vector<std::vector<IntVec>> projected;  ///< fibre parts, sorted dedup
  std::vector<IntVec> all;                     ///< union of fibre parts
};

CharacterSet character_set(const ToricMorphism& phi, const IntVec& d, int i);

/// Divisor of the local generator of the degree-mu piece over one chart:
/// the componentwise-minimal twist making every contributing character over
/// that chart a section.  mu must contribute over the chart.
IntVec local_divisor(const ToricMorphism& phi, const IntVec& d, int i,
                     int target_max_cone, const IntVec& mu);

/// One fibre degree of the pushforward analysis: the source divisor d_mu
/// whose chartwise sections realize the degree-mu piece, and the effective
/// target divisor e_mu reconciling the charts' local generators.
struct DivisorPair {
  IntVec mu;
  int tau = 0;  ///< index of the chart carrying the global generator
  IntVec d_mu;  ///< divisor on the source
  IntVec e_mu;  ///< effective divisor on the target
};

/// All fibre degrees contributing to cohomology entry i of d, sorted by mu.
std::vector<DivisorPair> divisor_pairs(const ToricMorphism& phi,
                                       const IntVec& d, int i);

}  // namespace toric
