#pragma once

#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// A map of toric varieties given by a lattice map compatible with the fans:
/// `map` is a (target.n x source.n) integer matrix sending every source cone
/// into some target cone.
struct ToricMorphism {
  Fan source;
  Fan target;
  IntMatrix map;
};

struct MorphismReport {
  bool lattice_ok = false;   ///< matrix shape matches the two lattices
  bool maps_cones = false;   ///< every source cone lands inside a target cone
  bool proper = false;       ///< both fans complete and cones are mapped
  bool surjective = false;   ///< proper with lattice map of full rational rank
  bool fibration = false;    ///< surjective with surjective lattice map over Z
  std::vector<std::string> notes;
};

/// Checks the fan-compatibility and classifies the morphism.  Both fans are
/// assumed individually valid (see validate_fan).
MorphismReport validate_morphism(const ToricMorphism& phi);

/// Image of the j-th source ray generator under the lattice map.
IntVec ray_image(const ToricMorphism& phi, int j);

/// Indices of source rays whose image lies in the given target cone
/// (the rays relevant to the chart over that cone).
std::vector<int> rays_into_cone(const ToricMorphism& phi, const Cone& target_cone);

/// Pullback of a divisor on the target along the morphism: at each source
/// ray j the coefficient is -<m_sigma, map u_j> where m_sigma is the local
/// datum of d on any maximal target cone containing map u_j (the value is
/// independent of the choice).  Requires every ray image to lie in the
/// target fan's support.
IntVec pullback_divisor(const ToricMorphism& phi, const IntVec& d);

/// Matrix of pullback_divisor: (#source rays x #target rays), whose k-th
/// column is the pullback of the k-th target ray divisor.
IntMatrix pullback_matrix(const ToricMorphism& phi);

}  // namespace toric
