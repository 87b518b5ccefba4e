#include "toric/morphism.hpp"

#include <algorithm>

namespace toric {

IntVec ray_image(const ToricMorphism& phi, int j) {
  return mul(phi.map, phi.source.rays[j]);
}

MorphismReport validate_morphism(const ToricMorphism& phi) {
  MorphismReport rep;
  rep.lattice_ok =
      phi.map.rows == phi.target.n && phi.map.cols == phi.source.n;
  if (!rep.lattice_ok) {
    rep.notes.push_back("lattice map must be (target rank x source rank)");
    return rep;
  }

  rep.maps_cones = true;
  for (size_t s = 0; s < phi.source.max_cones.size(); ++s) {
    // the image of a cone lies in a target cone iff all generator images
    // land in one common maximal cone
    std::vector<IntVec> images;
    for (int j : phi.source.max_cones[s]) images.push_back(ray_image(phi, j));
    bool found = false;
    for (const auto& tc : phi.target.max_cones) {
      bool all_in = true;
      for (const auto& w : images)
        if (!cone_contains(phi.target, tc, w)) {
          all_in = false;
          break;
        }
      if (all_in) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.maps_cones = false;
      rep.notes.push_back("source cone " + std::to_string(s) +
                          " does not map into any target cone");
    }
  }

  const bool both_complete =
      is_complete(phi.source) && is_complete(phi.target);
  rep.proper = rep.maps_cones && both_complete;
  if (rep.maps_cones && !both_complete)
    rep.notes.push_back("properness established only for complete fans");

  rep.surjective = rep.proper && rational_rank(phi.map) == phi.target.n;
  if (rep.proper && !rep.surjective)
    rep.notes.push_back("lattice map does not have full rank");

  if (rep.surjective) {
    SmithDecomposition d = smith_normal_form(phi.map);
    bool onto = d.rank == phi.target.n;
    for (int k = 0; k < d.rank && onto; ++k)
      if (d.s.at(k, k) != 1) onto = false;
    rep.fibration = onto;
    if (!onto)
      rep.notes.push_back(
          "lattice map is not surjective over Z; fibres are disconnected");
  }
  return rep;
}

std::vector<int> rays_into_cone(const ToricMorphism& phi,
                                const Cone& target_cone) {
  std::vector<int> out;
  for (size_t j = 0; j < phi.source.rays.size(); ++j)
    if (cone_contains(phi.target, target_cone, ray_image(phi, int(j))))
      out.push_back(int(j));
  return out;
}

IntVec pullback_divisor(const ToricMorphism& phi, const IntVec& d) {
  if (d.size() != phi.target.rays.size())
    throw InvalidInputError("divisor length does not match target rays");
  IntVec out(phi.source.rays.size());
  for (size_t j = 0; j < phi.source.rays.size(); ++j) {
    IntVec w = ray_image(phi, int(j));
    int tc = lowest_max_cone_containing(phi.target, w);
    if (tc < 0)
      throw InvalidInputError(
          "ray image escapes the target fan; cannot pull back");
    IntVec m = cartier_data(phi.target, tc, d);
    out[j] = -dot(m, w);
  }
  return out;
}

IntMatrix pullback_matrix(const ToricMorphism& phi) {
  const int rs = int(phi.source.rays.size());
  const int rt = int(phi.target.rays.size());
  IntMatrix pb(rs, rt);
  for (int k = 0; k < rt; ++k) {
    IntVec e(rt, Int(0));
    e[k] = 1;
    IntVec col = pullback_divisor(phi, e);
    for (int j = 0; j < rs; ++j) pb.at(j, k) = col[j];
  }
  return pb;
}

}  // namespace toric
