#pragma once

#include <string>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/numeric.hpp"

namespace toric {

/// A cone of a fan, stored as the strictly increasing list of indices of the
/// rays it is spanned by.  The empty list is the zero cone.
using Cone = std::vector<int>;

/// A rational fan in Z^n given by its rays (primitive lattice vectors) and
/// its maximal cones.  All geometric algorithms in this library assume the
/// fan is simplicial, so every face of a maximal cone is just a subset of
/// its ray set.
struct Fan {
  int n = 0;                   ///< lattice rank
  std::vector<IntVec> rays;    ///< primitive generators of the 1-cones
  std::vector<Cone> max_cones; ///< maximal cones as sorted ray-index sets
};

/// Every cone of the fan (all subsets of maximal cones, including the zero
/// cone), ordered by dimension and then lexicographically.
std::vector<Cone> all_cones(const Fan& f);

/// Whether `c` is a cone of the fan, i.e. a subset of some maximal cone.
bool is_face(const Fan& f, const Cone& c);

/// Whether v lies in the cone spanned by the given rays (nonnegative
/// rational combination).  The zero cone contains only the origin.
bool cone_contains(const Fan& f, const Cone& c, const IntVec& v);

/// Whether v lies in the relative interior (strictly positive combination).
bool cone_relint_contains(const Fan& f, const Cone& c, const IntVec& v);

/// Index of the first maximal cone containing v, or -1 when none does.
int lowest_max_cone_containing(const Fan& f, const IntVec& v);

/// Every maximal cone's rays extend to a lattice basis.
bool is_smooth(const Fan& f);

/// The fan's support is all of R^n: all maximal cones are full-dimensional,
/// every (n-1)-cone bounds exactly two maximal cones, and the adjacency
/// graph of maximal cones is connected.
bool is_complete(const Fan& f);

struct FanReport {
  bool valid = false;
  bool smooth = false;
  bool complete = false;
  std::vector<std::string> errors;
};

/// Full structural and geometric validation: primitive distinct rays, sorted
/// in-range maximal cones, maximality, simpliciality, and pairwise disjoint
/// relative interiors (the defining fan condition).  `smooth` and `complete`
/// are only computed for valid fans.
FanReport validate_fan(const Fan& f);

/// The principal divisor of the character m: the vector (<m, u_rho>)_rho.
IntVec div_char(const Fan& f, const IntVec& m);

/// The divisor class group of a smooth fan whose rays span, presented as a
/// free quotient of the ray lattice: deg maps a divisor to its class, and
/// section splits it (deg . section = id).
struct ClassGroup {
  int rank = 0;
  IntMatrix deg;      ///< rank x #rays
  IntMatrix section;  ///< #rays x rank
};

ClassGroup class_group(const Fan& f);

IntVec divisor_class(const ClassGroup& cg, const IntVec& d);

/// The character m_sigma with <m_sigma, u_l> = -d_l for every ray l of the
/// maximal cone; this is the local datum of the (Cartier) divisor d on that
/// chart.  Throws InvalidInputError when no integral solution exists.
IntVec cartier_data(const Fan& f, int max_cone, const IntVec& d);

/// Standard constructions.
Fan projective_space(int n);
Fan hirzebruch(int a);
Fan product_fan(const Fan& f, const Fan& g);

/// Star subdivision along a cone of dimension >= 2: inserts the ray
/// u = sum of the cone's primitive generators and splits every maximal cone
/// containing the given one.  For smooth fans this preserves smoothness.
Fan star_subdivision(const Fan& f, const Cone& c);

}  // namespace toric
