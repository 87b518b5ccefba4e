#pragma once

#include <vector>

#include "toric/numeric.hpp"

namespace toric {

/// One linear condition `<normal, x> >= rhs`, or `> rhs` when `strict`.
struct Constraint {
  IntVec normal;
  Int rhs;
  bool strict = false;
};

/// A rational polyhedron in R^dim cut out by finitely many half-spaces.
struct HPolyhedron {
  int dim = 0;
  std::vector<Constraint> cons;
};

/// Replaces every strict inequality `<n,x> > r` by `<n,x> >= r+1`.  Because
/// normals and right-hand sides are integral this preserves the set of
/// lattice points exactly; the rational set shrinks to a closed one.
HPolyhedron tighten_strict(const HPolyhedron& p);

/// Exact rational feasibility via Fourier-Motzkin elimination.  Strict
/// inequalities propagate in the usual way: a combined constraint is strict
/// when either parent is.
bool fm_feasible(const HPolyhedron& p);

/// Minkowski decomposition data: P = conv(vertices) + cone(recession_rays).
/// Strict constraints are tightened first, so the data describes the
/// lattice-point-faithful closure of the input.
struct Decomposition {
  bool feasible = false;
  /// True when the constraint normals do not span R^dim, i.e. the polyhedron
  /// contains a line.  Vertex and ray data are omitted in that case.
  bool has_lineality = false;
  std::vector<RatVec> vertices;
  std::vector<IntVec> recession_rays;  ///< primitive and deduplicated
};

Decomposition decompose(const HPolyhedron& p);

/// All lattice points of conv(vertices(P)) -- the bounded part of P.  For a
/// bounded polyhedron this is exactly its set of lattice points.  Throws
/// InvalidInputError when the polyhedron contains a line.
std::vector<IntVec> bounded_part_lattice_points(const HPolyhedron& p);

/// Componentwise-minimal elements of { f in Z^dim : f >= 0, f in P }.
/// Every constraint normal must be entrywise nonnegative -- this makes the
/// solution set upward closed, so the minimal elements generate it; a
/// negative entry raises NotMonotoneError.  Minimal elements provably lie in
/// a box derived from the vertex coordinates, and the computed set is
/// re-verified against a strictly larger box as a guard.
std::vector<IntVec> minimal_integer_solutions(const HPolyhedron& p);

}  // namespace toric
