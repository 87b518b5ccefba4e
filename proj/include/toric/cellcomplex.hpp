#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/morphism.hpp"

namespace toric {

/// The canonical cell decomposition of the nonnegative part of the toric
/// variety: one cell per cone of the fan, with cell dimension n - dim(cone)
/// (maximal cones are vertices, the zero cone is the unique top cell).  The
/// face relation reverses cone inclusion, and the coboundary differential
/// carries simplicial signs derived from the sorted ray indices.
struct CellComplexP {
  int n = 0;
  std::vector<Cone> cells;      ///< grouped by cell dimension, lex within
  std::vector<int> cell_dim;    ///< n - |cells[i]|
  std::vector<int> dim_offset;  ///< size n+2; dim-d cells occupy [off[d], off[d+1])
  /// incidence[i] lists (j, sign): cell j is cells[i] with one ray removed
  /// (one dimension higher); sign = (-1)^(position of the removed ray).
  std::vector<std::vector<std::pair<int, int>>> incidence;
  std::map<Cone, int> index;

  /// Index of the cell with this cone, or -1 when absent.
  int cell_index(const Cone& c) const {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
  }
};

/// Builds the cell complex of a simplicial fan; NotSimplicialError otherwise.
CellComplexP build_P(const Fan& f);

/// Number of cells in each dimension 0..n.
std::vector<Int> f_vector(const CellComplexP& p);

/// A selection of cells; cohomology is computed on the selected span with
/// the restricted differential.
using SubcomplexMask = std::vector<char>;

SubcomplexMask full_mask(const CellComplexP& p);

/// Cells whose cone sees only nonnegative scores: cell sigma is kept iff
/// ray_score[rho] >= 0 for every ray rho of sigma.  The top cell is always
/// kept.  Such masks are closed under the differential because passing to a
/// subcone only drops constraints.
SubcomplexMask score_mask(const CellComplexP& p, const IntVec& ray_score);

/// Cells whose cone contains gamma: the star neighborhood of a point in the
/// relative interior of gamma.  Always has point cohomology (it deformation
/// retracts onto the cell of gamma).
SubcomplexMask p_x_subcomplex(const CellComplexP& p, const Cone& gamma);

/// Cells of the source complex lying over the relative interior of the
/// target cone: a cell is kept iff the image of its cone's barycenter (the
/// sum of its primitive ray generators, 0 for the top cell) lands in
/// relint(target_cone).  This is the reduced complex of the chart preimage
/// over that cone.
SubcomplexMask fibre_subcomplex(const CellComplexP& p,
                                const ToricMorphism& phi,
                                const Cone& target_cone);

/// Cohomology ranks (indexed by cell dimension 0..n) of the masked complex.
/// Verifies that the restricted differential still squares to zero.
std::vector<Int> subcomplex_cohomology(const CellComplexP& p,
                                       const SubcomplexMask& mask);

/// The fine-degree-m piece of the Cech cohomology of the divisor d: ranks of
/// the complex masked to cells where <m, u_rho> + d_rho >= 0 on all rays.
std::vector<Int> graded_cech_at(const CellComplexP& p, const Fan& f,
                                const IntVec& d, const IntVec& m);

/// Structural audit of the complex as a Cech scaffold:
///  - p1: cones and cells correspond bijectively with flipped dimensions,
///        with a unique top cell;
///  - p2: every star subcomplex P_x has point cohomology in degree 0;
///  - p3: every codimension-2 interval of the face poset is a diamond
///        (exactly two intermediate cells);
///  - p4: the two sign paths around each diamond cancel;
///  - d2_zero: the assembled differential squares to zero.
struct CoverReport {
  bool d2_zero = false;
  bool p1 = false;
  bool p2 = false;
  std::vector<std::string> p3_violations;
  std::vector<std::string> p4_violations;
  bool pass = false;
  std::vector<Int> f_vec;
};

CoverReport verify_cover_axioms(const CellComplexP& p, const Fan& f);

}  // namespace toric
