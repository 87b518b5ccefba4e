#pragma once

#include <utility>
#include <vector>

#include "toric/cellcomplex.hpp"
#include "toric/characters.hpp"

namespace toric {

/// A monomial ideal in the target Cox ring, given by its minimal monomial
/// generators (exponent vectors forming an antichain under divisibility).
struct MonomialIdeal {
  std::vector<IntVec> gens;  ///< sorted lexicographically
  bool is_zero() const { return gens.empty(); }
  bool is_unit() const;
  /// Whether the monomial with exponent vector f lies in the ideal.
  bool contains(const IntVec& f) const;
};

/// One fibre degree of the pushforward, realized as a complex of monomial
/// ideals over the cells of the source complex.
struct MuBlock {
  IntVec mu;
  IntVec d_mu;                      ///< divisor on the source
  IntVec e_mu;                      ///< effective divisor on the target
  IntVec e_class;                   ///< class of e_mu
  std::vector<MonomialIdeal> ideals;  ///< one per cell of the complex
};

/// The full pushforward datum: the source cell complex, the target Cox
/// grading, and one ideal complex per contributing fibre degree.  Entry i
/// of the cohomology of each block, summed over blocks with their class
/// shifts, is the graded module.
struct IdealComplex {
  ToricMorphism phi;
  int i = 0;
  CellComplexP p;
  ClassGroup cg;          ///< class group of the target
  IntMatrix pullback;     ///< #source rays x #target rays, entrywise >= 0
  std::vector<MuBlock> blocks;
};

/// Minimal generators of the ideal attached to one cell: monomials whose
/// pullback, twisted by d_mu, is effective on the cell's rays.
MonomialIdeal cell_ideal(const IntMatrix& pullback, const IntVec& d_mu,
                         const Cone& cell_cone, int num_target_rays);

/// Builds the ideal complexes of the i-th pushforward of the divisor d.
IdealComplex build_complex(const ToricMorphism& phi, const IntVec& d, int i);

/// Cohomology ranks of one block's complex in the fine (monomial) degree f:
/// the score-masked complex where a cell survives iff f lies in its ideal.
std::vector<Int> fine_cohomology(const IdealComplex& ic, const MuBlock& b,
                                 const IntVec& f);

/// All exponent vectors f >= 0 of the given Cox class, enumerated via the
/// section polytope of a representative divisor.  Finite for complete
/// targets; sorted lexicographically.
std::vector<IntVec> monomials_of_class(const Fan& target, const ClassGroup& cg,
                                       const IntVec& class_d);

/// Contribution of one block to the degree-class_d piece: fine cohomology
/// summed over the monomials of class class_d + e_class.
Int hilbert_block_at(const IdealComplex& ic, const MuBlock& b, const IntVec& class_d);

/// Dimension of the degree-class_d piece of the pushforward module: sums
/// the block contributions.
Int hilbert_at(const IdealComplex& ic, const IntVec& class_d);

/// Minimal module generators of one block inside the fine-degree box
/// [0, box]^{#target rays}: pairs (f, count) with count > 0, sorted.  A
/// degree needs a fresh generator when its cohomology is not spanned by the
/// images of the coordinate multiplications from the box below it.
std::vector<std::pair<IntVec, Int>> minimal_generators(const IdealComplex& ic,
                                                       const MuBlock& b,
                                                       int box);

}  // namespace toric
