#pragma once

// Finite groups acting linearly on Q^d: fixed subspaces through averaging
// projectors, relative normal spaces along symmetry-breaking arrows, and the
// degeneracy quiver over the subconjugacy order.
//
// For a finite group every orbit is discrete, so the normal slice at a point
// is the whole space. The quiver therefore records, along each covering
// relation H0 < K of subconjugacy, the complement of Fix(K) inside Fix(H0):
// the directions in which symmetry is gained or lost.

#include <cstddef>
#include <string>
#include <vector>

#include "phasediag/orbit_category.hpp"
#include "phasediag/perm_group.hpp"
#include "phasediag/rational.hpp"

namespace phasediag {

using RatVector = std::vector<Rational>;

class LinearAction {
 public:
  /// Validates invertibility of each generator matrix and that the matrices
  /// satisfy the relations of the group (checked along the Cayley graph).
  static LinearAction create(const FiniteGroup& group, std::size_t dimension, std::vector<RatMatrix> generators);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<RatMatrix>& generators() const noexcept { return generators_; }
  /// rho(g) for the element with index g.
  const RatMatrix& matrix(std::size_t g) const { return elementMatrices_.at(g); }

 private:
  std::size_t dimension_ = 0;
  std::vector<RatMatrix> generators_;
  std::vector<RatMatrix> elementMatrices_;
};

/// P = (1/|H|) sum of rho(h) over h in H.
RatMatrix averagingProjector(const LinearAction& action, const Subgroup& h);

/// Canonical (reduced row echelon) basis of Fix(H) = image of the projector.
std::vector<RatVector> fixSubspace(const LinearAction& action, const Subgroup& h);

struct RelativeNormal {
  Subgroup overgroup;                  ///< K = g^-1 H1 g, which contains H0
  std::vector<RatVector> basis;        ///< basis of Fix(H0) intersected with ker P_K
  std::vector<std::size_t> actingGenerators;   ///< generators of N_K(H0)
  std::vector<RatMatrix> restrictedAction;     ///< their matrices in the basis
  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Relative normal space for the transition H0 -> H1 witnessed by g with
/// g H0 g^-1 contained in H1. The complement is the image of the idempotent
/// P_H0 - P_K; it is invariant under N_K(H0), whose generators act on it by
/// the returned matrices. Throws ValidationError if g is not a witness.
RelativeNormal relativeNormal(const FiniteGroup& group, const LinearAction& action, const Subgroup& h0,
                              const Subgroup& h1, std::size_t witness);

/// Coordinates of rho(n) restricted to an invariant subspace with RREF basis.
RatMatrix restrictToSubspace(const RatMatrix& m, const std::vector<RatVector>& basis);

struct IsotypicComponent {
  std::string character;   ///< "trivial", "order d" (cyclic H) or "nontrivial"
  std::vector<RatVector> basis;
};

/// Rational isotypic decomposition of Q^d under H. For cyclic H of order n
/// one component per divisor d of n, the kernel of the d-th cyclotomic
/// polynomial in a generator, obtained from idempotents whose coefficients
/// are Ramanujan sums. Otherwise the split into Fix(H) and its complement
/// ker P_H. Zero components are omitted.
std::vector<IsotypicComponent> isotypicDecomposition(const FiniteGroup& group, const LinearAction& action,
                                                     const Subgroup& h);

struct QuiverNode {
  std::size_t subgroupClass = 0;
  std::size_t fixDimension = 0;
  std::vector<RatVector> fixBasis;
  std::vector<IsotypicComponent> isotypic;
};

struct QuiverArrow {
  std::size_t sourceClass = 0;
  std::size_t targetClass = 0;
  std::size_t witness = 0;      ///< least g with g H0 g^-1 inside H1
  RelativeNormal normal;
};

struct QuiverOutput {
  std::vector<QuiverNode> nodes;
  std::vector<QuiverArrow> arrows;  ///< covering relations of subconjugacy
};

QuiverOutput degeneracyQuiver(const FiniteGroup& group, const SubgroupLattice& lattice, const LinearAction& action);

}  // namespace phasediag
