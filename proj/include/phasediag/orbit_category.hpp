#pragma once

// The orbit category O(G) of a finite group: conjugacy classes of subgroups
// as objects, G-equivariant maps G/H0 -> G/H1 as morphisms.
//
// A morphism H0 -> H1 is represented by a transporter element g with
// g H0 g^-1 contained in H1; it acts on cosets by xH0 -> x g^-1 H1. Two
// representatives define the same map exactly when they lie in the same
// coset H1 g, so hom-sets are Trans(H0, H1) modulo left H1-multiplication.
// Composition multiplies representatives: (g2 after g1) is g2 g1.

#include <cstddef>
#include <vector>

#include "phasediag/finite_category.hpp"
#include "phasediag/perm_group.hpp"

namespace phasediag {

struct OrbitMorphism {
  std::size_t sourceClass = 0;
  std::size_t targetClass = 0;
  std::size_t cosetRep = 0;  ///< minimal element of the coset H1 g
};

struct OrbitCategory {
  FiniteGroup group;
  SubgroupLattice lattice;
  FiniteCategory category;             ///< object i is conjugacy class i
  std::vector<OrbitMorphism> arrows;   ///< indexed by morphism id of category

  const Subgroup& representative(std::size_t classIndex) const {
    return lattice.classes.at(classIndex).representative;
  }
};

/// Canonical representative of the coset H1 g (its minimal element index).
std::size_t canonicalCosetRep(const FiniteGroup& group, const Subgroup& h1, std::size_t g);

/// One morphism per coset H1 g of Trans(rep(H0), rep(H1)), ordered by rep.
std::vector<OrbitMorphism> homSet(const FiniteGroup& group, const SubgroupLattice& lattice, std::size_t h0Class,
                                  std::size_t h1Class);

/// m2 o m1, canonicalized. Throws ValidationError if not composable.
OrbitMorphism compose(const FiniteGroup& group, const SubgroupLattice& lattice, const OrbitMorphism& m2,
                      const OrbitMorphism& m1);

OrbitCategory buildOrbitCategory(FiniteGroup group, Diagnostics* diag = nullptr);
/// Variant reusing an existing subgroup lattice of the same group.
OrbitCategory buildOrbitCategory(FiniteGroup group, SubgroupLattice lattice);

}  // namespace phasediag
