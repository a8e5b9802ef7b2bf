#pragma once

// Finite G-spaces modeled as abstract simplicial complexes with a group
// action by simplicial automorphisms, and the fixed-point presheaf
// H -> pi_0 Fix(H) over the orbit category.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phasediag/error.hpp"
#include "phasediag/orbit_category.hpp"
#include "phasediag/perm_group.hpp"

namespace phasediag {

using Simplex = std::vector<std::uint32_t>;

/// Sorts a simplex list by (dimension, vertices) and removes duplicates.
std::vector<Simplex> canonicalSimplices(std::vector<Simplex> simplices);

/// Adds every face of every simplex (and nothing else).
std::vector<Simplex> closeUnderFaces(const std::vector<Simplex>& simplices);

struct GComplex {
  std::size_t vertexCount = 0;
  std::vector<Simplex> simplices;                    ///< canonical, closed under faces
  std::vector<std::vector<std::uint32_t>> action;    ///< vertex images per group generator
};

/// A complex bound to a group whose generator maps were checked to define a
/// simplicial action.
class GSpace {
 public:
  /// Validates the complex and the action against the group. Warns when an
  /// element fixes a simplex setwise but not vertex-wise.
  static GSpace create(const FiniteGroup& group, GComplex complex, Diagnostics* diag = nullptr);

  const GComplex& complex() const noexcept { return complex_; }
  std::size_t vertexCount() const noexcept { return complex_.vertexCount; }
  std::size_t groupOrder() const noexcept { return vertexAction_.size(); }

  /// g . v for the element with index g.
  std::uint32_t act(std::size_t g, std::uint32_t v) const { return vertexAction_[g][v]; }
  Simplex act(std::size_t g, const Simplex& s) const;

 private:
  GComplex complex_;
  std::vector<std::vector<std::uint32_t>> vertexAction_;
};

/// Simplices fixed vertex-wise by every element of h.
std::vector<Simplex> fixedSubcomplex(const GSpace& space, const Subgroup& h);

/// Connected components of the 1-skeleton of a face-closed simplex set.
/// Each component is a sorted vertex list; components are ordered by their
/// minimal vertex, which makes the position a stable component id.
std::vector<std::vector<std::uint32_t>> components(const std::vector<Simplex>& simplices);

struct FixResult {
  std::size_t subgroupClass = 0;
  std::vector<Simplex> fixedSubcomplex;
  std::vector<std::vector<std::uint32_t>> components;

  /// Component id of a fixed vertex; throws if the vertex is not fixed.
  std::size_t componentOf(std::uint32_t vertex) const;
};

/// Action of one normalizer element n on the components of Fix(H): c -> n c.
struct WeylElementAction {
  std::size_t element = 0;
  std::vector<std::size_t> componentImage;
};

struct Pi0FixPresheaf {
  std::vector<FixResult> fix;  ///< per conjugacy class
  /// Per orbit-category morphism m: H0 -> H1, the induced map
  /// pi_0 Fix(H1) -> pi_0 Fix(H0), x -> g^-1 x, indexed by component of Fix(H1).
  std::vector<std::vector<std::size_t>> inducedMaps;
  /// Per class, the action of every element of N_G(H) on components.
  std::vector<std::vector<WeylElementAction>> weylAction;
};

Pi0FixPresheaf pi0FixPresheaf(const OrbitCategory& orbit, const GSpace& space);

/// Iso(v), the stabilizer of a vertex.
Subgroup isotropy(const FiniteGroup& group, const GSpace& space, std::uint32_t vertex);
/// G v, sorted.
std::vector<std::uint32_t> orbitOf(const GSpace& space, std::uint32_t vertex);

/// Barycentric subdivision: vertices are the simplices of the input (in
/// canonical order), simplices are chains of faces, and each generator acts
/// on barycenters through its action on simplices.
GComplex barycentricSubdivision(const GSpace& space, const FiniteGroup& group);

}  // namespace phasediag
