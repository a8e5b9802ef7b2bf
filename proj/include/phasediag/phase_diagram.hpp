#pragma once

// The phase diagram of a transformation groupoid [X/G]: the category of
// elements of the presheaf H -> pi_0 Fix(H) over the orbit category.
//
// Objects are pairs (H, c) of a conjugacy class and a component c of
// Fix(H). An arrow (H0, c0) -> (H1, c1) is an orbit-category arrow
// a: H0 -> H1 whose induced map pi_0 Fix(H1) -> pi_0 Fix(H0) sends c1 to
// c0. Arrows therefore run from smaller toward larger isotropy.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phasediag/finite_category.hpp"
#include "phasediag/gspace.hpp"
#include "phasediag/orbit_category.hpp"

namespace phasediag {

struct PhaseObject {
  std::size_t subgroupClass = 0;
  std::size_t componentId = 0;
  std::string label;
};

struct PhaseDiagram {
  FiniteCategory category;
  std::vector<PhaseObject> objects;
  std::vector<std::size_t> autOrders;
  /// Phase diagram -> orbit category, dropping the component coordinate.
  FunctorData forgetful;
};

PhaseDiagram buildPhaseDiagram(const OrbitCategory& orbit, const Pi0FixPresheaf& presheaf);

/// The forgetful functor onto O(G) recorded during construction.
const FunctorData& forgetfulFunctor(const PhaseDiagram& diagram);

/// The functor [X/G] -> Phi_0[X/G] restricted to vertices. A vertex v with
/// Iso(v) = k R k^-1 (R the class representative, k the least such element)
/// goes to (class of R, component of k^-1 v). An arrow g: v0 -> v1 goes to
/// the automorphism of R represented by k1^-1 g k0.
struct QuotientFunctor {
  std::vector<std::size_t> objectMap;                 ///< per vertex
  std::vector<std::vector<std::size_t>> arrowMap;     ///< [vertex][group element]
};

QuotientFunctor quotientFunctor(const OrbitCategory& orbit, const Pi0FixPresheaf& presheaf,
                                const PhaseDiagram& diagram, const GSpace& space);

/// Exhaustively checks endpoints, identities and composition of the quotient
/// functor over all vertices and pairs of group elements.
std::optional<std::string> checkQuotientFunctor(const OrbitCategory& orbit, const PhaseDiagram& diagram,
                                                const GSpace& space, const QuotientFunctor& functor);

// ---------------------------------------------------------------------------
// Stratified complexes

struct StratifiedComplex {
  std::size_t vertexCount = 0;
  std::vector<Simplex> simplices;                         ///< closed under faces
  std::size_t strataCount = 0;
  std::vector<std::pair<std::size_t, std::size_t>> relations;  ///< i <= j
  std::vector<std::size_t> assignment;                    ///< stratum per simplex
  std::optional<std::vector<long>> codim;
};

/// Category of elements of i -> pi_0(closure of stratum i). Objects are
/// (i, component); there is one arrow (i, c) -> (j, c') when i <= j and c
/// lies inside c'. Rejects closure-condition violations (a face of a simplex
/// in stratum i sitting in a stratum j with j not <= i); warns on non-monotone
/// codimension and on relations i <= j whose closures are not nested.
FiniteCategory strataCategory(const StratifiedComplex& strata, Diagnostics* diag = nullptr);

}  // namespace phasediag
