#include "phasediag/phase_diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace phasediag {

namespace {

std::string phaseLabel(const OrbitCategory& orbit, std::size_t cls, std::size_t component) {
  return "(" + classLabel(orbit.lattice.classes[cls]) + ", " + std::to_string(component) + ")";
}

std::size_t findOrbitArrow(const OrbitCategory& orbit, std::size_t a, std::size_t b, std::size_t rep) {
  for (auto m : orbit.category.homSet(a, b))
    if (orbit.arrows[m].cosetRep == rep) return m;
  throw ValidationError("orbit-category arrow not found");
}

}  // namespace

PhaseDiagram buildPhaseDiagram(const OrbitCategory& orbit, const Pi0FixPresheaf& presheaf) {
  PhaseDiagram pd;
  const std::size_t classCount = orbit.lattice.classes.size();
  std::vector<std::vector<std::size_t>> objectOf(classCount);
  for (std::size_t cls = 0; cls < classCount; ++cls) {
    for (std::size_t c = 0; c < presheaf.fix[cls].components.size(); ++c) {
      PhaseObject obj{cls, c, phaseLabel(orbit, cls, c)};
      const auto id = pd.category.addObject({obj.label, cls, c});
      objectOf[cls].push_back(id);
      pd.objects.push_back(std::move(obj));
      pd.forgetful.objectMap.push_back(cls);
      pd.forgetful.morphismMap.push_back(orbit.category.identity(cls));
    }
  }

  // (source object, target object, orbit arrow) -> phase arrow
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> arrowOf;
  for (std::size_t id = 0; id < pd.objects.size(); ++id) {
    arrowOf[{id, id, orbit.category.identity(pd.objects[id].subgroupClass)}] = pd.category.identity(id);
  }
  for (std::size_t m = 0; m < orbit.arrows.size(); ++m) {
    if (orbit.category.isIdentity(m)) continue;
    const auto& arrow = orbit.arrows[m];
    const auto& induced = presheaf.inducedMaps[m];
    for (std::size_t c1 = 0; c1 < induced.size(); ++c1) {
      const auto src = objectOf[arrow.sourceClass][induced[c1]];
      const auto dst = objectOf[arrow.targetClass][c1];
      const auto id = pd.category.addMorphism(src, dst, orbit.category.morphism(m).label);
      pd.forgetful.morphismMap.push_back(m);
      arrowOf[{src, dst, m}] = id;
    }
  }
  const std::size_t total = pd.category.morphismCount();
  for (std::size_t f = 0; f < total; ++f) {
    if (pd.category.isIdentity(f)) continue;
    const auto fTarget = pd.category.morphism(f).target;
    for (std::size_t dst = 0; dst < pd.objects.size(); ++dst) {
      for (auto g : pd.category.homSet(fTarget, dst)) {
        if (pd.category.isIdentity(g)) continue;
        const auto under = orbit.category.compose(pd.forgetful.morphismMap[g], pd.forgetful.morphismMap[f]);
        pd.category.setComposite(g, f, arrowOf.at({pd.category.morphism(f).source, dst, under}));
      }
    }
  }
  for (std::size_t id = 0; id < pd.objects.size(); ++id) pd.autOrders.push_back(pd.category.autOrder(id));
  return pd;
}

const FunctorData& forgetfulFunctor(const PhaseDiagram& diagram) { return diagram.forgetful; }

QuotientFunctor quotientFunctor(const OrbitCategory& orbit, const Pi0FixPresheaf& presheaf,
                                const PhaseDiagram& diagram, const GSpace& space) {
  const auto& G = orbit.group;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> objectId;
  for (std::size_t i = 0; i < diagram.objects.size(); ++i)
    objectId[{diagram.objects[i].subgroupClass, diagram.objects[i].componentId}] = i;

  const std::size_t n = space.vertexCount();
  std::vector<std::size_t> classOfVertex(n), conjugator(n);
  QuotientFunctor qf;
  for (std::uint32_t v = 0; v < n; ++v) {
    const Subgroup iso = isotropy(G, space, v);
    const auto cls = orbit.lattice.classOfSubgroup(iso);
    const auto& rep = orbit.representative(cls);
    std::size_t k = 0;
    while (conjugateSubgroup(G, rep, k) != iso) ++k;
    classOfVertex[v] = cls;
    conjugator[v] = k;
    const auto comp = presheaf.fix[cls].componentOf(space.act(G.inverse(k), v));
    qf.objectMap.push_back(objectId.at({cls, comp}));
  }
  qf.arrowMap.assign(n, std::vector<std::size_t>(G.order()));
  for (std::uint32_t v0 = 0; v0 < n; ++v0) {
    const auto cls = classOfVertex[v0];
    const auto& rep = orbit.representative(cls);
    for (std::size_t g = 0; g < G.order(); ++g) {
      const auto v1 = space.act(g, v0);
      const auto w = G.multiply(G.multiply(G.inverse(conjugator[v1]), g), conjugator[v0]);
      const auto orbitArrow = findOrbitArrow(orbit, cls, cls, canonicalCosetRep(G, rep, w));
      std::optional<std::size_t> found;
      for (auto m : diagram.category.homSet(qf.objectMap[v0], qf.objectMap[v1])) {
        if (diagram.forgetful.morphismMap[m] == orbitArrow) found = m;
      }
      if (!found) throw ValidationError("quotient functor: no phase arrow over the induced automorphism");
      qf.arrowMap[v0][g] = *found;
    }
  }
  return qf;
}

std::optional<std::string> checkQuotientFunctor(const OrbitCategory& orbit, const PhaseDiagram& diagram,
                                                const GSpace& space, const QuotientFunctor& functor) {
  const auto& G = orbit.group;
  for (std::uint32_t v0 = 0; v0 < space.vertexCount(); ++v0) {
    if (functor.arrowMap[v0][FiniteGroup::identityIndex()] != diagram.category.identity(functor.objectMap[v0])) {
      return "identity at vertex " + std::to_string(v0) + " is not preserved";
    }
    for (std::size_t g1 = 0; g1 < G.order(); ++g1) {
      const auto v1 = space.act(g1, v0);
      const auto& a1 = diagram.category.morphism(functor.arrowMap[v0][g1]);
      if (a1.source != functor.objectMap[v0] || a1.target != functor.objectMap[v1]) {
        return "arrow endpoints wrong at vertex " + std::to_string(v0);
      }
      for (std::size_t g2 = 0; g2 < G.order(); ++g2) {
        const auto lhs = functor.arrowMap[v0][G.multiply(g2, g1)];
        const auto rhs = diagram.category.compose(functor.arrowMap[v1][g2], functor.arrowMap[v0][g1]);
        if (lhs != rhs) return "composition not preserved at vertex " + std::to_string(v0);
      }
    }
  }
  return std::nullopt;
}

FiniteCategory strataCategory(const StratifiedComplex& strata, Diagnostics* diag) {
  const auto& simplices = strata.simplices;
  const std::size_t k = strata.strataCount;
  if (strata.assignment.size() != simplices.size()) {
    throw ValidationError("assignment lists " + std::to_string(strata.assignment.size()) + " strata for " +
                          std::to_string(simplices.size()) + " simplices");
  }
  std::map<Simplex, std::size_t> indexOf;
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    Simplex sorted = simplices[s];
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.back() >= strata.vertexCount) {
      throw ValidationError("simplex " + std::to_string(s) + " is malformed");
    }
    if (strata.assignment[s] >= k) throw ValidationError("simplex " + std::to_string(s) + " has no valid stratum");
    if (!indexOf.emplace(sorted, s).second) throw ValidationError("simplex " + std::to_string(s) + " is repeated");
  }

  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) leq[i][i] = true;
  for (auto [i, j] : strata.relations) {
    if (i >= k || j >= k) throw ValidationError("poset relation refers to an unknown stratum");
    leq[i][j] = true;
  }
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (leq[i][m])
        for (std::size_t j = 0; j < k; ++j)
          if (leq[m][j]) leq[i][j] = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (leq[i][j] && leq[j][i]) {
        throw ValidationError("poset relations form a cycle through strata " + std::to_string(i) + " and " +
                              std::to_string(j));
      }

  for (const auto& [sorted, s] : indexOf) {
    for (std::size_t drop = 0; sorted.size() > 1 && drop < sorted.size(); ++drop) {
      Simplex face;
      for (std::size_t t = 0; t < sorted.size(); ++t)
        if (t != drop) face.push_back(sorted[t]);
      auto it = indexOf.find(face);
      if (it == indexOf.end()) throw ValidationError("simplex " + std::to_string(s) + " is missing a face");
      const auto fi = strata.assignment[it->second];
      const auto si = strata.assignment[s];
      if (!leq[fi][si]) {
        throw ValidationError("closure condition violated: face simplex " + std::to_string(it->second) +
                              " (stratum " + std::to_string(fi) + ") of simplex " + std::to_string(s) +
                              " (stratum " + std::to_string(si) + ")");
      }
    }
  }

  if (strata.codim) {
    if (strata.codim->size() != k) throw ValidationError("codim array has the wrong length");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && leq[i][j] && (*strata.codim)[i] <= (*strata.codim)[j] && diag) {
          diag->warn("codimension is not strictly decreasing from stratum " + std::to_string(i) + " to " +
                     std::to_string(j));
        }
  }

  std::vector<std::vector<std::vector<std::uint32_t>>> comps(k);
  std::vector<std::set<std::uint32_t>> closureVertices(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Simplex> members;
    for (std::size_t s = 0; s < simplices.size(); ++s)
      if (strata.assignment[s] == i) members.push_back(simplices[s]);
    const auto closure = closeUnderFaces(members);
    comps[i] = components(closure);
    for (const auto& c : comps[i]) closureVertices[i].insert(c.begin(), c.end());
  }

  FiniteCategory cat;
  std::vector<std::vector<std::size_t>> objectOf(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < comps[i].size(); ++c)
      objectOf[i].push_back(cat.addObject({"(S" + std::to_string(i) + ", " + std::to_string(c) + ")", i, c}));

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrowBetween;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !leq[i][j]) continue;
      if (diag && !std::includes(closureVertices[j].begin(), closureVertices[j].end(), closureVertices[i].begin(),
                                 closureVertices[i].end())) {
        diag->warn("closure of stratum " + std::to_string(i) + " is not contained in the closure of stratum " +
                   std::to_string(j) + "; arrows exist only for contained components");
      }
      for (std::size_t c = 0; c < comps[i].size(); ++c) {
        for (std::size_t d = 0; d < comps[j].size(); ++d) {
          if (!std::includes(comps[j][d].begin(), comps[j][d].end(), comps[i][c].begin(), comps[i][c].end())) continue;
          const auto src = objectOf[i][c];
          const auto dst = objectOf[j][d];
          arrowBetween[{src, dst}] = cat.addMorphism(src, dst, "S" + std::to_string(i) + "<=S" + std::to_string(j));
        }
      }
    }
  }
  for (const auto& [ab, f] : arrowBetween) {
    for (const auto& [bc, g] : arrowBetween) {
      if (bc.first != ab.second) continue;
      cat.setComposite(g, f, arrowBetween.at({ab.first, bc.second}));
    }
  }
  return cat;
}

}  // namespace phasediag
