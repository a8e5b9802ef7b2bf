#include "phasediag/orbit_category.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace phasediag {

std::size_t canonicalCosetRep(const FiniteGroup& group, const Subgroup& h1, std::size_t g) {
  std::size_t least = group.order();
  for (auto h : h1.members) least = std::min(least, group.multiply(h, g));
  return least;
}

std::vector<OrbitMorphism> homSet(const FiniteGroup& group, const SubgroupLattice& lattice, std::size_t h0Class,
                                  std::size_t h1Class) {
  const auto& h0 = lattice.classes.at(h0Class).representative;
  const auto& h1 = lattice.classes.at(h1Class).representative;
  std::set<std::size_t> reps;
  for (auto g : transporter(group, h0, h1)) reps.insert(canonicalCosetRep(group, h1, g));
  std::vector<OrbitMorphism> out;
  out.reserve(reps.size());
  for (auto r : reps) out.push_back({h0Class, h1Class, r});
  return out;
}

OrbitMorphism compose(const FiniteGroup& group, const SubgroupLattice& lattice, const OrbitMorphism& m2,
                      const OrbitMorphism& m1) {
  if (m1.targetClass != m2.sourceClass) throw ValidationError("orbit morphisms are not composable");
  const auto& h2 = lattice.classes.at(m2.targetClass).representative;
  return {m1.sourceClass, m2.targetClass, canonicalCosetRep(group, h2, group.multiply(m2.cosetRep, m1.cosetRep))};
}

OrbitCategory buildOrbitCategory(FiniteGroup group, Diagnostics* diag) {
  auto lattice = buildLattice(group, diag);
  return buildOrbitCategory(std::move(group), std::move(lattice));
}

OrbitCategory buildOrbitCategory(FiniteGroup group, SubgroupLattice lattice) {
  OrbitCategory oc{std::move(group), std::move(lattice), {}, {}};
  const auto& G = oc.group;
  const std::size_t n = oc.lattice.classes.size();

  for (const auto& cls : oc.lattice.classes) {
    oc.category.addObject({classLabel(cls), cls.classIndex, 0});
    oc.arrows.push_back({cls.classIndex, cls.classIndex, FiniteGroup::identityIndex()});
  }
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> idOf;
  for (std::size_t i = 0; i < n; ++i) idOf[{i, i, FiniteGroup::identityIndex()}] = oc.category.identity(i);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& m : homSet(G, oc.lattice, a, b)) {
        if (a == b && m.cosetRep == FiniteGroup::identityIndex()) continue;
        const auto id = oc.category.addMorphism(a, b, G.element(m.cosetRep).toCycles());
        oc.arrows.push_back(m);
        idOf[{a, b, m.cosetRep}] = id;
      }
    }
  }
  for (std::size_t f = 0; f < oc.arrows.size(); ++f) {
    if (oc.category.isIdentity(f)) continue;
    const auto& mf = oc.arrows[f];
    for (std::size_t c = 0; c < n; ++c) {
      for (auto g : oc.category.homSet(mf.targetClass, c)) {
        if (oc.category.isIdentity(g)) continue;
        const auto gf = compose(G, oc.lattice, oc.arrows[g], mf);
        oc.category.setComposite(g, f, idOf.at({gf.sourceClass, gf.targetClass, gf.cosetRep}));
      }
    }
  }
  return oc;
}

}  // namespace phasediag
