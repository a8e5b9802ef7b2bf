#include "phasediag/gspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace phasediag {

namespace {

bool simplexLess(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string simplexText(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<Simplex> canonicalSimplices(std::vector<Simplex> simplices) {
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(simplices.begin(), simplices.end(), simplexLess);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  return simplices;
}

std::vector<Simplex> closeUnderFaces(const std::vector<Simplex>& simplices) {
  std::set<Simplex> all;
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const std::size_t k = s.size();
    if (k == 0) continue;
    if (k > 20) throw ValidationError("simplex dimension too large for face closure");
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      all.insert(std::move(face));
    }
  }
  return canonicalSimplices({all.begin(), all.end()});
}

Simplex GSpace::act(std::size_t g, const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(vertexAction_[g][v]);
  std::sort(out.begin(), out.end());
  return out;
}

GSpace GSpace::create(const FiniteGroup& group, GComplex complex, Diagnostics* diag) {
  const std::size_t n = complex.vertexCount;
  for (const auto& s : complex.simplices) {
    if (s.empty()) throw ValidationError("empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= n) throw ValidationError("simplex " + simplexText(s) + " has a vertex out of range");
      if (i > 0 && s[i - 1] >= s[i]) throw ValidationError("simplex " + simplexText(s) + " is not sorted");
    }
  }
  complex.simplices = canonicalSimplices(std::move(complex.simplices));
  const std::set<Simplex> present(complex.simplices.begin(), complex.simplices.end());
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!present.count(Simplex{v})) throw ValidationError("vertex " + std::to_string(v) + " is missing");
  }
  for (const auto& s : complex.simplices) {
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      if (!present.count(face)) {
        throw ValidationError("face " + simplexText(face) + " of " + simplexText(s) + " is missing");
      }
    }
  }

  if (complex.action.size() != group.generators().size()) {
    throw ValidationError("action lists " + std::to_string(complex.action.size()) + " generator maps, group has " +
                          std::to_string(group.generators().size()));
  }
  std::vector<Permutation> maps;
  for (std::size_t i = 0; i < complex.action.size(); ++i) {
    if (complex.action[i].size() != n) {
      throw ValidationError("generator " + std::to_string(i) + " vertex map has the wrong length");
    }
    try {
      maps.emplace_back(complex.action[i]);
    } catch (const ValidationError& e) {
      throw ValidationError("generator " + std::to_string(i) + " vertex map: " + e.what());
    }
    for (const auto& s : complex.simplices) {
      Simplex img;
      for (auto v : s) img.push_back(complex.action[i][v]);
      std::sort(img.begin(), img.end());
      if (!present.count(img)) {
        throw ValidationError("generator " + std::to_string(i) + " maps simplex " + simplexText(s) +
                              " to a non-simplex");
      }
    }
  }

  // Walk the Cayley graph: rho(s g) must equal rho(s) rho(g) on every edge,
  // otherwise the generator maps violate a relation of the group.
  GSpace space;
  const auto gens = group.generatorIndices();
  std::vector<std::optional<Permutation>> rho(group.order());
  rho[FiniteGroup::identityIndex()] = Permutation::identity(n);
  std::vector<std::size_t> queue{FiniteGroup::identityIndex()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto g = queue[k];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto sg = group.multiply(gens[i], g);
      Permutation image = n == 0 ? Permutation() : maps[i] * *rho[g];
      if (!rho[sg]) {
        rho[sg] = std::move(image);
        queue.push_back(sg);
      } else if (*rho[sg] != image) {
        throw ValidationError("generator vertex maps do not satisfy the group relations (generator " +
                              std::to_string(i) + ")");
      }
    }
  }
  space.vertexAction_.reserve(group.order());
  for (auto& r : rho) space.vertexAction_.push_back(r->images());
  space.complex_ = std::move(complex);

  if (diag) {
    std::size_t setwiseOnly = 0;
    for (std::size_t g = 0; g < group.order(); ++g) {
      for (const auto& s : space.complex_.simplices) {
        if (s.size() < 2 || space.act(g, s) != s) continue;
        bool pointwise = true;
        for (auto v : s) pointwise = pointwise && space.act(g, v) == v;
        if (!pointwise) ++setwiseOnly;
      }
    }
    if (setwiseOnly > 0) {
      diag->warn(std::to_string(setwiseOnly) +
                 " (element, simplex) pairs fix a simplex setwise but not vertex-wise; fixed sets may be "
                 "under-reported, consider a barycentric subdivision");
    }
  }
  return space;
}

std::vector<Simplex> fixedSubcomplex(const GSpace& space, const Subgroup& h) {
  std::vector<bool> fixed(space.vertexCount(), true);
  for (std::uint32_t v = 0; v < space.vertexCount(); ++v)
    for (auto g : h.members)
      if (space.act(g, v) != v) {
        fixed[v] = false;
        break;
      }
  std::vector<Simplex> out;
  for (const auto& s : space.complex().simplices) {
    if (std::all_of(s.begin(), s.end(), [&](std::uint32_t v) { return fixed[v]; })) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> components(const std::vector<Simplex>& simplices) {
  std::uint32_t maxVertex = 0;
  for (const auto& s : simplices)
    for (auto v : s) maxVertex = std::max(maxVertex, v + 1);
  UnionFind uf(maxVertex);
  std::vector<bool> present(maxVertex, false);
  for (const auto& s : simplices) {
    for (auto v : s) present[v] = true;
    for (std::size_t i = 1; i < s.size(); ++i) uf.unite(s[0], s[i]);
  }
  std::vector<std::vector<std::uint32_t>> byRoot(maxVertex);
  for (std::uint32_t v = 0; v < maxVertex; ++v)
    if (present[v]) byRoot[uf.find(v)].push_back(v);
  std::vector<std::vector<std::uint32_t>> out;
  // Roots are minimal vertices, so scanning roots in order sorts by minimum.
  for (auto& c : byRoot)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

std::size_t FixResult::componentOf(std::uint32_t vertex) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (std::binary_search(components[i].begin(), components[i].end(), vertex)) return i;
  }
  throw ValidationError("vertex " + std::to_string(vertex) + " is not in the fixed subcomplex");
}

Pi0FixPresheaf pi0FixPresheaf(const OrbitCategory& orbit, const GSpace& space) {
  const auto& G = orbit.group;
  Pi0FixPresheaf out;
  for (const auto& cls : orbit.lattice.classes) {
    FixResult r;
    r.subgroupClass = cls.classIndex;
    r.fixedSubcomplex = fixedSubcomplex(space, cls.representative);
    r.components = components(r.fixedSubcomplex);
    out.fix.push_back(std::move(r));
  }
  for (std::size_t m = 0; m < orbit.arrows.size(); ++m) {
    const auto& arrow = orbit.arrows[m];
    const auto& target = out.fix[arrow.targetClass];
    const auto& source = out.fix[arrow.sourceClass];
    const auto gInv = G.inverse(arrow.cosetRep);
    std::vector<std::size_t> map;
    map.reserve(target.components.size());
    for (const auto& c : target.components) map.push_back(source.componentOf(space.act(gInv, c.front())));
    out.inducedMaps.push_back(std::move(map));
  }
  for (const auto& cls : orbit.lattice.classes) {
    const auto& fix = out.fix[cls.classIndex];
    std::vector<WeylElementAction> actions;
    for (auto n : normalizer(G, cls.representative).members) {
      WeylElementAction a{n, {}};
      for (const auto& c : fix.components) a.componentImage.push_back(fix.componentOf(space.act(n, c.front())));
      actions.push_back(std::move(a));
    }
    out.weylAction.push_back(std::move(actions));
  }
  return out;
}

Subgroup isotropy(const FiniteGroup& group, const GSpace& space, std::uint32_t vertex) {
  if (vertex >= space.vertexCount()) throw ValidationError("vertex " + std::to_string(vertex) + " is out of range");
  Subgroup h;
  for (std::size_t g = 0; g < group.order(); ++g)
    if (space.act(g, vertex) == vertex) h.members.push_back(g);
  return h;
}

std::vector<std::uint32_t> orbitOf(const GSpace& space, std::uint32_t vertex) {
  if (vertex >= space.vertexCount()) throw ValidationError("vertex " + std::to_string(vertex) + " is out of range");
  std::set<std::uint32_t> orbit;
  for (std::size_t g = 0; g < space.groupOrder(); ++g) orbit.insert(space.act(g, vertex));
  return {orbit.begin(), orbit.end()};
}

GComplex barycentricSubdivision(const GSpace& space, const FiniteGroup& group) {
  const auto& simplices = space.complex().simplices;
  auto indexOf = [&](const Simplex& s) {
    auto it = std::lower_bound(simplices.begin(), simplices.end(), s, simplexLess);
    return static_cast<std::uint32_t>(it - simplices.begin());
  };
  GComplex out;
  out.vertexCount = simplices.size();

  // Chains sigma_0 < sigma_1 < ... built by extending each chain with a
  // proper coface of its top element.
  std::vector<std::vector<std::uint32_t>> cofaces(simplices.size());
  for (std::uint32_t i = 0; i < simplices.size(); ++i)
    for (std::uint32_t j = 0; j < simplices.size(); ++j)
      if (simplices[j].size() > simplices[i].size() &&
          std::includes(simplices[j].begin(), simplices[j].end(), simplices[i].begin(), simplices[i].end()))
        cofaces[i].push_back(j);
  std::vector<Simplex> frontier;
  for (std::uint32_t i = 0; i < simplices.size(); ++i) frontier.push_back({i});
  while (!frontier.empty()) {
    std::vector<Simplex> next;
    for (const auto& chain : frontier) {
      out.simplices.push_back(chain);
      for (auto j : cofaces[chain.back()]) {
        Simplex longer = chain;
        longer.push_back(j);
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }
  out.simplices = canonicalSimplices(std::move(out.simplices));

  for (auto g : group.generatorIndices()) {
    std::vector<std::uint32_t> images(simplices.size());
    for (std::uint32_t i = 0; i < simplices.size(); ++i) images[i] = indexOf(space.act(g, simplices[i]));
    out.action.push_back(std::move(images));
  }
  return out;
}

}  // namespace phasediag
