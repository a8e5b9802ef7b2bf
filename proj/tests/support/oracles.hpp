#pragma once

// Independent brute-force oracles used by the unit and acceptance tests.
// They work with permutations and vertex sets directly and avoid the
// library's multiplication tables, transporters and union-find.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "phasediag/finite_category.hpp"
#include "phasediag/gspace.hpp"
#include "phasediag/io.hpp"
#include "phasediag/perm_group.hpp"

namespace oracle {

using phasediag::Permutation;
using PermSet = std::set<Permutation>;

/// Closure of a generating set by breadth-first multiplication.
inline PermSet closure(std::size_t degree, const std::vector<Permutation>& gens) {
  PermSet seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        auto p = g * a;
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// All subgroups generated by at most two elements. Every subgroup of the
/// bundled groups (all of order at most 24) is 2-generated.
inline std::set<PermSet> twoGeneratedSubgroups(const std::vector<Permutation>& elements) {
  std::set<PermSet> out;
  const auto n = elements.front().degree();
  for (const auto& a : elements)
    for (const auto& b : elements) out.insert(closure(n, {a, b}));
  return out;
}

inline PermSet toSet(const phasediag::FiniteGroup& g, const phasediag::Subgroup& h) {
  PermSet s;
  for (auto m : h.members) s.insert(g.element(m));
  return s;
}

/// Left cosets xH as sets of permutations.
inline std::vector<PermSet> leftCosets(const std::vector<Permutation>& elements, const PermSet& h) {
  std::set<PermSet> cosets;
  for (const auto& x : elements) {
    PermSet c;
    for (const auto& k : h) c.insert(x * k);
    cosets.insert(c);
  }
  return {cosets.begin(), cosets.end()};
}

/// Number of G-equivariant maps G/H0 -> G/H1. Every candidate image y H1 of
/// the base coset defines a map x H0 -> x y H1 on representatives; it is kept
/// when it is well defined on every coset. Distinct maps are counted once.
inline std::size_t equivariantMapCount(const std::vector<Permutation>& elements, const PermSet& h0, const PermSet& h1) {
  const auto c0 = leftCosets(elements, h0);
  const auto c1 = leftCosets(elements, h1);
  auto cosetIndex = [&](const Permutation& p) {
    for (std::size_t i = 0; i < c1.size(); ++i)
      if (c1[i].count(p)) return i;
    return c1.size();
  };
  std::set<std::vector<std::size_t>> maps;
  for (const auto& target : c1) {
    const auto& y = *target.begin();
    std::vector<std::size_t> f;
    bool ok = true;
    for (const auto& coset : c0) {
      std::set<std::size_t> images;
      for (const auto& x : coset) images.insert(cosetIndex(x * y));
      if (images.size() != 1) {
        ok = false;
        break;
      }
      f.push_back(*images.begin());
    }
    // Equivariance: f(g xH0) = g f(xH0) for every g.
    for (std::size_t i = 0; ok && i < c0.size(); ++i) {
      for (const auto& g : elements) {
        const auto gx = g * *c0[i].begin();
        std::size_t j = 0;
        while (!c0[j].count(gx)) ++j;
        if (cosetIndex(g * *c1[f[i]].begin()) != f[j]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) maps.insert(f);
  }
  return maps.size();
}

/// Element permutations of a G-space, one vertex image vector per group element,
/// computed by composing generator actions along words.
inline std::map<Permutation, std::vector<std::uint32_t>> vertexActions(const phasediag::FiniteGroup& g,
                                                                      const phasediag::GComplex& c) {
  std::map<Permutation, std::vector<std::uint32_t>> act;
  std::vector<std::uint32_t> id(c.vertexCount);
  std::iota(id.begin(), id.end(), 0u);
  act[Permutation::identity(g.degree())] = id;
  std::vector<Permutation> frontier{Permutation::identity(g.degree())};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& a : frontier)
      for (std::size_t i = 0; i < g.generators().size(); ++i) {
        auto p = g.generators()[i] * a;
        if (act.count(p)) continue;
        std::vector<std::uint32_t> img(c.vertexCount);
        for (std::uint32_t v = 0; v < c.vertexCount; ++v) img[v] = c.action[i][act[a][v]];
        act[p] = img;
        next.push_back(p);
      }
    frontier = std::move(next);
  }
  return act;
}

/// Components of Fix(H) by repeated edge relaxation over the fixed simplices.
inline std::size_t fixComponentCount(const phasediag::GComplex& c,
                                     const std::map<Permutation, std::vector<std::uint32_t>>& act, const PermSet& h) {
  std::vector<bool> fixed(c.vertexCount, true);
  for (const auto& p : h)
    for (std::uint32_t v = 0; v < c.vertexCount; ++v)
      if (act.at(p)[v] != v) fixed[v] = false;
  std::vector<std::size_t> label(c.vertexCount);
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : c.simplices) {
      if (!std::all_of(s.begin(), s.end(), [&](auto v) { return fixed[v]; })) continue;
      std::size_t lo = label[s[0]];
      for (auto v : s) lo = std::min(lo, label[v]);
      for (auto v : s)
        if (label[v] != lo) label[v] = lo, changed = true;
    }
  }
  std::set<std::size_t> roots;
  for (std::uint32_t v = 0; v < c.vertexCount; ++v)
    if (fixed[v]) roots.insert(label[v]);
  return roots.size();
}

/// Functor data relating a category to importOlog(exportOlog(it)) through the
/// exported ids: object "o<k>" and arrow "a<m>" map to the imported entities
/// carrying the same ids.
inline phasediag::FunctorData ologIdMap(const phasediag::FiniteCategory& original, const phasediag::Json& olog,
                                        const phasediag::FiniteCategory& imported) {
  phasediag::FunctorData f;
  std::map<std::string, std::size_t> importedObject, importedArrow;
  for (std::size_t k = 0; k < olog["objects"].size(); ++k) {
    importedObject[olog["objects"][k]["id"]] = k;
    importedArrow[olog["objects"][k]["identity"]] = imported.identity(k);
  }
  const auto n = olog["objects"].size();
  for (std::size_t k = 0; k < olog["arrows"].size(); ++k) importedArrow[olog["arrows"][k]["id"]] = n + k;
  for (std::size_t i = 0; i < original.objectCount(); ++i) f.objectMap.push_back(importedObject.at("o" + std::to_string(i)));
  for (std::size_t m = 0; m < original.morphismCount(); ++m) f.morphismMap.push_back(importedArrow.at("a" + std::to_string(m)));
  return f;
}

/// Bernoulli relative entropy x ln(x/p) + (1-x) ln((1-x)/(1-p)).
inline double bernoulliKl(double p, double x) {
  return x * std::log(x / p) + (1 - x) * std::log((1 - x) / (1 - p));
}

}  // namespace oracle
