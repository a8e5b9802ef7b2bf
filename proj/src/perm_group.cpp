#include "phasediag/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace phasediag {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto x = images_[i];
    if (x >= images_.size()) {
      throw ValidationError("image " + std::to_string(x) + " of point " + std::to_string(i) +
                            " is out of range for degree " + std::to_string(images_.size()));
    }
    if (seen[x]) throw ValidationError("point " + std::to_string(x) + " is hit twice; not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::fromCycles(std::size_t degree, std::string_view text) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skipSpace = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skipSpace();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skipSpace();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected point index or ')' in cycle notation", i);
      }
      const std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) break;
        ++i;
      }
      if (value >= degree) throw ParseError("point out of range for degree " + std::to_string(degree), start);
      if (used[value]) throw ParseError("point " + std::to_string(value) + " repeated in cycles", start);
      used[value] = true;
      cycle.push_back(static_cast<std::uint32_t>(value));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skipSpace();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw ValidationError("degree mismatch in permutation product");
  std::vector<std::uint32_t> out(degree());
  for (std::size_t x = 0; x < degree(); ++x) out[x] = images_[rhs.images_[x]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(degree());
  for (std::size_t x = 0; x < degree(); ++x) out[images_[x]] = static_cast<std::uint32_t>(x);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::isIdentity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::toCycles() const {
  std::string out;
  std::vector<bool> done(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

FiniteGroup FiniteGroup::closure(std::size_t degree, std::vector<Permutation> generators, Diagnostics* diag) {
  if (degree == 0) throw ValidationError("group degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].degree() != degree) {
      throw ValidationError("generator " + std::to_string(i) + " has degree " +
                            std::to_string(generators[i].degree()) + ", expected " + std::to_string(degree));
    }
  }

  FiniteGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);

  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : g.generators_) {
      Permutation next = s * current;
      if (seen.insert(next).second) {
        if (seen.size() > kMaxGroupOrder) {
          throw CapExceeded("group order exceeds the cap of " + std::to_string(kMaxGroupOrder));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  g.elements_.assign(seen.begin(), seen.end());
  if (diag && g.order() > kWarnGroupOrder) {
    diag->warn("group order " + std::to_string(g.order()) + " exceeds " + std::to_string(kWarnGroupOrder) +
               "; subgroup enumeration may be slow");
  }

  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  for (std::size_t i = 0; i < g.order(); ++i) index.emplace(g.elements_[i], static_cast<std::uint32_t>(i));
  const std::size_t n = g.order();
  g.table_.resize(n * n);
  g.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto product = index.at(g.elements_[a] * g.elements_[b]);
      g.table_[a * n + b] = product;
      if (product == 0) g.inverses_[a] = static_cast<std::uint32_t>(b);
    }
  }
  return g;
}

std::optional<std::size_t> FiniteGroup::find(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroup::indexOf(const Permutation& p) const {
  if (auto i = find(p)) return *i;
  throw ValidationError("permutation " + p.toCycles() + " is not an element of the group");
}

std::vector<std::size_t> FiniteGroup::generatorIndices() const {
  std::vector<std::size_t> out;
  out.reserve(generators_.size());
  for (const auto& s : generators_) out.push_back(indexOf(s));
  return out;
}

bool Subgroup::contains(std::size_t element) const {
  return std::binary_search(members.begin(), members.end(), element);
}

bool Subgroup::isSubsetOf(const Subgroup& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

Subgroup generatedSubgroup(const FiniteGroup& group, const std::vector<std::size_t>& generators) {
  std::vector<bool> in(group.order(), false);
  std::vector<std::size_t> members{FiniteGroup::identityIndex()};
  in[FiniteGroup::identityIndex()] = true;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (auto s : generators) {
      const auto next = group.multiply(s, members[k]);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

Subgroup conjugateSubgroup(const FiniteGroup& group, const Subgroup& subgroup, std::size_t g) {
  Subgroup out;
  out.members.reserve(subgroup.order());
  for (auto h : subgroup.members) out.members.push_back(group.conjugate(g, h));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<Subgroup> allSubgroups(const FiniteGroup& group, Diagnostics* diag) {
  if (group.order() > kMaxGroupOrder) throw CapExceeded("group order exceeds the cap");
  if (diag && group.order() > kWarnGroupOrder) {
    diag->warn("enumerating subgroups of a group of order " + std::to_string(group.order()));
  }
  // Subgroup -> a generating set for it.
  std::map<Subgroup, std::vector<std::size_t>> known;
  std::deque<const std::pair<const Subgroup, std::vector<std::size_t>>*> queue;
  auto record = [&](Subgroup h, std::vector<std::size_t> gens) {
    auto [it, inserted] = known.emplace(std::move(h), std::move(gens));
    if (inserted) queue.push_back(&*it);
  };
  for (std::size_t g = 0; g < group.order(); ++g) {
    std::vector<std::size_t> gens;
    if (g != FiniteGroup::identityIndex()) gens.push_back(g);
    record(generatedSubgroup(group, gens), gens);
  }
  while (!queue.empty()) {
    const auto* entry = queue.front();
    queue.pop_front();
    const Subgroup& h = entry->first;
    std::vector<bool> covered(group.order(), false);
    for (auto m : h.members) covered[m] = true;
    for (std::size_t g = 0; g < group.order(); ++g) {
      if (covered[g]) continue;
      auto gens = entry->second;
      gens.push_back(g);
      // <H, hg> = <H, g>: the whole coset Hg gives the same extension.
      for (auto m : h.members) covered[group.multiply(m, g)] = true;
      auto k = generatedSubgroup(group, gens);
      record(std::move(k), std::move(gens));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (auto& [h, gens] : known) out.push_back(h);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<SubgroupClass> conjugacyClassesOfSubgroups(const FiniteGroup& group,
                                                       const std::vector<Subgroup>& subgroups) {
  std::set<Subgroup> assigned;
  std::vector<SubgroupClass> classes;
  for (const auto& h : subgroups) {
    if (assigned.count(h)) continue;
    std::set<Subgroup> orbit;
    for (std::size_t g = 0; g < group.order(); ++g) orbit.insert(conjugateSubgroup(group, h, g));
    SubgroupClass cls;
    cls.orbitOfSubgroups.assign(orbit.begin(), orbit.end());
    cls.representative = cls.orbitOfSubgroups.front();
    assigned.insert(orbit.begin(), orbit.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    return a.representative.members < b.representative.members;
  });
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i].classIndex = i;
  return classes;
}

std::size_t SubgroupLattice::classOfSubgroup(const Subgroup& h) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h, [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  if (it == subgroups.end() || *it != h) throw ValidationError("subgroup is not in the lattice");
  return classOf[static_cast<std::size_t>(it - subgroups.begin())];
}

SubgroupLattice buildLattice(const FiniteGroup& group, Diagnostics* diag) {
  SubgroupLattice lattice;
  lattice.subgroups = allSubgroups(group, diag);
  lattice.classes = conjugacyClassesOfSubgroups(group, lattice.subgroups);
  std::map<Subgroup, std::size_t> classIndex;
  for (const auto& cls : lattice.classes)
    for (const auto& h : cls.orbitOfSubgroups) classIndex.emplace(h, cls.classIndex);
  lattice.classOf.reserve(lattice.subgroups.size());
  for (const auto& h : lattice.subgroups) lattice.classOf.push_back(classIndex.at(h));
  return lattice;
}

std::vector<std::size_t> transporter(const FiniteGroup& group, const Subgroup& h0, const Subgroup& h1) {
  std::vector<std::size_t> out;
  if (h1.order() % h0.order() != 0) return out;
  for (std::size_t g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (auto h : h0.members) {
      if (!h1.contains(group.conjugate(g, h))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return out;
}

Subgroup normalizer(const FiniteGroup& group, const Subgroup& h) {
  // For finite H, g H g^-1 contained in H already forces equality.
  return Subgroup{transporter(group, h, h)};
}

FiniteGroup weylGroup(const FiniteGroup& group, const Subgroup& h) {
  const Subgroup n = normalizer(group, h);
  // Left cosets xH inside N, labelled by their minimal element.
  std::map<std::size_t, std::uint32_t> cosetOf;
  std::vector<std::size_t> cosetMin;
  for (auto x : n.members) {
    std::size_t least = group.order();
    for (auto y : h.members) least = std::min(least, group.multiply(x, y));
    if (cosetOf.emplace(least, 0).second) cosetMin.push_back(least);
  }
  std::sort(cosetMin.begin(), cosetMin.end());
  for (std::uint32_t i = 0; i < cosetMin.size(); ++i) cosetOf[cosetMin[i]] = i;
  auto cosetIndex = [&](std::size_t x) {
    std::size_t least = group.order();
    for (auto y : h.members) least = std::min(least, group.multiply(x, y));
    return cosetOf.at(least);
  };
  std::vector<Permutation> generators;
  std::set<Permutation> distinct;
  for (auto g : n.members) {
    std::vector<std::uint32_t> images(cosetMin.size());
    for (std::size_t i = 0; i < cosetMin.size(); ++i) images[i] = cosetIndex(group.multiply(g, cosetMin[i]));
    Permutation p(std::move(images));
    if (!p.isIdentity() && distinct.insert(p).second) generators.push_back(std::move(p));
  }
  return FiniteGroup::closure(cosetMin.size(), std::move(generators));
}

std::string classLabel(const SubgroupClass& cls) {
  return "H" + std::to_string(cls.classIndex) + ":" + std::to_string(cls.representative.order());
}

}  // namespace phasediag
