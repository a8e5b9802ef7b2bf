#pragma once

// Finite permutation groups and subgroup-level primitives: lattice,
// conjugacy classes, transporters, normalizers and Weyl groups.
//
// Compact Lie groups are specialized to finite groups here. All morphism
// spaces of the orbit category are then discrete, so the discretized orbit
// category O_0(G) coincides with O(G).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasediag/error.hpp"

namespace phasediag {

/// Hard cap on |G| for every operation that materializes the group.
inline constexpr std::size_t kMaxGroupOrder = 1024;
/// Orders above this trigger a warning before subgroup-lattice enumeration.
inline constexpr std::size_t kWarnGroupOrder = 200;

class Permutation {
 public:
  Permutation() = default;
  /// Throws ValidationError unless images is a bijection on {0,...,n-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Parses cycle notation such as "(0 1)(2 3 4)"; "()" or "" is the identity.
  static Permutation fromCycles(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  /// (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool isIdentity() const;

  /// Cycle notation without fixed points; "()" for the identity.
  std::string toCycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

class FiniteGroup {
 public:
  /// Smallest group containing the generators. Elements are sorted
  /// lexicographically by image array, so index 0 is the identity.
  static FiniteGroup closure(std::size_t degree, std::vector<Permutation> generators,
                             Diagnostics* diag = nullptr);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t index) const { return elements_[index]; }

  static constexpr std::size_t identityIndex() noexcept { return 0; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  /// g h g^-1
  std::size_t conjugate(std::size_t g, std::size_t h) const { return multiply(multiply(g, h), inverse(g)); }

  std::optional<std::size_t> find(const Permutation& p) const;
  std::size_t indexOf(const Permutation& p) const;
  /// Element index of each generator, in generator order.
  std::vector<std::size_t> generatorIndices() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverses_;
};

/// A subgroup as a sorted set of element indices of its parent group.
struct Subgroup {
  std::vector<std::size_t> members;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(std::size_t element) const;
  bool isSubsetOf(const Subgroup& other) const;

  auto operator<=>(const Subgroup&) const = default;
};

struct SubgroupClass {
  std::size_t classIndex = 0;
  Subgroup representative;                ///< lexicographically minimal member list
  std::vector<Subgroup> orbitOfSubgroups; ///< all conjugates, sorted
};

/// Subgroup generated by the given element indices.
Subgroup generatedSubgroup(const FiniteGroup& group, const std::vector<std::size_t>& generators);

/// g H g^-1
Subgroup conjugateSubgroup(const FiniteGroup& group, const Subgroup& subgroup, std::size_t g);

/// Every subgroup, sorted by (order, member list). Layered closure: seeded
/// with the cyclic subgroups, each known subgroup is extended by one element
/// and closed until no new subgroup appears.
std::vector<Subgroup> allSubgroups(const FiniteGroup& group, Diagnostics* diag = nullptr);

/// Conjugation orbits of the given subgroup list (which must be closed under
/// conjugation), ordered by (order, representative).
std::vector<SubgroupClass> conjugacyClassesOfSubgroups(const FiniteGroup& group,
                                                       const std::vector<Subgroup>& subgroups);

/// Subgroups plus their conjugacy classes, computed once and shared.
struct SubgroupLattice {
  std::vector<Subgroup> subgroups;
  std::vector<SubgroupClass> classes;
  std::vector<std::size_t> classOf;  ///< class index per entry of subgroups

  std::size_t classOfSubgroup(const Subgroup& h) const;
};

SubgroupLattice buildLattice(const FiniteGroup& group, Diagnostics* diag = nullptr);

/// Trans_G(H0, H1) = { g | g H0 g^-1 is contained in H1 }, sorted.
std::vector<std::size_t> transporter(const FiniteGroup& group, const Subgroup& h0, const Subgroup& h1);

/// N_G(H) = { g | g H g^-1 = H }
Subgroup normalizer(const FiniteGroup& group, const Subgroup& h);

/// W_G(H) = N_G(H)/H, realized as the permutation action of N_G(H) on the
/// left cosets of H in N_G(H) (cosets numbered by their minimal element).
FiniteGroup weylGroup(const FiniteGroup& group, const Subgroup& h);

/// Human-readable label for a conjugacy class, e.g. "H3:2" (class 3, order 2).
std::string classLabel(const SubgroupClass& cls);

}  // namespace phasediag
