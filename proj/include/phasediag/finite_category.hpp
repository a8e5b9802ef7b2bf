#pragma once

// Finite categories with explicit hom-sets and a composition table. This is
// the common output shape of the orbit category, the phase diagram and the
// stratified-set diagrams.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace phasediag {

struct CategoryObject {
  std::string label;
  std::optional<std::size_t> classIndex;
  std::optional<std::size_t> componentId;
};

struct CategoryMorphism {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

class FiniteCategory {
 public:
  /// Adds an object together with its identity morphism; returns the object id.
  std::size_t addObject(CategoryObject object);
  std::size_t addMorphism(std::size_t source, std::size_t target, std::string label);
  /// Records left o right = result. Identity composites are implicit.
  void setComposite(std::size_t left, std::size_t right, std::size_t result);

  std::size_t objectCount() const noexcept { return objects_.size(); }
  std::size_t morphismCount() const noexcept { return morphisms_.size(); }
  const CategoryObject& object(std::size_t id) const { return objects_.at(id); }
  const std::vector<CategoryObject>& objects() const noexcept { return objects_; }
  const CategoryMorphism& morphism(std::size_t id) const { return morphisms_.at(id); }
  const std::vector<CategoryMorphism>& morphisms() const noexcept { return morphisms_; }

  std::size_t identity(std::size_t object) const { return identities_.at(object); }
  bool isIdentity(std::size_t morphism) const;

  /// Morphisms a -> b in insertion order; empty if none.
  const std::vector<std::size_t>& homSet(std::size_t a, std::size_t b) const;
  std::size_t autOrder(std::size_t object) const { return homSet(object, object).size(); }

  /// left o right. Throws ValidationError when the pair is not composable or
  /// the composite was never recorded.
  std::size_t compose(std::size_t left, std::size_t right) const;
  std::optional<std::size_t> tryCompose(std::size_t left, std::size_t right) const;

  /// Checks totality of composition, endpoint consistency, unit laws and
  /// associativity on every composable triple. Returns the first failure.
  std::optional<std::string> validate() const;

 private:
  static std::uint64_t key(std::size_t left, std::size_t right) {
    return (static_cast<std::uint64_t>(left) << 32) | static_cast<std::uint64_t>(right);
  }

  std::vector<CategoryObject> objects_;
  std::vector<CategoryMorphism> morphisms_;
  std::vector<std::size_t> identities_;
  std::vector<bool> isIdentity_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> homs_;
  std::unordered_map<std::uint64_t, std::size_t> composites_;
};

/// Object and morphism assignments of a functor between finite categories.
struct FunctorData {
  std::vector<std::size_t> objectMap;
  std::vector<std::size_t> morphismMap;
};

/// Checks that the data is a functor: endpoints, identities and every
/// composite are preserved. Returns the first violation.
std::optional<std::string> checkFunctor(const FiniteCategory& source, const FiniteCategory& target,
                                        const FunctorData& functor);

/// Checks that the data is an isomorphism of categories (a functor that is
/// bijective on objects and on morphisms).
std::optional<std::string> checkIsomorphism(const FiniteCategory& a, const FiniteCategory& b,
                                            const FunctorData& functor);

inline constexpr std::size_t kMaxIsomorphismObjects = 64;

/// Backtracking search for an isomorphism a -> b. Prefers the identity
/// assignment at every branch, so a category compared with itself yields the
/// identity witness. Throws CapExceeded above kMaxIsomorphismObjects objects.
std::optional<FunctorData> categoryIsomorphic(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace phasediag
