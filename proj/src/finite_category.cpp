#include "phasediag/finite_category.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "phasediag/error.hpp"

namespace phasediag {

std::size_t FiniteCategory::addObject(CategoryObject object) {
  const std::size_t id = objects_.size();
  objects_.push_back(std::move(object));
  const std::size_t idMorphism = morphisms_.size();
  morphisms_.push_back({id, id, "id"});
  isIdentity_.push_back(true);
  identities_.push_back(idMorphism);
  homs_[{id, id}].push_back(idMorphism);
  return id;
}

std::size_t FiniteCategory::addMorphism(std::size_t source, std::size_t target, std::string label) {
  if (source >= objects_.size() || target >= objects_.size()) {
    throw ValidationError("morphism endpoint out of range");
  }
  const std::size_t id = morphisms_.size();
  morphisms_.push_back({source, target, std::move(label)});
  isIdentity_.push_back(false);
  homs_[{source, target}].push_back(id);
  return id;
}

void FiniteCategory::setComposite(std::size_t left, std::size_t right, std::size_t result) {
  if (left >= morphisms_.size() || right >= morphisms_.size() || result >= morphisms_.size()) {
    throw ValidationError("composite refers to an unknown morphism");
  }
  if (morphisms_[right].target != morphisms_[left].source) {
    throw ValidationError("morphisms " + std::to_string(left) + " and " + std::to_string(right) +
                          " are not composable");
  }
  if (morphisms_[result].source != morphisms_[right].source || morphisms_[result].target != morphisms_[left].target) {
    throw ValidationError("composite " + std::to_string(result) + " has the wrong endpoints");
  }
  if (isIdentity_[left] || isIdentity_[right]) {
    const std::size_t expected = isIdentity_[left] ? right : left;
    if (result != expected) throw ValidationError("composite with an identity must be the other factor");
    return;
  }
  composites_[key(left, right)] = result;
}

bool FiniteCategory::isIdentity(std::size_t morphism) const { return isIdentity_.at(morphism); }

const std::vector<std::size_t>& FiniteCategory::homSet(std::size_t a, std::size_t b) const {
  static const std::vector<std::size_t> empty;
  auto it = homs_.find({a, b});
  return it == homs_.end() ? empty : it->second;
}

std::optional<std::size_t> FiniteCategory::tryCompose(std::size_t left, std::size_t right) const {
  if (left >= morphisms_.size() || right >= morphisms_.size()) return std::nullopt;
  if (morphisms_[right].target != morphisms_[left].source) return std::nullopt;
  if (isIdentity_[left]) return right;
  if (isIdentity_[right]) return left;
  auto it = composites_.find(key(left, right));
  if (it == composites_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteCategory::compose(std::size_t left, std::size_t right) const {
  if (auto r = tryCompose(left, right)) return *r;
  throw ValidationError("no composite recorded for " + std::to_string(left) + " o " + std::to_string(right));
}

std::optional<std::string> FiniteCategory::validate() const {
  std::vector<std::vector<std::size_t>> outgoing(objects_.size());
  for (std::size_t m = 0; m < morphisms_.size(); ++m) outgoing[morphisms_[m].source].push_back(m);

  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    for (auto g : outgoing[morphisms_[f].target]) {
      auto gf = tryCompose(g, f);
      if (!gf) return "missing composite " + std::to_string(g) + " o " + std::to_string(f);
      if (morphisms_[*gf].source != morphisms_[f].source || morphisms_[*gf].target != morphisms_[g].target) {
        return "composite " + std::to_string(g) + " o " + std::to_string(f) + " has wrong endpoints";
      }
    }
  }
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    for (auto g : outgoing[morphisms_[f].target]) {
      const std::size_t gf = *tryCompose(g, f);
      for (auto h : outgoing[morphisms_[g].target]) {
        const std::size_t hg = *tryCompose(h, g);
        if (*tryCompose(h, gf) != *tryCompose(hg, f)) {
          return "associativity fails on (" + std::to_string(h) + ", " + std::to_string(g) + ", " +
                 std::to_string(f) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> checkFunctor(const FiniteCategory& source, const FiniteCategory& target,
                                        const FunctorData& functor) {
  if (functor.objectMap.size() != source.objectCount() || functor.morphismMap.size() != source.morphismCount()) {
    return std::string("functor data has the wrong size");
  }
  for (auto o : functor.objectMap)
    if (o >= target.objectCount()) return std::string("object image out of range");
  for (auto m : functor.morphismMap)
    if (m >= target.morphismCount()) return std::string("morphism image out of range");

  for (std::size_t m = 0; m < source.morphismCount(); ++m) {
    const auto& src = source.morphism(m);
    const auto& img = target.morphism(functor.morphismMap[m]);
    if (img.source != functor.objectMap[src.source] || img.target != functor.objectMap[src.target]) {
      return "morphism " + std::to_string(m) + " is not sent between the images of its endpoints";
    }
  }
  for (std::size_t o = 0; o < source.objectCount(); ++o) {
    if (functor.morphismMap[source.identity(o)] != target.identity(functor.objectMap[o])) {
      return "identity of object " + std::to_string(o) + " is not preserved";
    }
  }
  std::vector<std::vector<std::size_t>> outgoing(source.objectCount());
  for (std::size_t m = 0; m < source.morphismCount(); ++m) outgoing[source.morphism(m).source].push_back(m);
  for (std::size_t f = 0; f < source.morphismCount(); ++f) {
    for (auto g : outgoing[source.morphism(f).target]) {
      const auto lhs = functor.morphismMap[source.compose(g, f)];
      const auto rhs = target.tryCompose(functor.morphismMap[g], functor.morphismMap[f]);
      if (!rhs || lhs != *rhs) {
        return "composite " + std::to_string(g) + " o " + std::to_string(f) + " is not preserved";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> checkIsomorphism(const FiniteCategory& a, const FiniteCategory& b,
                                            const FunctorData& functor) {
  if (a.objectCount() != b.objectCount() || a.morphismCount() != b.morphismCount()) {
    return std::string("categories have different sizes");
  }
  if (auto err = checkFunctor(a, b, functor)) return err;
  std::vector<bool> hitObj(b.objectCount(), false), hitMor(b.morphismCount(), false);
  for (auto o : functor.objectMap) {
    if (hitObj[o]) return std::string("object map is not injective");
    hitObj[o] = true;
  }
  for (auto m : functor.morphismMap) {
    if (hitMor[m]) return std::string("morphism map is not injective");
    hitMor[m] = true;
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteCategory& a, const FiniteCategory& b) : a_(a), b_(b) {}

  std::optional<FunctorData> run() {
    if (a_.objectCount() != b_.objectCount() || a_.morphismCount() != b_.morphismCount()) return std::nullopt;
    objMap_.assign(a_.objectCount(), kUnset);
    objUsed_.assign(b_.objectCount(), false);
    if (!assignObjects(0)) return std::nullopt;
    return result_;
  }

 private:
  struct MorphismState {
    std::vector<std::size_t> forward;
    std::vector<std::size_t> backward;
    std::vector<std::size_t> assigned;
  };

  bool compatible(std::size_t x, std::size_t y) const {
    if (a_.homSet(x, x).size() != b_.homSet(y, y).size()) return false;
    for (std::size_t k = 0; k < x; ++k) {
      const auto yk = objMap_[k];
      if (a_.homSet(x, k).size() != b_.homSet(y, yk).size()) return false;
      if (a_.homSet(k, x).size() != b_.homSet(yk, y).size()) return false;
    }
    return true;
  }

  bool assignObjects(std::size_t x) {
    if (x == a_.objectCount()) return assignAllMorphisms();
    std::vector<std::size_t> order;
    if (x < b_.objectCount()) order.push_back(x);
    for (std::size_t y = 0; y < b_.objectCount(); ++y)
      if (y != x) order.push_back(y);
    for (auto y : order) {
      if (objUsed_[y] || !compatible(x, y)) continue;
      objMap_[x] = y;
      objUsed_[y] = true;
      if (assignObjects(x + 1)) return true;
      objUsed_[y] = false;
      objMap_[x] = kUnset;
    }
    return false;
  }

  bool assign(MorphismState& s, std::size_t m, std::size_t image) const {
    std::deque<std::pair<std::size_t, std::size_t>> pending{{m, image}};
    while (!pending.empty()) {
      auto [f, fImg] = pending.front();
      pending.pop_front();
      if (s.forward[f] != kUnset) {
        if (s.forward[f] != fImg) return false;
        continue;
      }
      if (s.backward[fImg] != kUnset) return false;
      const auto& src = a_.morphism(f);
      const auto& dst = b_.morphism(fImg);
      if (dst.source != objMap_[src.source] || dst.target != objMap_[src.target]) return false;
      s.forward[f] = fImg;
      s.backward[fImg] = f;
      s.assigned.push_back(f);
      for (std::size_t i = 0; i + 1 < s.assigned.size(); ++i) {
        const auto k = s.assigned[i];
        if (auto fk = a_.tryCompose(f, k)) pending.emplace_back(*fk, b_.compose(fImg, s.forward[k]));
        if (auto kf = a_.tryCompose(k, f)) pending.emplace_back(*kf, b_.compose(s.forward[k], fImg));
      }
    }
    return true;
  }

  bool assignAllMorphisms() {
    MorphismState s;
    s.forward.assign(a_.morphismCount(), kUnset);
    s.backward.assign(b_.morphismCount(), kUnset);
    for (std::size_t x = 0; x < a_.objectCount(); ++x) {
      if (!assign(s, a_.identity(x), b_.identity(objMap_[x]))) return false;
    }
    return solve(s);
  }

  bool solve(const MorphismState& s) {
    std::size_t next = kUnset;
    for (std::size_t m = 0; m < a_.morphismCount(); ++m) {
      if (s.forward[m] == kUnset) {
        next = m;
        break;
      }
    }
    if (next == kUnset) {
      FunctorData f{objMap_, s.forward};
      if (checkIsomorphism(a_, b_, f)) return false;
      result_ = std::move(f);
      return true;
    }
    const auto& m = a_.morphism(next);
    const auto& candidates = b_.homSet(objMap_[m.source], objMap_[m.target]);
    std::vector<std::size_t> order;
    if (std::find(candidates.begin(), candidates.end(), next) != candidates.end()) order.push_back(next);
    for (auto c : candidates)
      if (c != next) order.push_back(c);
    for (auto c : order) {
      if (s.backward[c] != kUnset) continue;
      MorphismState trial = s;
      if (assign(trial, next, c) && solve(trial)) return true;
    }
    return false;
  }

  const FiniteCategory& a_;
  const FiniteCategory& b_;
  std::vector<std::size_t> objMap_;
  std::vector<bool> objUsed_;
  FunctorData result_;
};

}  // namespace

std::optional<FunctorData> categoryIsomorphic(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.objectCount() > kMaxIsomorphismObjects || b.objectCount() > kMaxIsomorphismObjects) {
    throw CapExceeded("isomorphism search is limited to " + std::to_string(kMaxIsomorphismObjects) + " objects");
  }
  return IsomorphismSearch(a, b).run();
}

}  // namespace phasediag
