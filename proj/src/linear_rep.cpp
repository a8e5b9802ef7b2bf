#include "phasediag/linear_rep.hpp"

#include <numeric>
#include <optional>

namespace phasediag {

namespace {

long moebius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

long totient(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Sum of the k-th powers of the primitive d-th roots of unity.
long ramanujanSum(long d, long k) {
  const long q = d / std::gcd(d, k);
  return moebius(q) * (totient(d) / totient(q));
}

std::size_t elementOrder(const FiniteGroup& group, std::size_t g) {
  std::size_t order = 1;
  for (std::size_t x = g; x != FiniteGroup::identityIndex(); x = group.multiply(g, x)) ++order;
  return order;
}

}  // namespace

LinearAction LinearAction::create(const FiniteGroup& group, std::size_t dimension, std::vector<RatMatrix> generators) {
  if (generators.size() != group.generators().size()) {
    throw ValidationError("representation lists " + std::to_string(generators.size()) + " generator matrices, group has " +
                          std::to_string(group.generators().size()));
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows() != dimension || generators[i].cols() != dimension) {
      throw ValidationError("generator matrix " + std::to_string(i) + " is not " + std::to_string(dimension) + "x" +
                            std::to_string(dimension));
    }
    if (rank(generators[i]) != dimension) {
      throw ValidationError("generator matrix " + std::to_string(i) + " is not invertible");
    }
  }
  LinearAction action;
  action.dimension_ = dimension;
  const auto gens = group.generatorIndices();
  std::vector<std::optional<RatMatrix>> rho(group.order());
  rho[FiniteGroup::identityIndex()] = RatMatrix::identity(dimension);
  std::vector<std::size_t> queue{FiniteGroup::identityIndex()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto g = queue[k];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto sg = group.multiply(gens[i], g);
      RatMatrix m = generators[i] * *rho[g];
      if (!rho[sg]) {
        rho[sg] = std::move(m);
        queue.push_back(sg);
      } else if (!(*rho[sg] == m)) {
        throw ValidationError("generator matrices do not satisfy the group relations (generator " +
                              std::to_string(i) + ")");
      }
    }
  }
  action.generators_ = std::move(generators);
  for (auto& m : rho) action.elementMatrices_.push_back(std::move(*m));
  return action;
}

RatMatrix averagingProjector(const LinearAction& action, const Subgroup& h) {
  RatMatrix sum(action.dimension(), action.dimension());
  for (auto g : h.members) sum = sum + action.matrix(g);
  return sum.scaled(ratio(1, static_cast<long>(h.order())));
}

std::vector<RatVector> fixSubspace(const LinearAction& action, const Subgroup& h) {
  return columnSpaceBasis(averagingProjector(action, h));
}

RatMatrix restrictToSubspace(const RatMatrix& m, const std::vector<RatVector>& basis) {
  std::vector<std::size_t> pivots;
  for (const auto& b : basis) {
    std::size_t p = 0;
    while (p < b.size() && b[p] == 0) ++p;
    if (p == b.size()) throw ValidationError("zero vector in subspace basis");
    pivots.push_back(p);
  }
  RatMatrix out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const RatVector image = m.apply(basis[j]);
    RatVector rebuilt(image.size(), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      out(i, j) = image[pivots[i]];
      for (std::size_t c = 0; c < image.size(); ++c) rebuilt[c] += out(i, j) * basis[i][c];
    }
    if (rebuilt != image) throw ValidationError("subspace is not invariant under the matrix");
  }
  return out;
}

RelativeNormal relativeNormal(const FiniteGroup& group, const LinearAction& action, const Subgroup& h0,
                              const Subgroup& h1, std::size_t witness) {
  for (auto h : h0.members) {
    if (!h1.contains(group.conjugate(witness, h))) {
      throw ValidationError("witness " + group.element(witness).toCycles() + " does not conjugate H0 into H1");
    }
  }
  RelativeNormal out;
  out.overgroup = conjugateSubgroup(group, h1, group.inverse(witness));
  const RatMatrix q = averagingProjector(action, h0) - averagingProjector(action, out.overgroup);
  out.basis = columnSpaceBasis(q);

  // Generators of N_K(H0), chosen greedily in element order.
  Subgroup reached = generatedSubgroup(group, {});
  for (auto n : out.overgroup.members) {
    if (reached.contains(n) || conjugateSubgroup(group, h0, n) != h0) continue;
    out.actingGenerators.push_back(n);
    reached = generatedSubgroup(group, out.actingGenerators);
  }
  for (auto n : out.actingGenerators) out.restrictedAction.push_back(restrictToSubspace(action.matrix(n), out.basis));
  return out;
}

std::vector<IsotypicComponent> isotypicDecomposition(const FiniteGroup& group, const LinearAction& action,
                                                     const Subgroup& h) {
  std::vector<IsotypicComponent> out;
  const std::size_t d = action.dimension();
  std::optional<std::size_t> generator;
  for (auto g : h.members) {
    if (elementOrder(group, g) == h.order()) {
      generator = g;
      break;
    }
  }
  if (!generator) {
    const RatMatrix p = averagingProjector(action, h);
    IsotypicComponent trivial{"trivial", columnSpaceBasis(p)};
    IsotypicComponent rest{"nontrivial", columnSpaceBasis(RatMatrix::identity(d) - p)};
    if (!trivial.basis.empty()) out.push_back(std::move(trivial));
    if (!rest.basis.empty()) out.push_back(std::move(rest));
    return out;
  }
  const long n = static_cast<long>(h.order());
  std::vector<RatMatrix> powers{RatMatrix::identity(d)};
  for (long k = 1; k < n; ++k) powers.push_back(action.matrix(*generator) * powers.back());
  for (long div = 1; div <= n; ++div) {
    if (n % div != 0) continue;
    RatMatrix e(d, d);
    for (long k = 0; k < n; ++k) e = e + powers[static_cast<std::size_t>(k)].scaled(ratio(ramanujanSum(div, k), 1));
    e = e.scaled(ratio(1, n));
    IsotypicComponent c{div == 1 ? "trivial" : "order " + std::to_string(div), columnSpaceBasis(e)};
    if (!c.basis.empty()) out.push_back(std::move(c));
  }
  return out;
}

QuiverOutput degeneracyQuiver(const FiniteGroup& group, const SubgroupLattice& lattice, const LinearAction& action) {
  QuiverOutput out;
  const std::size_t n = lattice.classes.size();
  for (const auto& cls : lattice.classes) {
    QuiverNode node;
    node.subgroupClass = cls.classIndex;
    node.fixBasis = fixSubspace(action, cls.representative);
    node.fixDimension = node.fixBasis.size();
    node.isotypic = isotypicDecomposition(group, action, cls.representative);
    out.nodes.push_back(std::move(node));
  }
  std::vector<std::vector<std::optional<std::size_t>>> witness(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto t = transporter(group, lattice.classes[a].representative, lattice.classes[b].representative);
      if (!t.empty()) witness[a][b] = t.front();
    }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!witness[a][b]) continue;
      bool covering = true;
      for (std::size_t c = 0; c < n && covering; ++c) covering = !(witness[a][c] && witness[c][b]);
      if (!covering) continue;
      QuiverArrow arrow;
      arrow.sourceClass = a;
      arrow.targetClass = b;
      arrow.witness = *witness[a][b];
      arrow.normal = relativeNormal(group, action, lattice.classes[a].representative,
                                    lattice.classes[b].representative, arrow.witness);
      out.arrows.push_back(std::move(arrow));
    }
  }
  return out;
}

}  // namespace phasediag
