#include "phasediag/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "phasediag/io.hpp"

namespace phasediag::fixtures {

namespace {

RatMatrix intMatrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> out;
    for (long v : row) out.emplace_back(v);
    r.push_back(std::move(out));
  }
  return RatMatrix::fromRows(r);
}

/// Permutation matrix e_i -> e_{p(i)}.
RatMatrix permutationMatrix(const Permutation& p) {
  RatMatrix m(p.degree(), p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) m(p(i), i) = 1;
  return m;
}

RepresentationFixture permutationRep(const std::string& groupName) {
  const auto& g = group(groupName);
  RepresentationFixture rep{groupName + "_permutation", groupName, g.degree, {}};
  for (const auto& c : g.generators) rep.generators.push_back(permutationMatrix(Permutation::fromCycles(g.degree, c)));
  return rep;
}

GComplex squareBoundary() {
  GComplex c;
  c.vertexCount = 4;
  c.simplices = closeUnderFaces({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  return c;
}

std::string slug(std::string s) {
  std::replace(s.begin(), s.end(), ' ', '_');
  return s;
}

}  // namespace

FiniteGroup GroupFixture::build() const {
  std::vector<Permutation> gens;
  for (const auto& c : generators) gens.push_back(Permutation::fromCycles(degree, c));
  return FiniteGroup::closure(degree, std::move(gens));
}

std::vector<GroupFixture> groups() {
  return {
      {"trivial", 1, {}},
      {"C2", 2, {"(0 1)"}},
      {"C4", 4, {"(0 1 2 3)"}},
      {"S3", 3, {"(0 1)", "(0 1 2)"}},
      {"D4", 4, {"(0 1 2 3)", "(1 3)"}},
      {"A4", 4, {"(0 1 2)", "(0 1)(2 3)"}},
      {"S4", 4, {"(0 1)", "(0 1 2 3)"}},
  };
}

const GroupFixture& group(const std::string& name) {
  static const auto all = groups();
  for (const auto& g : all)
    if (g.name == name) return g;
  throw ValidationError("unknown group fixture '" + name + "'");
}

std::vector<ComplexFixture> complexes() {
  std::vector<ComplexFixture> out;
  for (const auto& g : groups()) {
    GComplex point;
    point.vertexCount = 1;
    point.simplices = {{0}};
    point.action.assign(g.generators.size(), {0});
    out.push_back({"point_" + g.name, g.name, point});
  }

  auto reflection = squareBoundary();
  reflection.action = {{0, 3, 2, 1}};
  out.push_back({"square_reflection", "C2", reflection});

  auto halfturn = squareBoundary();
  halfturn.action = {{2, 3, 0, 1}};
  out.push_back({"square_halfturn", "C2", halfturn});

  // D4 as generated by the rotation (0 1 2 3) and the reflection (1 3).
  auto dihedral = squareBoundary();
  dihedral.action = {{1, 2, 3, 0}, {0, 3, 2, 1}};
  out.push_back({"square_dihedral", "D4", dihedral});

  const auto d4 = group("D4").build();
  auto sub = barycentricSubdivision(GSpace::create(d4, dihedral), d4);
  out.push_back({"square_dihedral_subdivided", "D4", sub});

  GComplex triangle;
  triangle.vertexCount = 3;
  triangle.simplices = closeUnderFaces({{0, 1}, {1, 2}, {0, 2}});
  triangle.action = {{1, 0, 2}, {1, 2, 0}};
  out.push_back({"triangle_symmetric", "S3", triangle});

  const auto s3 = group("S3").build();
  out.push_back({"triangle_symmetric_subdivided", "S3", barycentricSubdivision(GSpace::create(s3, triangle), s3)});
  return out;
}

const ComplexFixture& complex(const std::string& name) {
  static const auto all = complexes();
  for (const auto& c : all)
    if (c.name == name) return c;
  throw ValidationError("unknown complex fixture '" + name + "'");
}

std::vector<RepresentationFixture> representations() {
  std::vector<RepresentationFixture> out;
  out.push_back({"C2_sign", "C2", 2, {intMatrix({{1, 0}, {0, -1}})}});
  out.push_back({"S3_standard", "S3", 2, {intMatrix({{-1, 1}, {0, 1}}), intMatrix({{0, -1}, {1, -1}})}});
  out.push_back(permutationRep("S3"));
  out.push_back({"D4_plane", "D4", 2, {intMatrix({{0, -1}, {1, 0}}), intMatrix({{1, 0}, {0, -1}})}});
  out.push_back(permutationRep("C4"));
  out.push_back(permutationRep("A4"));
  out.push_back(permutationRep("S4"));
  return out;
}

StratifiedComplex chainStrata(std::size_t n) {
  if (n == 0) throw ValidationError("chain needs at least one stratum");
  StratifiedComplex s;
  s.vertexCount = n;
  std::vector<Simplex> all;
  // Every nonempty subset of vertices; the stratum of a simplex is its top vertex.
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Simplex simplex;
    for (std::uint32_t v = 0; v < n; ++v)
      if (mask & (std::size_t{1} << v)) simplex.push_back(v);
    all.push_back(simplex);
  }
  s.simplices = canonicalSimplices(all);
  for (const auto& simplex : s.simplices) s.assignment.push_back(simplex.back());
  s.strataCount = n;
  for (std::size_t i = 0; i + 1 < n; ++i) s.relations.emplace_back(i, i + 1);
  return s;
}

std::vector<StrataFixture> strata() {
  std::vector<StrataFixture> out;

  StratifiedComplex segment;
  segment.vertexCount = 3;  // 0 - 1 - 2 with 1 the marked midpoint
  segment.simplices = canonicalSimplices({{0}, {1}, {2}, {0, 1}, {1, 2}});
  segment.strataCount = 2;
  segment.relations = {{0, 1}};
  for (const auto& s : segment.simplices) segment.assignment.push_back(s == Simplex{1} ? 0 : 1);
  segment.codim = std::vector<long>{1, 0};
  out.push_back({"segment_midpoint", segment});

  out.push_back({"chain_5", chainStrata(5)});

  StratifiedComplex square;
  square.vertexCount = 4;
  square.simplices = squareBoundary().simplices;
  square.strataCount = 2;
  square.relations = {{1, 0}};
  for (const auto& s : square.simplices) {
    const bool fixedVertex = s.size() == 1 && (s[0] == 0 || s[0] == 2);
    square.assignment.push_back(fixedVertex ? 1 : 0);
  }
  out.push_back({"square_isotropy", square});
  return out;
}

std::vector<ObservableFixture> observables() {
  std::vector<ObservableFixture> out;
  for (double p : {0.1, 0.3, 0.5, 0.7}) {
    std::ostringstream name;
    name << "bernoulli_" << p;
    out.push_back({name.str(), DiscreteObservable::bernoulli(p)});
  }
  out.push_back({"two_point", DiscreteObservable({{0, 0.5}, {2, 0.5}})});
  return out;
}

std::vector<std::filesystem::path> seed(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  auto put = [&](const std::filesystem::path& rel, const Json& j) {
    const auto path = dir / rel;
    std::filesystem::create_directories(path.parent_path());
    writeFileAtomic(path, j.dump(2) + "\n");
    written.push_back(path);
  };
  for (const auto& g : groups()) put("groups/" + g.name + ".json", Json{{"degree", g.degree}, {"generators", g.generators}});
  for (const auto& c : complexes()) {
    auto j = complexToJson(c.complex);
    j["group"] = c.groupName;
    put("complexes/" + c.name + ".json", j);
  }
  for (const auto& r : representations()) {
    auto j = representationToJson(r.dimension, r.generators);
    j["group"] = r.groupName;
    put("representations/" + r.name + ".json", j);
  }
  for (const auto& s : strata()) put("strata/" + s.name + ".json", stratifiedToJson(s.strata));
  for (const auto& o : observables()) {
    Json outcomes = Json::array();
    for (const auto& out : o.observable.outcomes()) outcomes.push_back({{"value", out.value}, {"probability", out.probability}});
    Json table = Json::array();
    for (const auto& row : rateTable(o.observable, parseGrid("0.1:0.9:0.1"))) {
      table.push_back({{"x", row.x}, {"rate", row.rate}, {"cramer", row.cramer}});
    }
    put("observables/" + slug(o.name) + ".json", Json{{"outcomes", outcomes}, {"profile", table}});
  }
  put("ade_corpus.json", corpusToJson(corpusAdjacency()));
  return written;
}

}  // namespace phasediag::fixtures
