#include "phasediag/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace phasediag {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    throw ValidationError("field '" + what + "' has the wrong type");
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string objectId(std::size_t i) { return "o" + std::to_string(i); }
std::string arrowId(std::size_t i) { return "a" + std::to_string(i); }

}  // namespace

FiniteGroup groupFromJson(const Json& j, Diagnostics* diag) {
  const auto degree = as<std::size_t>(require(j, "degree"), "degree");
  const auto& gens = require(j, "generators");
  if (!gens.is_array()) throw ValidationError("field 'generators' must be an array");
  std::vector<Permutation> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      if (gens[i].is_string()) {
        generators.push_back(Permutation::fromCycles(degree, gens[i].get<std::string>()));
      } else {
        auto images = as<std::vector<std::uint32_t>>(gens[i], "generators");
        if (images.size() != degree) {
          throw ValidationError("has " + std::to_string(images.size()) + " images, expected " + std::to_string(degree));
        }
        generators.emplace_back(std::move(images));
      }
    } catch (const ValidationError& e) {
      throw ValidationError("generator " + std::to_string(i) + ": " + e.what());
    }
  }
  return FiniteGroup::closure(degree, std::move(generators), diag);
}

Json groupToJson(const FiniteGroup& group) {
  Json gens = Json::array();
  for (const auto& g : group.generators()) gens.push_back(g.images());
  return Json{{"degree", group.degree()}, {"generators", gens}};
}

GComplex complexFromJson(const Json& j) {
  GComplex c;
  c.vertexCount = as<std::size_t>(require(j, "vertices"), "vertices");
  auto simplices = as<std::vector<Simplex>>(j.value("simplices", Json::array()), "simplices");
  for (std::uint32_t v = 0; v < c.vertexCount; ++v) simplices.push_back({v});
  for (const auto& s : simplices) {
    for (auto v : s)
      if (v >= c.vertexCount) throw ValidationError("simplex vertex " + std::to_string(v) + " is out of range");
  }
  c.simplices = closeUnderFaces(simplices);
  c.action = as<std::vector<std::vector<std::uint32_t>>>(j.value("action", Json::array()), "action");
  return c;
}

Json complexToJson(const GComplex& complex) {
  return Json{{"vertices", complex.vertexCount}, {"simplices", complex.simplices}, {"action", complex.action}};
}

StratifiedComplex stratifiedFromJson(const Json& j) {
  StratifiedComplex s;
  s.vertexCount = as<std::size_t>(require(j, "vertices"), "vertices");
  s.simplices = as<std::vector<Simplex>>(require(j, "simplices"), "simplices");
  s.assignment = as<std::vector<std::size_t>>(require(j, "assignment"), "assignment");
  if (j.contains("strata")) {
    s.strataCount = as<std::size_t>(j.at("strata"), "strata");
  } else {
    for (auto a : s.assignment) s.strataCount = std::max(s.strataCount, a + 1);
  }
  for (const auto& rel : j.value("poset", Json::array())) {
    const auto pair = as<std::vector<std::size_t>>(rel, "poset");
    if (pair.size() != 2) throw ValidationError("poset relations must be pairs [i, j]");
    s.relations.emplace_back(pair[0], pair[1]);
  }
  if (j.contains("codim") && !j.at("codim").is_null()) s.codim = as<std::vector<long>>(j.at("codim"), "codim");
  return s;
}

Json stratifiedToJson(const StratifiedComplex& strata) {
  Json poset = Json::array();
  for (auto [i, k] : strata.relations) poset.push_back({i, k});
  Json j{{"vertices", strata.vertexCount},
         {"simplices", strata.simplices},
         {"strata", strata.strataCount},
         {"poset", poset},
         {"assignment", strata.assignment}};
  if (strata.codim) j["codim"] = *strata.codim;
  return j;
}

std::vector<RatMatrix> representationFromJson(const Json& j, std::size_t& dimension) {
  dimension = as<std::size_t>(require(j, "dim"), "dim");
  std::vector<RatMatrix> out;
  const auto& gens = require(j, "generators");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& rows = gens[g];
    if (!rows.is_array() || rows.size() != dimension) {
      throw ValidationError("generator matrix " + std::to_string(g) + " must have " + std::to_string(dimension) + " rows");
    }
    RatMatrix m(dimension, dimension);
    for (std::size_t r = 0; r < dimension; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dimension) {
        throw ValidationError("generator matrix " + std::to_string(g) + " row " + std::to_string(r) +
                              " has the wrong length");
      }
      for (std::size_t c = 0; c < dimension; ++c) {
        const auto& entry = rows[r][c];
        m(r, c) = entry.is_string() ? parseRational(entry.get<std::string>())
                                    : parseRational(std::to_string(as<long>(entry, "generators")));
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

Json representationToJson(std::size_t dimension, const std::vector<RatMatrix>& generators) {
  Json gens = Json::array();
  for (const auto& m : generators) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toString(m(r, c)));
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  return Json{{"dim", dimension}, {"generators", gens}};
}

namespace {

Json vectorsToJson(const std::vector<RatVector>& vectors) {
  Json out = Json::array();
  for (const auto& v : vectors) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(toString(x));
    out.push_back(row);
  }
  return out;
}

Json matrixToJson(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toString(m(r, c)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

Json quiverToJson(const FiniteGroup& group, const SubgroupLattice& lattice, const QuiverOutput& quiver) {
  Json nodes = Json::array();
  for (const auto& node : quiver.nodes) {
    Json isotypic = Json::array();
    for (const auto& c : node.isotypic) {
      isotypic.push_back({{"character", c.character}, {"dimension", c.basis.size()}, {"basis", vectorsToJson(c.basis)}});
    }
    nodes.push_back({{"class", node.subgroupClass},
                     {"label", classLabel(lattice.classes[node.subgroupClass])},
                     {"order", lattice.classes[node.subgroupClass].representative.order()},
                     {"fixDimension", node.fixDimension},
                     {"fixBasis", vectorsToJson(node.fixBasis)},
                     {"isotypic", isotypic}});
  }
  Json arrows = Json::array();
  for (const auto& a : quiver.arrows) {
    Json acting = Json::array();
    for (std::size_t i = 0; i < a.normal.actingGenerators.size(); ++i) {
      acting.push_back({{"element", group.element(a.normal.actingGenerators[i]).toCycles()},
                        {"matrix", matrixToJson(a.normal.restrictedAction[i])}});
    }
    arrows.push_back({{"source", a.sourceClass},
                      {"target", a.targetClass},
                      {"witness", group.element(a.witness).toCycles()},
                      {"normalDimension", a.normal.dimension()},
                      {"normalBasis", vectorsToJson(a.normal.basis)},
                      {"action", acting}});
  }
  return Json{{"nodes", nodes}, {"arrows", arrows}};
}

Json corpusToJson(const AdjacencyCorpus& corpus) {
  Json entries = Json::array();
  for (const auto& e : corpus.entries) {
    Json weights = Json::array();
    for (const auto& w : e.weights) weights.push_back(toString(w));
    entries.push_back(
        {{"name", e.name}, {"normalForm", e.normalForm}, {"weights", weights}, {"mu", e.mu}, {"codim", e.codim}});
  }
  Json arrows = Json::array();
  for (const auto& [from, to] : corpus.arrows) arrows.push_back({{"from", from}, {"to", to}});
  return Json{{"entries", entries}, {"arrows", arrows}};
}

AdjacencyCorpus corpusFromJson(const Json& j) {
  AdjacencyCorpus corpus;
  for (const auto& e : require(j, "entries")) {
    CorpusEntry entry;
    entry.name = as<std::string>(require(e, "name"), "name");
    entry.normalForm = as<std::string>(require(e, "normalForm"), "normalForm");
    for (const auto& w : require(e, "weights")) entry.weights.push_back(parseRational(as<std::string>(w, "weights")));
    entry.mu = as<long>(require(e, "mu"), "mu");
    entry.codim = as<long>(require(e, "codim"), "codim");
    corpus.entries.push_back(std::move(entry));
  }
  for (const auto& a : require(j, "arrows")) {
    corpus.arrows.emplace_back(as<std::string>(require(a, "from"), "from"), as<std::string>(require(a, "to"), "to"));
  }
  return corpus;
}

std::string exportDot(const FiniteCategory& category) {
  if (category.objectCount() == 0) return "digraph phi0 { }\n";
  std::vector<std::size_t> nodes(category.objectCount());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = i;
  auto sortKey = [&](std::size_t i) {
    const auto& o = category.object(i);
    return std::make_tuple(o.classIndex.value_or(i), o.componentId.value_or(0), i);
  };
  std::sort(nodes.begin(), nodes.end(), [&](std::size_t a, std::size_t b) { return sortKey(a) < sortKey(b); });

  std::ostringstream out;
  out << "digraph phi0 {\n";
  for (auto i : nodes) {
    out << "  n" << i << " [label=" << quoted(category.object(i).label + " |Aut|=" + std::to_string(category.autOrder(i)))
        << "];\n";
  }
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> edges;
  for (const auto& m : category.morphisms()) {
    if (m.source != m.target) edges.emplace_back(m.source, m.target, m.label);
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [s, t, label] : edges) out << "  n" << s << " -> n" << t << " [label=" << quoted(label) << "];\n";
  out << "}\n";
  return out.str();
}

Json exportOlog(const FiniteCategory& category) {
  Json objects = Json::array();
  for (std::size_t i = 0; i < category.objectCount(); ++i) {
    const auto& o = category.object(i);
    Json obj{{"id", objectId(i)},
             {"label", o.label},
             {"identity", arrowId(category.identity(i))},
             {"autOrder", category.autOrder(i)}};
    if (o.classIndex) obj["subgroupClass"] = *o.classIndex;
    if (o.componentId) obj["componentId"] = *o.componentId;
    objects.push_back(std::move(obj));
  }
  Json arrows = Json::array();
  std::vector<std::vector<std::size_t>> outgoing(category.objectCount());
  for (std::size_t m = 0; m < category.morphismCount(); ++m) {
    if (category.isIdentity(m)) continue;
    const auto& mor = category.morphism(m);
    arrows.push_back({{"id", arrowId(m)}, {"src", objectId(mor.source)}, {"dst", objectId(mor.target)}, {"label", mor.label}});
    outgoing[mor.source].push_back(m);
  }
  Json compositions = Json::array();
  for (std::size_t f = 0; f < category.morphismCount(); ++f) {
    if (category.isIdentity(f)) continue;
    for (auto g : outgoing[category.morphism(f).target]) {
      compositions.push_back({{"left", arrowId(g)}, {"right", arrowId(f)}, {"result", arrowId(category.compose(g, f))}});
    }
  }
  return Json{{"objects", objects}, {"arrows", arrows}, {"compositions", compositions}};
}

FiniteCategory importOlog(const Json& j) {
  FiniteCategory cat;
  std::map<std::string, std::size_t> objectIndex, arrowIndex;
  for (const auto& o : require(j, "objects")) {
    const auto id = as<std::string>(require(o, "id"), "id");
    CategoryObject obj{as<std::string>(o.value("label", Json(id)), "label"), std::nullopt, std::nullopt};
    if (o.contains("subgroupClass")) obj.classIndex = as<std::size_t>(o.at("subgroupClass"), "subgroupClass");
    if (o.contains("componentId")) obj.componentId = as<std::size_t>(o.at("componentId"), "componentId");
    const auto index = cat.addObject(std::move(obj));
    if (!objectIndex.emplace(id, index).second) throw ValidationError("duplicate object id '" + id + "'");
    const auto identity = as<std::string>(o.value("identity", Json("id:" + id)), "identity");
    if (!arrowIndex.emplace(identity, cat.identity(index)).second) {
      throw ValidationError("duplicate arrow id '" + identity + "'");
    }
  }
  for (const auto& a : require(j, "arrows")) {
    const auto id = as<std::string>(require(a, "id"), "id");
    const auto src = as<std::string>(require(a, "src"), "src");
    const auto dst = as<std::string>(require(a, "dst"), "dst");
    if (!objectIndex.count(src)) throw ValidationError("arrow '" + id + "' has missing source object '" + src + "'");
    if (!objectIndex.count(dst)) throw ValidationError("arrow '" + id + "' has missing target object '" + dst + "'");
    const auto index = cat.addMorphism(objectIndex.at(src), objectIndex.at(dst), as<std::string>(a.value("label", Json("")), "label"));
    if (!arrowIndex.emplace(id, index).second) throw ValidationError("duplicate arrow id '" + id + "'");
  }
  for (const auto& c : require(j, "compositions")) {
    const auto left = as<std::string>(require(c, "left"), "left");
    const auto right = as<std::string>(require(c, "right"), "right");
    const auto result = as<std::string>(require(c, "result"), "result");
    for (const auto* id : {&left, &right, &result}) {
      if (!arrowIndex.count(*id)) throw ValidationError("composition refers to unknown arrow '" + *id + "'");
    }
    try {
      cat.setComposite(arrowIndex.at(left), arrowIndex.at(right), arrowIndex.at(result));
    } catch (const ValidationError& e) {
      throw ValidationError("inconsistent composition " + left + " o " + right + " = " + result + ": " + e.what());
    }
  }
  if (auto err = cat.validate()) throw ValidationError("imported olog is not a category: " + *err);
  return cat;
}

Json readJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void writeFileAtomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + tmp.string());
    out << contents;
    if (!out) throw ValidationError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace phasediag
