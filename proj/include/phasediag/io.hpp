#pragma once

// JSON input formats, DOT and olog exporters.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "phasediag/finite_category.hpp"
#include "phasediag/gspace.hpp"
#include "phasediag/linear_rep.hpp"
#include "phasediag/perm_group.hpp"
#include "phasediag/phase_diagram.hpp"
#include "phasediag/singularity.hpp"

namespace phasediag {

using Json = nlohmann::json;

// Group file: { "degree": n, "generators": [[images...] | "(0 1)(2 3)", ...] }
FiniteGroup groupFromJson(const Json& j, Diagnostics* diag = nullptr);
Json groupToJson(const FiniteGroup& group);

// Complex file: { "vertices": k, "simplices": [[v,...],...], "action": [[images], ...] }.
// Simplices are closed under faces and every vertex is added as a 0-simplex.
GComplex complexFromJson(const Json& j);
Json complexToJson(const GComplex& complex);

// Stratified complex: complex fields plus "strata", "poset": [[i,j],...],
// "assignment": [stratum per listed simplex] and an optional "codim".
// Simplices are taken as listed (no face closure).
StratifiedComplex stratifiedFromJson(const Json& j);
Json stratifiedToJson(const StratifiedComplex& strata);

// Representation file: { "dim": d, "generators": [[["p/q", ...], ...], ...] }
std::vector<RatMatrix> representationFromJson(const Json& j, std::size_t& dimension);
Json representationToJson(std::size_t dimension, const std::vector<RatMatrix>& generators);

Json quiverToJson(const FiniteGroup& group, const SubgroupLattice& lattice, const QuiverOutput& quiver);

Json corpusToJson(const AdjacencyCorpus& corpus);
AdjacencyCorpus corpusFromJson(const Json& j);

/// DOT digraph named phi0. One node per object labelled
/// "(<subgroup label>, <component>) |Aut|=k", one edge per arrow between
/// distinct objects. Nodes sorted by (class index, component index), edges by
/// (source, target, label); identical inputs give byte-identical output.
std::string exportDot(const FiniteCategory& category);

/// Olog schema: objects (with their identity arrow id and |Aut|), the
/// non-identity arrows, and one composition fact per composable pair of
/// non-identity arrows. Object ids are "o<k>", arrow ids "a<m>" with m the
/// morphism index.
Json exportOlog(const FiniteCategory& category);

/// Rebuilds a category from an olog export. Throws ValidationError naming
/// the offending ids on dangling endpoints, inconsistent composition facts
/// or a failed category-law check.
FiniteCategory importOlog(const Json& j);

Json readJsonFile(const std::filesystem::path& path);
/// Writes to a temporary sibling file and renames it into place.
void writeFileAtomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace phasediag
