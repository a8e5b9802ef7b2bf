#pragma once

// Bundled example inputs: small groups, G-complexes, representations,
// stratified complexes and observables.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "phasediag/gspace.hpp"
#include "phasediag/large_dev.hpp"
#include "phasediag/perm_group.hpp"
#include "phasediag/phase_diagram.hpp"
#include "phasediag/rational.hpp"

namespace phasediag::fixtures {

struct GroupFixture {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;  ///< cycle notation

  FiniteGroup build() const;
};

/// trivial, C2, C4, S3, D4, A4, S4.
std::vector<GroupFixture> groups();
const GroupFixture& group(const std::string& name);

struct ComplexFixture {
  std::string name;
  std::string groupName;
  GComplex complex;
};

/// The point under every group, the square boundary under the reflection
/// through vertices 0 and 2, under the half-turn, under D4 (and its
/// subdivision), and the triangle boundary under S3 (and its subdivision).
std::vector<ComplexFixture> complexes();
const ComplexFixture& complex(const std::string& name);

struct RepresentationFixture {
  std::string name;
  std::string groupName;
  std::size_t dimension = 0;
  std::vector<RatMatrix> generators;
};

std::vector<RepresentationFixture> representations();

struct StrataFixture {
  std::string name;
  StratifiedComplex strata;
};

/// Segment with a marked midpoint, the chain 1 < 2 < ... < n, and the
/// square boundary stratified by isotropy under the reflection.
std::vector<StrataFixture> strata();
StratifiedComplex chainStrata(std::size_t n);

struct ObservableFixture {
  std::string name;
  DiscreteObservable observable;
};

std::vector<ObservableFixture> observables();

/// Writes every fixture as JSON below dir; returns the written paths.
std::vector<std::filesystem::path> seed(const std::filesystem::path& dir);

}  // namespace phasediag::fixtures
