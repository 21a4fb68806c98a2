#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "alphawidth/budgets.hpp"
#include "alphawidth/constructions.hpp"
#include "alphawidth/decomposition.hpp"
#include "alphawidth/graph.hpp"
#include "alphawidth/graph_io.hpp"
#include "alphawidth/modulators.hpp"

namespace alphawidth {

/// Grammar:
///   all:LO-HI                      every isomorphism class on LO..HI vertices
///   random:n=LO-HI,p=P,seed=S,count=C
///   random-bipartite:n=LO-HI,p=P,seed=S,count=C
///   named:FAMILY:LO-HI             FAMILY in P, C, K, E, star, S, nK2, Knn, nKn
///   named:NAME                     any name accepted by named_graph
///   file:PATH[:FORMAT]             FORMAT graph6 (default), dimacs or edges
struct GraphFamilySpec {
  enum class Kind { EnumerateAll, Random, RandomBipartite, Named, File };

  Kind kind = Kind::EnumerateAll;
  int lo = 0;
  int hi = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  int count = 0;
  std::string name;
  std::string path;
  GraphFormat format = GraphFormat::Graph6;

  std::string text() const;
};

GraphFamilySpec parse_family(std::string_view text);

struct FamilyMember {
  Graph graph;
  /// Family name for named families ("star", "nKn", ...), else the kind.
  std::string family;
  /// Index parameter of a named family member, or -1.
  int param = -1;
};

std::vector<FamilyMember> materialize(const GraphFamilySpec& spec);

struct CheckSpec {
  std::string name;
  /// Empty selects the check's default families.
  std::vector<GraphFamilySpec> families;
  std::vector<CostKind> kinds{CostKind::Cardinality, CostKind::Independence};
  /// Empty selects the check's default modulator specs.
  std::vector<ModulatorSpec> modulators;
  std::vector<SubstitutionKind> substitutions{SubstitutionKind::SClaw, SubstitutionKind::P5, SubstitutionKind::Net};
  std::uint64_t seed = 1;
  int jobs = 1;
  /// When positive, replaces the upper end of every all: and indexed named:
  /// family range (so --max-n 4 runs gamma-witness on S_1..S_4).
  int max_n = 0;
  int weight_rounds = 3;
  int relabelings = 5;
  /// Pass iff at least one instance fails.
  bool expect_failure = false;
  Budgets budgets;
};

struct CheckFailure {
  std::string graph6;
  std::string detail;
};

struct CheckReport {
  std::string name;
  long long instances_tested = 0;
  std::vector<CheckFailure> failures;
  double elapsed_ms = 0;
  bool pass = true;
  bool expect_failure = false;
};

void to_json(nlohmann::json& j, const CheckReport& r);

struct InstanceRecord {
  std::string check;
  long long index = 0;
  std::string graph6;
  bool ok = true;
  std::string detail;
};

void to_json(nlohmann::json& j, const InstanceRecord& r);

struct CheckInfo {
  std::string name;
  std::string claim;
  std::vector<std::string> default_families;
  std::vector<std::string> default_modulators;
};

const std::vector<CheckInfo>& registered_checks();
bool is_registered_check(std::string_view name);

/// Per-check default families and modulator specs, overridable by the
/// "checks" object of the config file.
struct CheckDefaults {
  std::map<std::string, std::vector<std::string>> families;
  std::map<std::string, std::vector<std::string>> modulators;
};

struct SuiteConfig {
  Budgets budgets;
  CheckDefaults defaults;
};

/// {"budgets": {...}, "checks": {"name": {"families": [...], "modulators": [...]}}}
SuiteConfig load_suite_config(const std::string& path);

/// Fills empty families/modulators of spec from the config, then the
/// built-in defaults.
CheckSpec with_defaults(CheckSpec spec, const CheckDefaults& defaults = {});

/// Evaluates the named invariant on every member of every family. Instances
/// may run on spec.jobs OpenMP threads; the report and the on_instance calls
/// follow instance order. Throws std::invalid_argument for an unknown check.
CheckReport run_check(const CheckSpec& spec, const std::function<void(const InstanceRecord&)>& on_instance = {});

}  // namespace alphawidth
