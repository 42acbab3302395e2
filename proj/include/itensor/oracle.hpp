#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itensor/interval.hpp"
#include "itensor/verdict.hpp"

namespace itensor {

// Vertex oracles.
//
// Each B condition is affine in every entry of the box, so its worst case
// sits at a vertex. For double B, gamma^+ is a max of entries, which makes
// every row condition convex per coordinate, and the pairwise products split
// over the disjoint entry blocks of two rows with nonnegative factors. So
// checking every vertex decides the whole box in both cases.

enum class OracleClass { B, DoubleB };

struct OracleOptions {
  std::uint64_t budget = kDefaultVertexBudget;
  Tolerance tolerance{};
  /// Random interior members also checked by the double-B oracle.
  std::size_t interior_members = 64;
  std::uint64_t member_seed = 0;
  /// Materialise every vertex and run the point classifier on it instead of
  /// the tabulated row statistics. Slow; used to cross-check the fast path.
  bool reference = false;
};

/// Smallest selector (bit p picks upper at flat position p) whose vertex
/// is not in the class, over all 2^(n^m) selectors. Throws BudgetExceeded.
std::optional<std::uint64_t> first_failing_vertex(const IntervalTensor& ai, OracleClass cls,
                                                  const OracleOptions& opt = {});

/// Holds iff every vertex is a B-tensor. A Fails witness is the point
/// classifier's witness on the first failing vertex; the selector is noted.
Verdict oracle_interval_b(const IntervalTensor& ai, const OracleOptions& opt = {});

/// Holds iff every vertex is a double B-tensor, with interior members as a
/// second guard.
Verdict oracle_interval_double_b(const IntervalTensor& ai, const OracleOptions& opt = {});

// Instance generation.

enum class Structure { General, Z, Circulant, Symmetric };
const char* structure_name(Structure s);
/// Throws InputError on an unknown name.
Structure parse_structure(const std::string& name);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct GeneratorSpec {
  int order = 3;
  Index dim = 2;
  Range diag{1.0, 8.0};
  Range offdiag{-2.0, 2.0};
  /// Entry radii are drawn from [0, radius_scale].
  double radius_scale = 0.5;
  Structure structure = Structure::General;
  std::uint64_t seed = 0;

  /// Throws InputError on empty ranges, negative radius_scale, or a Z
  /// request whose off-diagonal range has no nonpositive part.
  void validate() const;
};

/// Deterministic in the spec. Midpoints and radii lie on a 1/8 grid so the
/// classifiers and the oracle compare exactly representable numbers; the
/// symmetric structure averages over index orbits afterwards.
IntervalTensor random_interval_tensor(const GeneratorSpec& spec);

/// Entrywise uniform in [lower, upper]; deterministic in the seed.
Tensor random_member(const IntervalTensor& ai, std::uint64_t seed);

/// Puts `row` exactly on the boundary of the pairwise B form: the lower
/// diagonal is set so that lower_d - upper_p equals the excess sum at the
/// tightest tail p (upper diagonal raised if needed). nullopt when that
/// would need a lower diagonal below the upper entry at p.
std::optional<IntervalTensor> manufacture_boundary(const IntervalTensor& ai, Index row);

/// Makes the dominance hypothesis hold: in each row one off-diagonal tail,
/// drawn from the seed, gets its lower bound lifted to the largest other
/// off-diagonal upper bound.
IntervalTensor impose_dominance(const IntervalTensor& ai, std::uint64_t seed);

/// Stable per-index seed derivation used by the suites.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Cross-validation suites.

struct SuiteConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 7;
  int order = 3;
  Index dim = 2;
  Structure structure = Structure::General;
  /// Every third trial gets a manufactured boundary row.
  bool manufacture_boundary = true;
  std::size_t members = 64;
  std::uint64_t vertex_budget = kDefaultVertexBudget;
};

struct PropertyTally {
  std::size_t applicable = 0;
  std::size_t agreements = 0;
};

struct Counterexample {
  std::string property;
  std::size_t trial = 0;
  IntervalTensor instance;
  /// (label, value) pairs of the disagreeing results.
  std::vector<std::pair<std::string, std::string>> verdicts;
};

/// Non-asserting counts around the double B / B relationship.
struct DirectionProbe {
  std::size_t interval_b = 0;
  std::size_t interval_double_b = 0;
  std::size_t double_b_not_b = 0;
  std::size_t b_not_double_b = 0;
  std::size_t manufactured = 0;
  std::size_t manufactured_double_b_not_b = 0;
  /// Critical-row cases with more than one failing row.
  std::size_t dichotomy_anomalies = 0;
  /// First trial showing double B without B, if any.
  std::optional<std::size_t> first_double_b_not_b;

  /// "double B => B" is refuted once any instance is double B but not B.
  bool double_b_implies_b_refuted() const { return double_b_not_b > 0; }
  bool b_implies_double_b_refuted() const { return b_not_double_b > 0; }
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::size_t trials = 0;
  std::map<std::string, PropertyTally> properties;
  std::vector<Counterexample> counterexamples;
  DirectionProbe probe;

  std::size_t total_counterexamples() const { return counterexamples.size(); }
};

/// Runs every applicable property on `config.trials` generated instances.
/// The report is identical for identical configs regardless of threading.
SuiteReport equivalence_suite(const SuiteConfig& config);

/// Dominance agreement on generated instances with the hypothesis imposed.
SuiteReport dominance_suite(const SuiteConfig& config);

struct PSuiteConfig {
  std::size_t instances = 50;
  std::uint64_t seed = 11;
  int order = 4;
  Index dim = 2;
  std::size_t members = 64;
  std::size_t falsify_budget = 10000;
  /// Attempts per accepted instance before giving up.
  std::size_t max_attempts = 1000;
};

/// Even-order symmetric interval-B instances; every sampled member and every
/// sign-vertex member must survive falsify_p. Property "p-falsify".
SuiteReport interval_p_suite(const PSuiteConfig& config);

/// Combines the reports of several suites into one (tallies added,
/// counterexamples and probe counts concatenated).
SuiteReport merge_reports(std::string name, const std::vector<SuiteReport>& parts);

}  // namespace itensor
