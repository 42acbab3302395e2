#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itensor/tensor.hpp"

namespace itensor {

enum class Status { Holds, Fails, Inconclusive };

/// How the two sides of a checked inequality relate when the check passes.
enum class Relation { Greater, GreaterEqual, LessEqual };

const char* status_name(Status s);
const char* relation_symbol(Relation r);

/// Exact comparison by default. A positive epsilon relaxes every check by
/// that amount: lhs > rhs becomes lhs > rhs - eps, and so on.
struct Tolerance {
  double epsilon = 0.0;

  bool holds(Relation r, double lhs, double rhs) const {
    switch (r) {
      case Relation::Greater: return lhs > rhs - epsilon;
      case Relation::GreaterEqual: return lhs >= rhs - epsilon;
      case Relation::LessEqual: return lhs <= rhs + epsilon;
    }
    return false;
  }
};

/// The violated inequality behind a Fails verdict. Rows and tails are
/// 0-based; `tail` is the tail offset inside `row`.
struct Witness {
  Index row = 0;
  std::optional<Index> tail;
  std::optional<Index> pair_row;
  std::optional<Index> pair_tail;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string condition;
  Relation relation = Relation::Greater;
};

/// One evaluated inequality. `rows` holds one or two rows, `tails` the tail
/// offsets involved (possibly none).
struct ConditionRecord {
  std::string id;
  std::vector<Index> rows;
  std::vector<Index> tails;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::Greater;
  bool passed = true;
};

struct Verdict {
  Status status = Status::Holds;
  std::optional<Witness> witness;
  std::string method;
  std::vector<ConditionRecord> conditions;
  /// Free-form remarks: skipped hypotheses, anomalies, conventions.
  std::vector<std::string> notes;

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }
};

/// Accumulates checks in evaluation order. The first failure becomes the
/// witness; with `record` set every check is logged and evaluation is
/// expected to continue, otherwise callers may stop at the first failure.
class ConditionLog {
 public:
  ConditionLog(Tolerance tol, bool record) : tol_(tol), record_(record) {}

  /// Returns whether the inequality holds.
  bool check(const char* id, std::vector<Index> rows, std::vector<Index> tails, double lhs, double rhs,
             Relation rel);

  bool failed() const { return witness_.has_value(); }
  /// True once a failure is known and the caller does not need the full log.
  bool done() const { return failed() && !record_; }
  bool recording() const { return record_; }
  const Tolerance& tolerance() const { return tol_; }

  Verdict finish(std::string method) &&;

 private:
  Tolerance tol_;
  bool record_;
  std::optional<Witness> witness_;
  std::vector<ConditionRecord> records_;
};

}  // namespace itensor
