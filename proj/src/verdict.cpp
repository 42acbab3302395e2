#include "itensor/verdict.hpp"

namespace itensor {

const char* status_name(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
    case Relation::LessEqual: return "<=";
  }
  return "?";
}

bool ConditionLog::check(const char* id, std::vector<Index> rows, std::vector<Index> tails, double lhs,
                         double rhs, Relation rel) {
  const bool ok = tol_.holds(rel, lhs, rhs);
  if (!ok && !witness_) {
    Witness w;
    w.row = rows.at(0);
    if (rows.size() > 1) w.pair_row = rows[1];
    if (!tails.empty()) w.tail = tails[0];
    if (tails.size() > 1) w.pair_tail = tails[1];
    w.lhs = lhs;
    w.rhs = rhs;
    w.condition = id;
    w.relation = rel;
    witness_ = std::move(w);
  }
  if (record_) records_.push_back({id, std::move(rows), std::move(tails), lhs, rhs, rel, ok});
  return ok;
}

Verdict ConditionLog::finish(std::string method) && {
  Verdict v;
  v.status = witness_ ? Status::Fails : Status::Holds;
  v.witness = std::move(witness_);
  v.method = std::move(method);
  v.conditions = std::move(records_);
  return v;
}

}  // namespace itensor
