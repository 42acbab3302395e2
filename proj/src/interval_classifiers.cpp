#include "itensor/interval_classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "itensor/error.hpp"

namespace itensor {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Sum of lower over the row, skipping up to two tails (pass row_size to
// skip nothing). Ascending tail order.
double lower_sum(const IntervalTensor& ai, Index row, Index skip1, Index skip2) {
  double s = 0.0;
  for (Index t = 0; t < ai.row_size(); ++t) {
    if (t != skip1 && t != skip2) s += ai.lo(row, t);
  }
  return s;
}

// sum_{k != d, j} (upper_j - lower_k)
double excess_sum(const IntervalTensor& ai, Index row, Index d, Index j) {
  const double uj = ai.up(row, j);
  double s = 0.0;
  for (Index k = 0; k < ai.row_size(); ++k) {
    if (k != d && k != j) s += uj - ai.lo(row, k);
  }
  return s;
}

double max_upper_off(const IntervalTensor& ai, Index row) {
  const Index d = ai.shape().diag_tail(row);
  double m = kNegInf;
  for (Index t = 0; t < ai.row_size(); ++t) {
    if (t != d) m = std::max(m, ai.up(row, t));
  }
  return m;
}

// Per-row quantities of the interval double-B theorem.
struct DoubleBRow {
  double ld = 0.0;
  /// max{0, -sum_{off} lower}
  double neg_off = 0.0;
  /// Indexed by tail; the diagonal slot is unused.
  std::vector<double> left;   // lower_d - upper_p
  std::vector<double> right;  // max{0, sum_{k != d, p} (upper_p - lower_k)}
};

std::vector<DoubleBRow> double_b_rows(const IntervalTensor& ai) {
  std::vector<DoubleBRow> rows(ai.dim());
  const Index rs = ai.row_size();
  for (Index i = 0; i < ai.dim(); ++i) {
    const Index d = ai.shape().diag_tail(i);
    auto& r = rows[i];
    r.ld = ai.lo(i, d);
    r.neg_off = std::max(0.0, -lower_sum(ai, i, d, rs));
    r.left.assign(rs, 0.0);
    r.right.assign(rs, 0.0);
    for (Index p = 0; p < rs; ++p) {
      if (p == d) continue;
      r.left[p] = r.ld - ai.up(i, p);
      r.right[p] = std::max(0.0, excess_sum(ai, i, d, p));
    }
  }
  return rows;
}

Verdict inconclusive(std::string method, std::string note) {
  Verdict v;
  v.status = Status::Inconclusive;
  v.method = std::move(method);
  v.notes.push_back(std::move(note));
  return v;
}

// Runs check_double_b on a sequence of tensors; the first failure decides.
Verdict double_b_on_all(const std::vector<std::pair<std::string, Tensor>>& tensors, std::string method,
                        const CheckOptions& opt) {
  Verdict out;
  out.method = std::move(method);
  for (const auto& [label, t] : tensors) {
    auto v = check_double_b(t, CheckOptions{opt.tolerance, false});
    if (!v.holds()) {
      out.status = Status::Fails;
      out.witness = v.witness;
      out.notes.push_back("not double B: " + label);
      return out;
    }
  }
  out.status = Status::Holds;
  return out;
}

}  // namespace

const char* method_name(IntervalBMethod m) {
  switch (m) {
    case IntervalBMethod::Theorem: return "theorem";
    case IntervalBMethod::Compact: return "compact";
    case IntervalBMethod::Slack: return "slack";
    case IntervalBMethod::Pairwise: return "pairwise";
  }
  return "?";
}

const char* dichotomy_name(IntervalDichotomy::Kind k) {
  switch (k) {
    case IntervalDichotomy::Kind::IntervalB: return "IntervalB";
    case IntervalDichotomy::Kind::CriticalRow: return "CriticalRow";
    case IntervalDichotomy::Kind::NotDoubleB: return "NotDoubleB";
  }
  return "?";
}

Verdict check_interval_b(const IntervalTensor& ai, IntervalBMethod method, const CheckOptions& opt) {
  ConditionLog log(opt.tolerance, opt.record);
  const Index n = ai.dim();
  const Index rs = ai.row_size();
  const double others = static_cast<double>(rs - 1);
  const std::string name = std::string("interval-b/") + method_name(method);

  if (method != IntervalBMethod::Compact) {
    for (Index i = 0; i < n && !log.done(); ++i) {
      log.check("a", {i}, {}, lower_sum(ai, i, rs, rs), 0.0, Relation::Greater);
    }
  } else if (rs == 1) {
    // No off-diagonal tails: only the 0 inside the max remains.
    for (Index i = 0; i < n && !log.done(); ++i) {
      log.check("a", {i}, {}, lower_sum(ai, i, rs, rs), 0.0, Relation::Greater);
    }
  }
  for (Index i = 0; i < n && !log.done(); ++i) {
    const Index d = ai.shape().diag_tail(i);
    const double ld = ai.lo(i, d);
    const double total = method == IntervalBMethod::Compact ? lower_sum(ai, i, rs, rs) : 0.0;
    for (Index j = 0; j < rs && !log.done(); ++j) {
      if (j == d) continue;
      const double uj = ai.up(i, j);
      const double lj = ai.lo(i, j);
      switch (method) {
        case IntervalBMethod::Theorem:
          log.check("b", {i}, {j}, lower_sum(ai, i, j, rs), others * uj, Relation::Greater);
          break;
        case IntervalBMethod::Compact:
          log.check("b", {i}, {j}, total, std::max(0.0, others * uj + lj), Relation::Greater);
          break;
        case IntervalBMethod::Slack: {
          double rhs = 0.0;
          for (Index k = 0; k < rs; ++k) {
            if (k != d) rhs += uj - ai.lo(i, k);
          }
          log.check("b", {i}, {j}, ld - lj, rhs, Relation::Greater);
          break;
        }
        case IntervalBMethod::Pairwise:
          log.check("b", {i}, {j}, ld - uj, excess_sum(ai, i, d, j), Relation::Greater);
          break;
      }
    }
  }
  return std::move(log).finish(name);
}

Verdict check_interval_b_zfast(const IntervalTensor& ai, const CheckOptions& opt) {
  if (!is_interval_z(ai)) throw InputError("check_interval_b_zfast: interval is not interval Z");
  ConditionLog log(opt.tolerance, opt.record);
  const Index rs = ai.row_size();
  for (Index i = 0; i < ai.dim() && !log.done(); ++i) {
    log.check("a", {i}, {}, lower_sum(ai, i, rs, rs), 0.0, Relation::Greater);
  }
  return std::move(log).finish("interval-b/zfast");
}

Verdict interval_b_necessary(const IntervalTensor& ai, const CheckOptions& opt) {
  ConditionLog log(opt.tolerance, opt.record);
  const Index rs = ai.row_size();
  for (Index i = 0; i < ai.dim() && !log.done(); ++i) {
    const Index d = ai.shape().diag_tail(i);
    const double ld = ai.lo(i, d);
    double neg = 0.0;
    for (Index t = 0; t < rs; ++t) {
      if (ai.lo(i, t) < 0.0) neg += -ai.lo(i, t);
    }
    log.check("nec-a", {i}, {}, ld, neg, Relation::Greater);
    for (Index t = 0; t < rs && !log.done(); ++t) {
      if (t == d) continue;
      log.check("nec-b", {i}, {t}, ld, std::max(std::fabs(ai.up(i, t)), std::fabs(ai.lo(i, t))),
                Relation::Greater);
    }
    if (!log.done()) log.check("prime", {i}, {}, ld, std::max(0.0, max_upper_off(ai, i)), Relation::Greater);
  }
  return std::move(log).finish("interval-b/necessary");
}

Verdict check_interval_double_b(const IntervalTensor& ai, const CheckOptions& opt) {
  ConditionLog log(opt.tolerance, opt.record);
  const Index n = ai.dim();
  const Index rs = ai.row_size();
  const auto rows = double_b_rows(ai);
  auto diag_of = [&](Index i) { return ai.shape().diag_tail(i); };

  for (Index i = 0; i < n && !log.done(); ++i) {
    log.check("a", {i}, {}, rows[i].ld, std::max(0.0, max_upper_off(ai, i)), Relation::Greater);
  }
  for (Index i = 0; i < n && !log.done(); ++i) {
    for (Index p = 0; p < rs && !log.done(); ++p) {
      if (p != diag_of(i)) log.check("b1", {i}, {p}, rows[i].left[p], rows[i].right[p], Relation::GreaterEqual);
    }
  }
  for (Index i = 0; i < n && !log.done(); ++i) {
    log.check("b2", {i}, {}, rows[i].ld, rows[i].neg_off, Relation::GreaterEqual);
  }
  for (Index i = 0; i < n && !log.done(); ++i) {
    for (Index j = 0; j < n && !log.done(); ++j) {
      if (i == j) continue;
      for (Index p = 0; p < rs && !log.done(); ++p) {
        if (p == diag_of(i)) continue;
        for (Index q = 0; q < rs && !log.done(); ++q) {
          if (q == diag_of(j)) continue;
          log.check("c1", {i, j}, {p, q}, rows[i].left[p] * rows[j].left[q], rows[i].right[p] * rows[j].right[q],
                    Relation::Greater);
        }
      }
    }
  }
  for (Index i = 0; i < n && !log.done(); ++i) {
    for (Index j = 0; j < n && !log.done(); ++j) {
      if (i == j) continue;
      for (Index p = 0; p < rs && !log.done(); ++p) {
        if (p == diag_of(i)) continue;
        log.check("c2", {i, j}, {p}, rows[i].left[p] * rows[j].ld, rows[i].right[p] * rows[j].neg_off,
                  Relation::Greater);
      }
    }
  }
  for (Index i = 0; i < n && !log.done(); ++i) {
    for (Index j = 0; j < n && !log.done(); ++j) {
      if (i != j) {
        log.check("c3", {i, j}, {}, rows[i].ld * rows[j].ld, rows[i].neg_off * rows[j].neg_off, Relation::Greater);
      }
    }
  }
  return std::move(log).finish("interval-double-b");
}

IntervalDichotomy classify_interval_double_b_dichotomy(const IntervalTensor& ai, const CheckOptions& opt) {
  IntervalDichotomy out;
  const CheckOptions quiet{opt.tolerance, false};
  if (!check_interval_double_b(ai, quiet).holds()) return out;
  if (check_interval_b(ai, IntervalBMethod::Pairwise, quiet).holds()) {
    out.kind = IntervalDichotomy::Kind::IntervalB;
    return out;
  }
  const Index rs = ai.row_size();
  for (Index i = 0; i < ai.dim(); ++i) {
    const Index d = ai.shape().diag_tail(i);
    if (!opt.tolerance.holds(Relation::Greater, lower_sum(ai, i, rs, rs), 0.0)) {
      out.failing_rows.push_back({i, IntervalDichotomy::Mode::NonpositiveRowSum, std::nullopt});
      continue;
    }
    for (Index p = 0; p < rs; ++p) {
      if (p == d) continue;
      if (!opt.tolerance.holds(Relation::Greater, ai.lo(i, d) - ai.up(i, p), excess_sum(ai, i, d, p))) {
        out.failing_rows.push_back({i, IntervalDichotomy::Mode::SlackEquality, p});
        break;
      }
    }
  }
  out.kind = IntervalDichotomy::Kind::CriticalRow;
  if (!out.failing_rows.empty()) out.critical_row = out.failing_rows.front().row;
  return out;
}

Verdict interval_double_b_necessary(const IntervalTensor& ai, NecessaryVariant variant, const CheckOptions& opt) {
  if (variant == NecessaryVariant::Extremes) {
    std::vector<std::pair<std::string, Tensor>> tensors;
    tensors.emplace_back("lower", ai.lower());
    for (Index i = 0; i < ai.dim(); ++i) {
      tensors.emplace_back("row-max extreme skipping row " + std::to_string(i + 1), extreme_row_max_except(ai, i));
    }
    return double_b_on_all(tensors, "interval-double-b/necessary-extremes", opt);
  }

  ConditionLog log(opt.tolerance, opt.record);
  const Index n = ai.dim();
  const Index rs = ai.row_size();
  struct RowMax {
    double ld, top, excess, neg_off;
    Index k;
  };
  std::vector<RowMax> rm(n);
  for (Index i = 0; i < n; ++i) {
    const Index d = ai.shape().diag_tail(i);
    const auto k = argmax_upper_tail(ai, i);
    rm[i].ld = ai.lo(i, d);
    rm[i].neg_off = -lower_sum(ai, i, d, rs);
    rm[i].k = k.value_or(d);
    rm[i].top = k ? ai.up(i, *k) : kNegInf;
    rm[i].excess = k ? excess_sum(ai, i, d, *k) : 0.0;
  }
  for (Index i = 0; i < n && !log.done(); ++i) {
    log.check("a", {i}, {}, rm[i].ld, std::max(0.0, rm[i].top), Relation::Greater);
  }
  if (rs > 1) {
    for (Index i = 0; i < n && !log.done(); ++i) {
      if (rm[i].top > 0.0) {
        log.check("b1", {i}, {rm[i].k}, rm[i].ld - rm[i].top, rm[i].excess, Relation::GreaterEqual);
      } else {
        log.check("b2", {i}, {}, rm[i].ld, rm[i].neg_off, Relation::GreaterEqual);
      }
    }
    for (Index i = 0; i < n && !log.done(); ++i) {
      for (Index j = 0; j < n && !log.done(); ++j) {
        if (i == j) continue;
        const bool pi = rm[i].top > 0.0;
        const bool pj = rm[j].top > 0.0;
        if (pi && pj) {
          log.check("c1", {i, j}, {rm[i].k, rm[j].k}, (rm[i].ld - rm[i].top) * (rm[j].ld - rm[j].top),
                    rm[i].excess * rm[j].excess, Relation::Greater);
        } else if (pi) {
          log.check("c2", {i, j}, {rm[i].k}, (rm[i].ld - rm[i].top) * rm[j].ld, rm[i].excess * rm[j].neg_off,
                    Relation::Greater);
        } else if (!pj) {
          log.check("c3", {i, j}, {}, rm[i].ld * rm[j].ld, rm[i].neg_off * rm[j].neg_off, Relation::Greater);
        }
      }
    }
  }
  return std::move(log).finish("interval-double-b/necessary-rowmax");
}

std::optional<std::vector<Index>> dominance_tails(const IntervalTensor& ai, Index* failing_row) {
  std::vector<Index> tails(ai.dim());
  const Index rs = ai.row_size();
  for (Index i = 0; i < ai.dim(); ++i) {
    const Index d = ai.shape().diag_tail(i);
    std::optional<Index> found;
    for (Index k = 0; k < rs && !found; ++k) {
      if (k == d) continue;
      bool ok = true;
      for (Index t = 0; t < rs && ok; ++t) {
        if (t != d && t != k && ai.up(i, t) > ai.lo(i, k)) ok = false;
      }
      if (ok) found = k;
    }
    if (!found) {
      if (failing_row) *failing_row = i;
      return std::nullopt;
    }
    tails[i] = *found;
  }
  return tails;
}

Verdict check_interval_double_b_dominance(const IntervalTensor& ai, const CheckOptions& opt) {
  const std::string method = "interval-double-b/dominance";
  if (ai.dim() < 3) return inconclusive(method, "dominance criterion needs n >= 3");
  Index bad = 0;
  const auto tails = dominance_tails(ai, &bad);
  if (!tails) return inconclusive(method, "dominance hypothesis fails in row " + std::to_string(bad + 1));
  std::vector<std::pair<std::string, Tensor>> tensors;
  tensors.emplace_back("lower", ai.lower());
  for (Index i = 0; i < ai.dim(); ++i) {
    tensors.emplace_back("row-max extreme skipping row " + std::to_string(i + 1),
                         extreme_row_max_except(ai, i, *tails));
  }
  return double_b_on_all(tensors, method, opt);
}

Verdict check_interval_double_b_zfast(const IntervalTensor& ai, const CheckOptions& opt) {
  if (!is_interval_z(ai)) throw InputError("check_interval_double_b_zfast: interval is not interval Z");
  auto v = check_double_b(ai.lower(), opt);
  v.method = "interval-double-b/zfast";
  return v;
}

Verdict check_interval_double_b_hat_sufficient(const IntervalTensor& ai, const CheckOptions& opt) {
  const std::string method = "interval-double-b/hat";
  const Index rs = ai.row_size();
  for (Index i = 0; i < ai.dim(); ++i) {
    const Index d = ai.shape().diag_tail(i);
    double best = kNegInf;
    for (Index t = 0; t < rs; ++t) {
      if (t != d) best = std::max(best, ai.lo(i, t));
    }
    if (rs > 1 && best < 0.0) {
      return inconclusive(method, "row " + std::to_string(i + 1) + " has a negative lower off-diagonal maximum");
    }
  }
  auto v = check_double_b(extreme_hat(ai), opt);
  v.method = method;
  if (!v.holds()) {
    v.status = Status::Inconclusive;
    v.notes.push_back("hat extreme is not double B; sufficient condition unmet");
  }
  return v;
}

Verdict check_interval_circulant(const IntervalTensor& ai, const CheckOptions& opt) {
  if (!is_circulant(ai.lower()) || !is_circulant(ai.upper())) {
    throw InputError("check_interval_circulant: bounds are not both circulant");
  }
  ConditionLog log(opt.tolerance, opt.record);
  const Index rs = ai.row_size();
  const Index d = ai.shape().diag_tail(0);
  const double ld = ai.lo(0, d);
  log.check("c1", {0}, {}, ld, -lower_sum(ai, 0, d, rs), Relation::Greater);
  for (Index j = 0; j < rs && !log.done(); ++j) {
    if (j != d) log.check("c2", {0}, {j}, ld - ai.up(0, j), excess_sum(ai, 0, d, j), Relation::Greater);
  }
  return std::move(log).finish("interval-circulant");
}

Verdict interval_p_sufficient(const IntervalTensor& ai, const CheckOptions& opt) {
  const std::string method = "interval-p-sufficient";
  if (ai.order() % 2 != 0) return inconclusive(method, "order is odd; no sufficient condition applies");
  const CheckOptions quiet{opt.tolerance, false};
  const bool sym = is_symmetric_interval(ai);
  const bool z = is_interval_z(ai);
  if (!sym && !z) return inconclusive(method, "interval is neither symmetric nor interval Z");
  Verdict v;
  v.method = method;
  v.status = Status::Inconclusive;
  const bool b = check_interval_b(ai, IntervalBMethod::Theorem, quiet).holds();
  if (b && z) {
    v.status = Status::Holds;
    v.notes.push_back("even-order interval Z and interval B");
  } else if (b && sym) {
    v.status = Status::Holds;
    v.notes.push_back("even-order symmetric interval B");
  } else if (sym && check_interval_double_b(ai, quiet).holds()) {
    v.status = Status::Holds;
    v.notes.push_back("even-order symmetric interval double B");
  } else {
    v.notes.push_back("no sufficient condition applies");
  }
  return v;
}

}  // namespace itensor
