#include "itensor/point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "itensor/error.hpp"
#include "itensor/parallel.hpp"

namespace itensor {

namespace {

std::vector<RowStats> all_row_stats(const Tensor& a) {
  std::vector<RowStats> stats(a.dim());
  for (Index i = 0; i < a.dim(); ++i) stats[i] = row_stats(a.row(i), a.shape().diag_tail(i));
  return stats;
}

}  // namespace

const char* method_name(BMethod m) {
  switch (m) {
    case BMethod::Definition: return "definition";
    case BMethod::RowsumGamma: return "rowsum_gamma";
    case BMethod::Slack: return "slack";
  }
  return "?";
}

const char* dichotomy_name(PointDichotomy::Kind k) {
  switch (k) {
    case PointDichotomy::Kind::IsB: return "IsB";
    case PointDichotomy::Kind::CriticalRow: return "CriticalRow";
    case PointDichotomy::Kind::NotDoubleB: return "NotDoubleB";
  }
  return "?";
}

Verdict check_b(const Tensor& a, BMethod method, const CheckOptions& opt) {
  ConditionLog log(opt.tolerance, opt.record);
  const Index rs = a.row_size();
  const auto big_n = static_cast<double>(rs);
  for (Index i = 0; i < a.dim() && !log.done(); ++i) {
    const auto row = a.row(i);
    const Index d = a.shape().diag_tail(i);
    const RowStats s = row_stats(row, d);
    switch (method) {
      case BMethod::Definition: {
        log.check("a", {i}, {}, s.rowsum, 0.0, Relation::Greater);
        const double mean = s.rowsum / big_n;
        for (Index t = 0; t < rs && !log.done(); ++t) {
          if (t != d) log.check("b", {i}, {t}, mean, row[t], Relation::Greater);
        }
        break;
      }
      case BMethod::RowsumGamma:
        log.check("b", {i}, {}, s.rowsum, big_n * s.gamma, Relation::Greater);
        break;
      case BMethod::Slack:
        log.check("b", {i}, {}, s.diag - s.gamma, s.slack_sum, Relation::Greater);
        break;
    }
  }
  return std::move(log).finish(std::string("b/") + method_name(method));
}

Verdict check_dd(const Tensor& a, bool strict, const CheckOptions& opt) {
  ConditionLog log(opt.tolerance, opt.record);
  for (Index i = 0; i < a.dim() && !log.done(); ++i) {
    const auto row = a.row(i);
    const Index d = a.shape().diag_tail(i);
    double off = 0.0;
    for (Index t = 0; t < row.size(); ++t) {
      if (t != d) off += std::fabs(row[t]);
    }
    log.check("a", {i}, {}, row[d], off, strict ? Relation::Greater : Relation::GreaterEqual);
  }
  return std::move(log).finish(strict ? "dd/strict" : "dd/weak");
}

Verdict check_z(const Tensor& a, const CheckOptions& opt) {
  ConditionLog log(opt.tolerance, opt.record);
  for (Index i = 0; i < a.dim() && !log.done(); ++i) {
    const auto row = a.row(i);
    const Index d = a.shape().diag_tail(i);
    for (Index t = 0; t < row.size() && !log.done(); ++t) {
      if (t != d) log.check("a", {i}, {t}, row[t], 0.0, Relation::LessEqual);
    }
  }
  auto v = std::move(log).finish("z");
  v.notes.push_back("off-diagonal entries <= 0 convention");
  return v;
}

Verdict check_double_b(const Tensor& a, const CheckOptions& opt) {
  ConditionLog log(opt.tolerance, opt.record);
  const auto stats = all_row_stats(a);
  const Index n = a.dim();
  for (Index i = 0; i < n && !log.done(); ++i) {
    log.check("a", {i}, {}, stats[i].diag, stats[i].gamma, Relation::Greater);
    if (!log.done()) log.check("b", {i}, {}, stats[i].diag - stats[i].gamma, stats[i].slack_sum, Relation::GreaterEqual);
  }
  for (Index i = 0; i < n && !log.done(); ++i) {
    for (Index j = i + 1; j < n && !log.done(); ++j) {
      const double lhs = (stats[i].diag - stats[i].gamma) * (stats[j].diag - stats[j].gamma);
      const double rhs = stats[i].slack_sum * stats[j].slack_sum;
      log.check("c", {i, j}, {}, lhs, rhs, Relation::Greater);
    }
  }
  return std::move(log).finish("double-b");
}

bool b_from_stats(std::span<const RowStats> stats, Index row_size, const Tolerance& tol) {
  const auto big_n = static_cast<double>(row_size);
  for (const auto& s : stats) {
    if (!tol.holds(Relation::Greater, s.rowsum, 0.0)) return false;
    if (row_size > 1 && !tol.holds(Relation::Greater, s.rowsum / big_n, s.max_off)) return false;
  }
  return true;
}

bool double_b_from_stats(std::span<const RowStats> stats, const Tolerance& tol) {
  for (const auto& s : stats) {
    if (!tol.holds(Relation::Greater, s.diag, s.gamma)) return false;
    if (!tol.holds(Relation::GreaterEqual, s.diag - s.gamma, s.slack_sum)) return false;
  }
  for (std::size_t i = 0; i < stats.size(); ++i) {
    for (std::size_t j = i + 1; j < stats.size(); ++j) {
      const double lhs = (stats[i].diag - stats[i].gamma) * (stats[j].diag - stats[j].gamma);
      if (!tol.holds(Relation::Greater, lhs, stats[i].slack_sum * stats[j].slack_sum)) return false;
    }
  }
  return true;
}

PointDichotomy classify_double_b_dichotomy(const Tensor& a, const CheckOptions& opt) {
  PointDichotomy out;
  CheckOptions quiet{opt.tolerance, false};
  if (!check_double_b(a, quiet).holds()) return out;
  if (check_b(a, BMethod::Slack, quiet).holds()) {
    out.kind = PointDichotomy::Kind::IsB;
    return out;
  }
  const auto stats = all_row_stats(a);
  for (Index i = 0; i < a.dim(); ++i) {
    // Double B gives slack >= 0; the rows that are not strict sit at equality.
    if (!opt.tolerance.holds(Relation::Greater, stats[i].diag - stats[i].gamma, stats[i].slack_sum)) {
      out.equality_rows.push_back(i);
    }
  }
  out.kind = PointDichotomy::Kind::CriticalRow;
  if (!out.equality_rows.empty()) out.critical_row = out.equality_rows.front();
  return out;
}

Verdict check_b_circulant(const Tensor& a, const CheckOptions& opt) {
  if (!is_circulant(a)) throw InputError("check_b_circulant: tensor is not circulant");
  ConditionLog log(opt.tolerance, opt.record);
  const RowStats s = row_stats(a.row(0), a.shape().diag_tail(0));
  log.check("b", {0}, {}, s.diag - s.gamma, s.slack_sum, Relation::Greater);
  return std::move(log).finish("circulant-b");
}

Verdict p_sufficient(const Tensor& a, const CheckOptions& opt) {
  Verdict v;
  v.method = "p-sufficient";
  v.status = Status::Inconclusive;
  if (a.order() % 2 != 0) {
    v.notes.push_back("order is odd; no sufficient condition applies");
    return v;
  }
  CheckOptions quiet{opt.tolerance, false};
  const bool b = check_b(a, BMethod::Definition, quiet).holds();
  const bool sym = is_symmetric(a);
  if (b && sym) {
    v.status = Status::Holds;
    v.notes.push_back("even-order symmetric B-tensor");
  } else if (b && check_z(a, quiet).holds()) {
    v.status = Status::Holds;
    v.notes.push_back("even-order B-tensor and Z-tensor");
  } else if (sym && check_double_b(a, quiet).holds()) {
    v.status = Status::Holds;
    v.notes.push_back("even-order symmetric double B-tensor");
  } else {
    v.notes.push_back("no sufficient condition applies");
  }
  return v;
}

namespace {

constexpr std::size_t kFalsifyChunk = 4096;

// First index in [0, count) of the candidates in `xs` (count vectors of
// length n) whose largest component product is <= 0.
std::optional<std::size_t> first_falsifier(const Tensor& a, const std::vector<double>& xs, std::size_t count,
                                           double* max_product) {
  const Index n = a.dim();
  const std::size_t blocks = (count + 3) / 4;
  auto block_hit = [&](std::size_t b, std::size_t* lane_out, double* value_out) {
    std::vector<double> out(4 * n);
    std::vector<double> padded;
    const double* src = xs.data() + b * 4 * n;
    const std::size_t valid = std::min<std::size_t>(4, count - b * 4);
    if (valid < 4) {
      padded.assign(src, src + valid * n);
      for (std::size_t k = valid; k < 4; ++k) padded.insert(padded.end(), src, src + n);
      src = padded.data();
    }
    kernels::p_products4(a, src, out.data());
    for (std::size_t k = 0; k < valid; ++k) {
      double best = -std::numeric_limits<double>::infinity();
      for (Index i = 0; i < n; ++i) best = std::max(best, out[k * n + i]);
      if (best <= 0.0) {
        if (lane_out) *lane_out = k;
        if (value_out) *value_out = best;
        return true;
      }
    }
    return false;
  };
  const auto hit = find_first(blocks, [&](std::size_t b) { return block_hit(b, nullptr, nullptr); });
  if (!hit) return std::nullopt;
  std::size_t lane = 0;
  block_hit(*hit, &lane, max_product);
  return *hit * 4 + lane;
}

}  // namespace

FalsifyResult falsify_p(const Tensor& a, std::size_t budget, std::uint64_t seed) {
  if (budget < 1) throw InputError("falsify_p: budget must be >= 1");
  const Index n = a.dim();
  FalsifyResult res;
  res.seed = seed;
  const std::size_t basis = 2 * n;
  const std::size_t signs = n <= 20 ? (std::size_t{1} << n) : 0;
  const std::size_t fixed = basis + signs;
  const std::size_t total = fixed + budget;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto fill = [&](std::size_t index, double* x) {
    if (index < basis) {
      std::fill(x, x + n, 0.0);
      x[index / 2] = index % 2 == 0 ? 1.0 : -1.0;
    } else if (index < fixed) {
      const std::size_t s = index - basis;
      for (Index k = 0; k < n; ++k) x[k] = (s >> k) & 1u ? -1.0 : 1.0;
    } else {
      double norm = 0.0;
      do {
        double sq = 0.0;
        for (Index k = 0; k < n; ++k) {
          x[k] = normal(rng);
          sq += x[k] * x[k];
        }
        norm = std::sqrt(sq);
      } while (norm == 0.0);
      for (Index k = 0; k < n; ++k) x[k] /= norm;
    }
  };

  std::vector<double> xs;
  for (std::size_t start = 0; start < total; start += kFalsifyChunk) {
    const std::size_t count = std::min(kFalsifyChunk, total - start);
    xs.resize(count * n);
    // Sequential fill keeps the random stream independent of threading.
    for (std::size_t k = 0; k < count; ++k) fill(start + k, xs.data() + k * n);
    double value = 0.0;
    if (auto hit = first_falsifier(a, xs, count, &value)) {
      res.falsified = true;
      res.counterexample = std::vector<double>(xs.begin() + static_cast<std::ptrdiff_t>(*hit * n),
                                               xs.begin() + static_cast<std::ptrdiff_t>((*hit + 1) * n));
      res.max_product = value;
      res.samples_used = start + *hit + 1;
      return res;
    }
  }
  res.samples_used = total;
  return res;
}

}  // namespace itensor
