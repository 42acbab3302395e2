#include "itensor/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "itensor/error.hpp"
#include "itensor/interval_classifiers.hpp"
#include "itensor/kernels.hpp"
#include "itensor/parallel.hpp"
#include "itensor/point.hpp"

namespace itensor {

namespace {

constexpr double kGrid = 8.0;

// RowStats for every pattern of one row; bit t picks upper at tail t.
std::vector<RowStats> row_vertex_table(const IntervalTensor& ai, Index row) {
  const Index len = ai.row_size();
  const Index d = ai.shape().diag_tail(row);
  const auto lower = ai.lower().row(row);
  const auto upper = ai.upper().row(row);
  const std::uint64_t patterns = std::uint64_t{1} << len;
  std::vector<RowStats> table(patterns);
  if (len < 2) {
    std::vector<double> v(len);
    for (std::uint64_t s = 0; s < patterns; ++s) {
      for (Index t = 0; t < len; ++t) v[t] = (s >> t) & 1u ? upper[t] : lower[t];
      table[s] = row_stats(v, d);
    }
    return table;
  }
  for (std::uint64_t base = 0; base < patterns; base += 4) {
    kernels::vertex_row_stats4(lower.data(), upper.data(), len, d, base, &table[base]);
  }
  return table;
}

bool vertex_passes(const Tensor& v, OracleClass cls, const Tolerance& tol) {
  const CheckOptions opt{tol, false};
  return cls == OracleClass::B ? check_b(v, BMethod::Definition, opt).holds() : check_double_b(v, opt).holds();
}

Verdict oracle_verdict(const IntervalTensor& ai, OracleClass cls, const OracleOptions& opt, const char* method) {
  const auto failing = first_failing_vertex(ai, cls, opt);
  const CheckOptions copt{opt.tolerance, false};
  if (failing) {
    const Tensor v = vertex_at(ai, *failing);
    Verdict out = cls == OracleClass::B ? check_b(v, BMethod::Definition, copt) : check_double_b(v, copt);
    out.method = method;
    out.notes.push_back("failing vertex selector " + std::to_string(*failing));
    return out;
  }
  Verdict out;
  out.method = method;
  out.notes.push_back("all 2^" + std::to_string(ai.size()) + " vertices pass");
  if (cls == OracleClass::DoubleB) {
    for (std::size_t k = 0; k < opt.interior_members; ++k) {
      const Tensor m = random_member(ai, derive_seed(opt.member_seed, k));
      auto v = check_double_b(m, copt);
      if (!v.holds()) {
        v.method = method;
        v.notes.push_back("interior member " + std::to_string(k) + " fails although every vertex passes");
        return v;
      }
    }
  }
  return out;
}

// Uniform draw from the 1/8 grid inside [lo, hi]; the raw lower end when the
// range holds no grid point.
double grid_draw(std::mt19937_64& rng, double lo, double hi) {
  const auto first = static_cast<long long>(std::ceil(lo * kGrid));
  const auto last = static_cast<long long>(std::floor(hi * kGrid));
  if (first > last) return lo;
  std::uniform_int_distribution<long long> pick(first, last);
  return static_cast<double>(pick(rng)) / kGrid;
}

Index orbit_representative(const Shape& shape, Index flat) {
  auto idx = shape.unravel(flat);
  std::sort(idx.begin(), idx.end());
  return shape.ravel(idx);
}

Tensor orbit_average(const Tensor& a) {
  std::map<Index, std::pair<double, int>> sums;
  for (Index p = 0; p < a.size(); ++p) {
    auto& [sum, count] = sums[orbit_representative(a.shape(), p)];
    sum += a[p];
    ++count;
  }
  std::vector<double> out(a.size());
  for (Index p = 0; p < a.size(); ++p) {
    const auto& [sum, count] = sums[orbit_representative(a.shape(), p)];
    out[p] = sum / count;
  }
  return Tensor(a.shape(), std::move(out));
}

std::string status_of(const Verdict& v) { return status_name(v.status); }

}  // namespace

std::optional<std::uint64_t> first_failing_vertex(const IntervalTensor& ai, OracleClass cls, const OracleOptions& opt) {
  require_vertex_budget(ai, opt.budget);
  const std::uint64_t total = std::uint64_t{1} << ai.size();
  if (opt.reference) {
    for (std::uint64_t s = 0; s < total; ++s) {
      if (!vertex_passes(vertex_at(ai, s), cls, opt.tolerance)) return s;
    }
    return std::nullopt;
  }
  const Index n = ai.dim();
  const Index len = ai.row_size();
  const std::uint64_t mask = (std::uint64_t{1} << len) - 1;
  std::vector<std::vector<RowStats>> tables(n);
  for (Index i = 0; i < n; ++i) tables[i] = row_vertex_table(ai, i);
  // The budget keeps n^m <= 63, so n <= 63 rows.
  const auto hit = find_first(total, [&](std::size_t s) {
    std::array<RowStats, 64> stats;
    for (Index i = 0; i < n; ++i) stats[i] = tables[i][(s >> (i * len)) & mask];
    const std::span<const RowStats> view(stats.data(), n);
    return cls == OracleClass::B ? !b_from_stats(view, len, opt.tolerance)
                                 : !double_b_from_stats(view, opt.tolerance);
  });
  if (!hit) return std::nullopt;
  return static_cast<std::uint64_t>(*hit);
}

Verdict oracle_interval_b(const IntervalTensor& ai, const OracleOptions& opt) {
  return oracle_verdict(ai, OracleClass::B, opt, "oracle/interval-b");
}

Verdict oracle_interval_double_b(const IntervalTensor& ai, const OracleOptions& opt) {
  return oracle_verdict(ai, OracleClass::DoubleB, opt, "oracle/interval-double-b");
}

const char* structure_name(Structure s) {
  switch (s) {
    case Structure::General: return "general";
    case Structure::Z: return "z";
    case Structure::Circulant: return "circulant";
    case Structure::Symmetric: return "symmetric";
  }
  return "?";
}

Structure parse_structure(const std::string& name) {
  for (auto s : {Structure::General, Structure::Z, Structure::Circulant, Structure::Symmetric}) {
    if (name == structure_name(s)) return s;
  }
  throw InputError("unknown structure '" + name + "'");
}

void GeneratorSpec::validate() const {
  Shape{order, dim}.validate();
  if (!(diag.lo <= diag.hi)) throw InputError("generator: empty diagonal range");
  if (!(offdiag.lo <= offdiag.hi)) throw InputError("generator: empty off-diagonal range");
  if (!(radius_scale >= 0.0)) throw InputError("generator: radius_scale must be >= 0");
  if (structure == Structure::Z && offdiag.lo > 0.0) {
    throw InputError("generator: z structure needs a nonpositive off-diagonal range");
  }
}

IntervalTensor random_interval_tensor(const GeneratorSpec& spec) {
  spec.validate();
  const Shape shape{spec.order, spec.dim};
  std::mt19937_64 rng(spec.seed);
  const bool z = spec.structure == Structure::Z;
  const double off_hi = z ? std::min(spec.offdiag.hi, 0.0) : spec.offdiag.hi;

  // Draws (lower, upper) for one entry.
  auto draw = [&](bool diagonal) {
    const double mid = diagonal ? grid_draw(rng, spec.diag.lo, spec.diag.hi) : grid_draw(rng, spec.offdiag.lo, off_hi);
    const double rad = grid_draw(rng, 0.0, spec.radius_scale);
    double up = mid + rad;
    if (z && !diagonal) up = std::min(up, 0.0);
    return std::pair{mid - rad, up};
  };

  if (spec.structure == Structure::Circulant) {
    const Index len = shape.row_size();
    std::vector<double> lo(len), up(len);
    for (Index t = 0; t < len; ++t) std::tie(lo[t], up[t]) = draw(t == shape.diag_tail(0));
    return IntervalTensor(circulant_from_first_row(lo, spec.order, spec.dim),
                          circulant_from_first_row(up, spec.order, spec.dim));
  }

  std::vector<double> lo(shape.size()), up(shape.size());
  for (Index i = 0; i < spec.dim; ++i) {
    for (Index t = 0; t < shape.row_size(); ++t) {
      const Index p = shape.flat(i, t);
      std::tie(lo[p], up[p]) = draw(t == shape.diag_tail(i));
    }
  }
  IntervalTensor ai(Tensor(shape, std::move(lo)), Tensor(shape, std::move(up)));
  if (spec.structure != Structure::Symmetric) return ai;

  const auto [mid, rad] = midpoint_radius(ai);
  const Tensor m = orbit_average(mid);
  const Tensor r = orbit_average(rad);
  std::vector<double> sl(shape.size()), su(shape.size());
  for (Index p = 0; p < shape.size(); ++p) {
    sl[p] = m[p] - r[p];
    su[p] = m[p] + r[p];
  }
  return IntervalTensor(Tensor(shape, std::move(sl)), Tensor(shape, std::move(su)));
}

Tensor random_member(const IntervalTensor& ai, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out(ai.size());
  for (Index p = 0; p < ai.size(); ++p) {
    const double l = ai.lower()[p];
    const double u = ai.upper()[p];
    const double t = unit(rng);
    out[p] = l == u ? l : std::clamp(l + t * (u - l), l, u);
  }
  return Tensor(ai.shape(), std::move(out));
}

std::optional<IntervalTensor> manufacture_boundary(const IntervalTensor& ai, Index row) {
  if (row >= ai.dim()) throw InputError("manufacture_boundary: row out of range");
  const Index len = ai.row_size();
  if (len < 2) return std::nullopt;
  const Index d = ai.shape().diag_tail(row);
  const double others = static_cast<double>(len - 1);
  std::optional<Index> tight;
  for (Index p = 0; p < len; ++p) {
    if (p == d) continue;
    const double weight = others * ai.up(row, p) + ai.lo(row, p);
    if (!tight || weight > others * ai.up(row, *tight) + ai.lo(row, *tight)) tight = p;
  }
  const Index p = *tight;
  double excess = 0.0;
  for (Index k = 0; k < len; ++k) {
    if (k != d && k != p) excess += ai.up(row, p) - ai.lo(row, k);
  }
  if (excess < 0.0) return std::nullopt;
  const double ld = ai.up(row, p) + excess;
  Tensor lower = ai.lower();
  Tensor upper = ai.upper();
  const Index flat = ai.shape().flat(row, d);
  lower.set(flat, ld);
  upper.set(flat, std::max(upper[flat], ld));
  return IntervalTensor(std::move(lower), std::move(upper));
}

IntervalTensor impose_dominance(const IntervalTensor& ai, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tensor lower = ai.lower();
  Tensor upper = ai.upper();
  const Index len = ai.row_size();
  if (len < 3) return ai;
  for (Index i = 0; i < ai.dim(); ++i) {
    const Index d = ai.shape().diag_tail(i);
    std::uniform_int_distribution<Index> pick(0, len - 2);
    Index k = pick(rng);
    if (k >= d) ++k;
    double top = -std::numeric_limits<double>::infinity();
    for (Index t = 0; t < len; ++t) {
      if (t != d && t != k) top = std::max(top, ai.up(i, t));
    }
    const Index flat = ai.shape().flat(i, k);
    const double lk = std::max(lower[flat], top);
    lower.set(flat, lk);
    upper.set(flat, std::max(upper[flat], lk));
  }
  return IntervalTensor(std::move(lower), std::move(upper));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over a combination of both inputs.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Results of one trial, merged in trial order afterwards.
struct TrialOutcome {
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<Counterexample> counterexamples;
  DirectionProbe probe;
};

class TrialRecorder {
 public:
  TrialRecorder(std::size_t trial, const IntervalTensor& ai, TrialOutcome& out) : trial_(trial), ai_(ai), out_(out) {}

  void check(const std::string& property, bool ok, std::vector<std::pair<std::string, std::string>> verdicts) {
    out_.checks.emplace_back(property, ok);
    if (!ok) out_.counterexamples.push_back({property, trial_, ai_, std::move(verdicts)});
  }

 private:
  std::size_t trial_;
  const IntervalTensor& ai_;
  TrialOutcome& out_;
};

// Sub-box with each end moved inward by 0, 1/4 or 1/2 of the width.
IntervalTensor shrink(const IntervalTensor& ai, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> quarter(0, 2);
  std::vector<double> lo(ai.size()), up(ai.size());
  for (Index p = 0; p < ai.size(); ++p) {
    const double l = ai.lower()[p];
    const double w = ai.upper()[p] - l;
    lo[p] = l + w * quarter(rng) / 4.0;
    up[p] = std::max(lo[p], ai.upper()[p] - w * quarter(rng) / 4.0);
  }
  return IntervalTensor(Tensor(ai.shape(), std::move(lo)), Tensor(ai.shape(), std::move(up)));
}

IntervalTensor raise_upper_diagonal(const IntervalTensor& ai, double by) {
  Tensor upper = ai.upper();
  for (Index i = 0; i < ai.dim(); ++i) {
    const Index p = ai.shape().flat(i, ai.shape().diag_tail(i));
    upper.set(p, upper[p] + by);
  }
  return IntervalTensor(ai.lower(), std::move(upper));
}

// Same random row assignment applied to the lower bounds and to the upper
// bounds of `parents`.
IntervalTensor random_row_mix(const std::vector<IntervalTensor>& parents, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const IntervalTensor& first = parents.front();
  std::vector<RowSource> rows(first.dim());
  std::uniform_int_distribution<Index> pick(0, parents.size() - 1);
  for (auto& r : rows) {
    r.parent = pick(rng);
    r.permutation.resize(first.row_size() - 1);
    for (Index k = 0; k < r.permutation.size(); ++k) r.permutation[k] = k;
    std::shuffle(r.permutation.begin(), r.permutation.end(), rng);
  }
  std::vector<Tensor> lowers, uppers;
  for (const auto& p : parents) {
    lowers.push_back(p.lower());
    uppers.push_back(p.upper());
  }
  return IntervalTensor(row_mix(lowers, rows), row_mix(uppers, rows));
}

void run_general_trial(const SuiteConfig& cfg, std::size_t trial, TrialOutcome& out) {
  const std::uint64_t seed = derive_seed(cfg.seed, trial);
  GeneratorSpec spec;
  spec.order = cfg.order;
  spec.dim = cfg.dim;
  spec.structure = cfg.structure;
  spec.seed = seed;
  IntervalTensor ai = random_interval_tensor(spec);
  bool manufactured = false;
  if (cfg.manufacture_boundary && cfg.structure == Structure::General && trial % 3 == 2) {
    if (auto b = manufacture_boundary(ai, (trial / 3) % cfg.dim)) {
      ai = std::move(*b);
      manufactured = true;
    }
  }
  TrialRecorder rec(trial, ai, out);
  const CheckOptions quiet{};
  OracleOptions oopt;
  oopt.budget = cfg.vertex_budget;
  oopt.interior_members = cfg.members;
  oopt.member_seed = seed;

  const Verdict ib = check_interval_b(ai, IntervalBMethod::Theorem);
  const Verdict idb = check_interval_double_b(ai);
  const Verdict ob = oracle_interval_b(ai, oopt);
  const Verdict odb = oracle_interval_double_b(ai, oopt);
  const bool b = ib.holds();
  const bool db = idb.holds();

  rec.check("oracle-b", ib.status == ob.status, {{"theorem", status_of(ib)}, {"oracle", status_of(ob)}});
  rec.check("oracle-double-b", idb.status == odb.status, {{"theorem", status_of(idb)}, {"oracle", status_of(odb)}});

  {
    std::vector<std::pair<std::string, std::string>> seen;
    bool same = true;
    for (auto m : {IntervalBMethod::Theorem, IntervalBMethod::Compact, IntervalBMethod::Slack, IntervalBMethod::Pairwise}) {
      const auto v = check_interval_b(ai, m, quiet);
      same = same && v.status == ib.status;
      seen.emplace_back(method_name(m), status_of(v));
    }
    rec.check("interval-b-methods", same, seen);
  }
  {
    const Tensor member = random_member(ai, seed ^ 0x1u);
    const std::pair<const char*, const Tensor*> tensors[] = {{"lower", &ai.lower()}, {"upper", &ai.upper()}, {"member", &member}};
    bool same = true;
    std::vector<std::pair<std::string, std::string>> seen;
    for (const auto& [label, t] : tensors) {
      const auto ref = check_b(*t, BMethod::Definition, quiet).status;
      for (auto m : {BMethod::Definition, BMethod::RowsumGamma, BMethod::Slack}) {
        const auto s = check_b(*t, m, quiet).status;
        same = same && s == ref;
        seen.emplace_back(std::string(label) + "/" + method_name(m), status_name(s));
      }
    }
    rec.check("point-b-methods", same, seen);
  }
  if (b) {
    rec.check("b-implies-vertices", ob.holds() && odb.holds(),
              {{"interval-b", status_of(ib)}, {"oracle-b", status_of(ob)}, {"oracle-double-b", status_of(odb)}});
    const auto nec = interval_b_necessary(ai, quiet);
    rec.check("necessary-b", nec.holds(), {{"interval-b", status_of(ib)}, {"necessary", status_of(nec)}});
    bool members_ok = true;
    for (std::size_t k = 0; k < cfg.members && members_ok; ++k) {
      const Tensor m = random_member(ai, derive_seed(seed ^ 0x2u, k));
      members_ok = check_b(m, BMethod::Definition, quiet).holds() && check_double_b(m, quiet).holds();
    }
    rec.check("members-b", members_ok, {{"interval-b", status_of(ib)}, {"members", members_ok ? "pass" : "fail"}});
    // Both parents are interval B: the instance and a sub-box of it.
    const auto mixed = check_interval_b(random_row_mix({ai, shrink(ai, seed ^ 0x3u)}, seed ^ 0x5u), IntervalBMethod::Theorem, quiet);
    rec.check("row-mix", mixed.holds(), {{"interval-b", status_of(ib)}, {"row-mix", status_of(mixed)}});
  }
  if (db) {
    const auto ext = interval_double_b_necessary(ai, NecessaryVariant::Extremes, quiet);
    rec.check("necessary-double-b-extremes", ext.holds(), {{"double-b", status_of(idb)}, {"extremes", status_of(ext)}});
    const auto rm = interval_double_b_necessary(ai, NecessaryVariant::Rowmax, quiet);
    rec.check("necessary-double-b-rowmax", rm.holds(), {{"double-b", status_of(idb)}, {"rowmax", status_of(rm)}});
  }
  {
    const auto hat = check_interval_double_b_hat_sufficient(ai, quiet);
    if (hat.holds()) rec.check("hat-implies-double-b", db, {{"hat", status_of(hat)}, {"double-b", status_of(idb)}});
  }
  {
    const auto red = reduce_via_K(ai).reduced;
    const auto rb = check_interval_b(red, IntervalBMethod::Theorem, quiet);
    const auto rdb = check_interval_double_b(red, quiet);
    rec.check("k-reduction", rb.status == ib.status && rdb.status == idb.status,
              {{"b", status_of(ib)}, {"b-reduced", status_of(rb)}, {"double-b", status_of(idb)}, {"double-b-reduced", status_of(rdb)}});
  }
  {
    const auto raised = raise_upper_diagonal(ai, 1.0);
    const auto rb = check_interval_b(raised, IntervalBMethod::Theorem, quiet);
    const auto rdb = check_interval_double_b(raised, quiet);
    rec.check("diagonal-irrelevance", rb.status == ib.status && rdb.status == idb.status,
              {{"b", status_of(ib)}, {"b-raised", status_of(rb)}, {"double-b", status_of(idb)}, {"double-b-raised", status_of(rdb)}});
  }
  {
    const auto inner = shrink(ai, seed ^ 0x4u);
    const auto sb = check_interval_b(inner, IntervalBMethod::Theorem, quiet);
    const auto sdb = check_interval_double_b(inner, quiet);
    rec.check("containment", (!b || sb.holds()) && (!db || sdb.holds()),
              {{"outer-b", status_of(ib)}, {"inner-b", status_of(sb)}, {"outer-double-b", status_of(idb)}, {"inner-double-b", status_of(sdb)}});
  }
  {
    const auto dich = classify_interval_double_b_dichotomy(ai, quiet);
    using K = IntervalDichotomy::Kind;
    const bool consistent = dich.kind == K::NotDoubleB ? !db
                            : dich.kind == K::IntervalB ? (db && b)
                                                        : (db && !b && !dich.failing_rows.empty());
    rec.check("dichotomy", consistent, {{"dichotomy", dichotomy_name(dich.kind)}, {"b", status_of(ib)}, {"double-b", status_of(idb)}});
    if (dich.failing_rows.size() > 1) ++out.probe.dichotomy_anomalies;
  }
  if (is_interval_z(ai)) {
    const auto zb = check_interval_b_zfast(ai, quiet);
    const auto zdb = check_interval_double_b_zfast(ai, quiet);
    rec.check("zfast-b", zb.status == ib.status, {{"zfast", status_of(zb)}, {"theorem", status_of(ib)}});
    rec.check("zfast-double-b", zdb.status == idb.status, {{"zfast", status_of(zdb)}, {"theorem", status_of(idb)}});
  }
  if (is_circulant(ai.lower()) && is_circulant(ai.upper())) {
    const auto c = check_interval_circulant(ai, quiet);
    rec.check("circulant-b", c.status == ib.status, {{"circulant", status_of(c)}, {"interval-b", status_of(ib)}});
    rec.check("circulant-double-b", c.status == idb.status, {{"circulant", status_of(c)}, {"double-b", status_of(idb)}});
  }

  auto& pr = out.probe;
  pr.interval_b += b;
  pr.interval_double_b += db;
  if (db && !b) {
    ++pr.double_b_not_b;
    pr.first_double_b_not_b = trial;
  }
  pr.b_not_double_b += b && !db;
  pr.manufactured += manufactured;
  pr.manufactured_double_b_not_b += manufactured && db && !b;
}

void run_dominance_trial(const SuiteConfig& cfg, std::size_t trial, TrialOutcome& out) {
  const std::uint64_t seed = derive_seed(cfg.seed, trial);
  GeneratorSpec spec;
  spec.order = cfg.order;
  spec.dim = cfg.dim;
  spec.structure = cfg.structure;
  spec.seed = seed;
  const IntervalTensor ai = impose_dominance(random_interval_tensor(spec), seed ^ 0x6u);
  TrialRecorder rec(trial, ai, out);
  const auto dom = check_interval_double_b_dominance(ai);
  if (dom.status == Status::Inconclusive) return;
  const auto idb = check_interval_double_b(ai);
  rec.check("dominance", dom.status == idb.status, {{"dominance", status_of(dom)}, {"double-b", status_of(idb)}});
  out.probe.interval_double_b += idb.holds();
}

void merge_probe(DirectionProbe& into, const DirectionProbe& p) {
  into.interval_b += p.interval_b;
  into.interval_double_b += p.interval_double_b;
  if (p.double_b_not_b > 0 && !into.first_double_b_not_b) into.first_double_b_not_b = p.first_double_b_not_b;
  into.double_b_not_b += p.double_b_not_b;
  into.b_not_double_b += p.b_not_double_b;
  into.manufactured += p.manufactured;
  into.manufactured_double_b_not_b += p.manufactured_double_b_not_b;
  into.dichotomy_anomalies += p.dichotomy_anomalies;
}

template <class Trial>
SuiteReport run_suite(std::string name, const SuiteConfig& cfg, std::size_t count, Trial&& trial) {
  std::vector<TrialOutcome> outcomes(count);
  parallel_for(count, [&](std::size_t t) { trial(t, outcomes[t]); });
  SuiteReport report;
  report.suite = std::move(name);
  report.config = cfg;
  report.trials = count;
  for (auto& o : outcomes) {
    for (const auto& [prop, ok] : o.checks) {
      auto& tally = report.properties[prop];
      ++tally.applicable;
      tally.agreements += ok;
    }
    for (auto& c : o.counterexamples) report.counterexamples.push_back(std::move(c));
    merge_probe(report.probe, o.probe);
  }
  return report;
}

}  // namespace

SuiteReport equivalence_suite(const SuiteConfig& config) {
  GeneratorSpec probe_spec;
  probe_spec.order = config.order;
  probe_spec.dim = config.dim;
  probe_spec.structure = config.structure;
  probe_spec.validate();
  require_vertex_budget(random_interval_tensor(probe_spec), config.vertex_budget);
  return run_suite(std::string("equivalence/") + structure_name(config.structure), config, config.trials,
                   [&](std::size_t t, TrialOutcome& out) { run_general_trial(config, t, out); });
}

SuiteReport dominance_suite(const SuiteConfig& config) {
  return run_suite("dominance", config, config.trials,
                   [&](std::size_t t, TrialOutcome& out) { run_dominance_trial(config, t, out); });
}

SuiteReport interval_p_suite(const PSuiteConfig& config) {
  if (config.order % 2 != 0) throw InputError("interval_p_suite: order must be even");
  GeneratorSpec spec;
  spec.order = config.order;
  spec.dim = config.dim;
  spec.diag = {4.0, 16.0};
  spec.offdiag = {-1.0, 1.0};
  spec.radius_scale = 0.25;
  spec.structure = Structure::Symmetric;

  std::vector<IntervalTensor> accepted;
  std::size_t attempt = 0;
  for (; accepted.size() < config.instances && attempt < config.instances * config.max_attempts; ++attempt) {
    spec.seed = derive_seed(config.seed, attempt);
    auto ai = random_interval_tensor(spec);
    if (is_symmetric_interval(ai) && check_interval_b(ai, IntervalBMethod::Theorem).holds()) {
      accepted.push_back(std::move(ai));
    }
  }
  SuiteConfig cfg;
  cfg.trials = accepted.size();
  cfg.seed = config.seed;
  cfg.order = config.order;
  cfg.dim = config.dim;
  cfg.structure = Structure::Symmetric;
  cfg.manufacture_boundary = false;
  cfg.members = config.members;

  auto report = run_suite("interval-p", cfg, accepted.size(), [&](std::size_t t, TrialOutcome& out) {
    const IntervalTensor& ai = accepted[t];
    TrialRecorder rec(t, ai, out);
    const std::uint64_t seed = derive_seed(config.seed ^ 0x7u, t);
    const auto suff = interval_p_sufficient(ai);
    rec.check("p-sufficient", suff.holds(), {{"interval-p-sufficient", status_of(suff)}});

    std::vector<std::pair<std::string, Tensor>> members;
    for (std::size_t k = 0; k < config.members; ++k) {
      members.emplace_back("member " + std::to_string(k), random_member(ai, derive_seed(seed, k)));
    }
    const Index n = ai.dim();
    std::vector<int> z(n);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      for (Index k = 0; k < n; ++k) z[k] = (s >> k) & 1u ? -1 : 1;
      members.emplace_back("sign vertex " + std::to_string(s), sign_vertex(ai, z));
    }
    std::vector<std::pair<std::string, std::string>> falsified;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto res = falsify_p(members[k].second, config.falsify_budget, derive_seed(seed ^ 0x8u, k));
      if (res.falsified) falsified.emplace_back(members[k].first, "max product " + std::to_string(res.max_product.value_or(0.0)));
    }
    rec.check("p-falsify", falsified.empty(), falsified);
    out.probe.interval_b += 1;
  });
  if (accepted.size() < config.instances) {
    // Too few accepted instances is itself a failure of the suite.
    report.properties["p-instances"] = {1, 0};
  } else {
    report.properties["p-instances"] = {1, 1};
  }
  return report;
}

SuiteReport merge_reports(std::string name, const std::vector<SuiteReport>& parts) {
  SuiteReport out;
  out.suite = std::move(name);
  if (!parts.empty()) out.config = parts.front().config;
  for (const auto& p : parts) {
    out.trials += p.trials;
    for (const auto& [id, t] : p.properties) {
      out.properties[id].applicable += t.applicable;
      out.properties[id].agreements += t.agreements;
    }
    out.counterexamples.insert(out.counterexamples.end(), p.counterexamples.begin(), p.counterexamples.end());
    merge_probe(out.probe, p.probe);
  }
  return out;
}

}  // namespace itensor
