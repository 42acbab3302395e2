#include "itensor/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "itensor/error.hpp"

namespace itensor {

namespace {

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object at top level");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

long long require_integer(const Json& j, const char* key) {
  const Json& v = require_key(j, key);
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == static_cast<double>(static_cast<long long>(d))) return static_cast<long long>(d);
  }
  throw InputError(std::string("\"") + key + "\" must be an integer");
}

Shape read_shape(const Json& j) {
  const long long m = require_integer(j, "order");
  const long long n = require_integer(j, "dim");
  if (m < 2) throw InputError("\"order\" must be >= 2");
  if (n < 1) throw InputError("\"dim\" must be >= 1");
  Shape s{static_cast<int>(m), static_cast<Index>(n)};
  s.validate();
  return s;
}

std::vector<double> read_entries(const Json& j, const char* key, const Shape& shape) {
  const Json& arr = require_key(j, key);
  if (!arr.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  if (arr.size() != shape.size()) {
    throw InputError(std::string("\"") + key + "\" has " + std::to_string(arr.size()) + " entries, expected " +
                     std::to_string(shape.size()));
  }
  std::vector<double> out(arr.size());
  for (std::size_t p = 0; p < arr.size(); ++p) {
    if (!arr[p].is_number()) {
      throw InputError(std::string("\"") + key + "\" entry " + std::to_string(p + 1) + " is not a number");
    }
    out[p] = arr[p].get<double>();
  }
  return out;
}

Json one_based(const std::vector<Index>& v) {
  Json out = Json::array();
  for (Index x : v) out.push_back(x + 1);
  return out;
}

Json tail_json(const Shape& shape, Index tail) {
  Json out = Json::array();
  for (Index d : shape.tail_digits(tail)) out.push_back(d + 1);
  return out;
}

std::string tail_text(const Shape& shape, Index tail) { return format_index(shape.tail_digits(tail)); }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offsets are 1-based in nlohmann's errors.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Tensor tensor_from_json(const Json& j) {
  const Shape s = read_shape(j);
  return Tensor(s, read_entries(j, "entries", s));
}

IntervalTensor interval_from_json(const Json& j) {
  const Shape s = read_shape(j);
  return IntervalTensor(Tensor(s, read_entries(j, "lower", s)), Tensor(s, read_entries(j, "upper", s)));
}

InputKind detect_kind(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object at top level");
  const bool entries = j.contains("entries");
  const bool bounds = j.contains("lower") || j.contains("upper");
  if (entries && !bounds) return InputKind::Tensor;
  if (bounds && !entries) return InputKind::Interval;
  throw InputError("input must have either \"entries\" or \"lower\"/\"upper\"");
}

Json to_json(const Tensor& a) {
  Json j;
  j["order"] = a.order();
  j["dim"] = a.dim();
  j["entries"] = std::vector<double>(a.entries().begin(), a.entries().end());
  return j;
}

Json to_json(const IntervalTensor& ai) {
  Json j;
  j["order"] = ai.order();
  j["dim"] = ai.dim();
  j["lower"] = std::vector<double>(ai.lower().entries().begin(), ai.lower().entries().end());
  j["upper"] = std::vector<double>(ai.upper().entries().begin(), ai.upper().entries().end());
  return j;
}

Json verdict_to_json(const Verdict& v, const Shape& shape, const std::string& class_id) {
  Json j;
  j["class"] = class_id;
  j["method"] = v.method;
  j["status"] = status_name(v.status);
  if (v.witness) {
    const Witness& w = *v.witness;
    Json wj;
    wj["row"] = w.row + 1;
    if (w.tail) wj["index"] = tail_json(shape, *w.tail);
    if (w.pair_row) wj["pair_row"] = *w.pair_row + 1;
    if (w.pair_tail) wj["pair_index"] = tail_json(shape, *w.pair_tail);
    wj["lhs"] = w.lhs;
    wj["rhs"] = w.rhs;
    wj["relation"] = relation_symbol(w.relation);
    wj["condition"] = w.condition;
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }
  if (!v.conditions.empty()) {
    Json conds = Json::array();
    for (const auto& c : v.conditions) {
      Json cj;
      cj["id"] = c.id;
      cj["rows"] = one_based(c.rows);
      Json tails = Json::array();
      for (Index t : c.tails) tails.push_back(tail_json(shape, t));
      cj["tails"] = std::move(tails);
      cj["lhs"] = c.lhs;
      cj["rhs"] = c.rhs;
      cj["relation"] = relation_symbol(c.relation);
      cj["passed"] = c.passed;
      conds.push_back(std::move(cj));
    }
    j["conditions"] = std::move(conds);
  }
  j["notes"] = v.notes;
  return j;
}

Json suite_report_to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.config.seed;
  j["order"] = r.config.order;
  j["dim"] = r.config.dim;
  j["structure"] = structure_name(r.config.structure);
  j["trials"] = r.trials;
  Json props = Json::object();
  for (const auto& [id, t] : r.properties) {
    props[id] = {{"applicable", t.applicable}, {"agreements", t.agreements},
                 {"counterexamples", t.applicable - t.agreements}};
  }
  j["properties"] = std::move(props);
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    Json verdicts = Json::object();
    for (const auto& [label, value] : c.verdicts) verdicts[label] = value;
    ces.push_back({{"property", c.property}, {"trial", c.trial}, {"instance", to_json(c.instance)},
                   {"verdicts", std::move(verdicts)}});
  }
  j["counterexamples"] = std::move(ces);
  const auto& p = r.probe;
  Json probe;
  probe["interval_b"] = p.interval_b;
  probe["interval_double_b"] = p.interval_double_b;
  probe["double_b_not_b"] = p.double_b_not_b;
  probe["b_not_double_b"] = p.b_not_double_b;
  probe["manufactured"] = p.manufactured;
  probe["manufactured_double_b_not_b"] = p.manufactured_double_b_not_b;
  probe["dichotomy_anomalies"] = p.dichotomy_anomalies;
  probe["double_b_implies_b"] = p.double_b_implies_b_refuted() ? "refuted" : "unrefuted";
  probe["b_implies_double_b"] = p.b_implies_double_b_refuted() ? "refuted" : "unrefuted";
  j["probe"] = std::move(probe);
  return j;
}

std::string format_number(double x) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return buf.data();
}

std::string verdict_summary(const Verdict& v, const Shape& shape, const std::string& class_id) {
  std::ostringstream os;
  os << class_id << " (" << v.method << "): " << status_name(v.status) << "\n";
  if (v.witness) {
    const Witness& w = *v.witness;
    os << "  condition " << w.condition << ", row " << w.row + 1;
    if (w.tail) os << ", tail " << tail_text(shape, *w.tail);
    if (w.pair_row) os << "; row " << *w.pair_row + 1;
    if (w.pair_tail) os << ", tail " << tail_text(shape, *w.pair_tail);
    os << ": " << format_number(w.lhs) << " " << relation_symbol(w.relation) << " " << format_number(w.rhs)
       << " does not hold\n";
  }
  for (const auto& c : v.conditions) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.id << " rows";
    for (Index r : c.rows) os << " " << r + 1;
    for (Index t : c.tails) os << " " << tail_text(shape, t);
    os << ": " << format_number(c.lhs) << " " << relation_symbol(c.relation) << " " << format_number(c.rhs) << "\n";
  }
  for (const auto& n : v.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int k = 0; k < len; ++k) {
    out.push_back(hex[md[k] >> 4]);
    out.push_back(hex[md[k] & 0xf]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace itensor
