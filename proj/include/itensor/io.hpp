#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "itensor/interval.hpp"
#include "itensor/oracle.hpp"
#include "itensor/tensor.hpp"
#include "itensor/verdict.hpp"

namespace itensor {

/// Insertion-ordered so reports come out byte-identical run to run.
using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InputError naming `source` with
/// line and column.
Json parse_json_text(const std::string& text, const std::string& source);

/// { "order": m, "dim": n, "entries": [n^m numbers, row-major] }
Tensor tensor_from_json(const Json& j);
/// { "order": m, "dim": n, "lower": [...], "upper": [...] }
IntervalTensor interval_from_json(const Json& j);

enum class InputKind { Tensor, Interval };
/// "entries" means a tensor, "lower"/"upper" an interval.
InputKind detect_kind(const Json& j);

Json to_json(const Tensor& a);
Json to_json(const IntervalTensor& ai);

/// Rows and tail digits are reported 1-based; "index" is the tail.
Json verdict_to_json(const Verdict& v, const Shape& shape, const std::string& class_id);

Json suite_report_to_json(const SuiteReport& r);

/// Multi-line human summary of a verdict.
std::string verdict_summary(const Verdict& v, const Shape& shape, const std::string& class_id);

/// 17 significant digits.
std::string format_number(double x);

std::string sha256_hex(std::string_view bytes);

/// Whole file; InputError if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace itensor
