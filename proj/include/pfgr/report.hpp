#pragma once

// Serialization of pair and grid reports: JSON (lossless), markdown, CSV.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "pfgr/pfaffian.hpp"

namespace pfgr {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Json, Markdown, Csv };
OutputFormat parse_output_format(const std::string& s);

struct GridRequest {
  int n_min = 4;
  int n_max = 12;
  int k_min = 1;
  int k_max = 10;
  std::set<std::string> checks;  // empty: all registered checks
  OutputFormat format = OutputFormat::Json;
  int jobs = 1;
};

// Throws InvalidParameter for empty ranges, n < 4, k < 1, jobs < 1 or
// unknown check names.
void validate(const GridRequest& request);

struct RowError {
  ErrorKind kind = ErrorKind::InvalidParameter;
  std::string message;

  friend bool operator==(const RowError&, const RowError&) = default;
};

struct GridRow {
  int n = 0;
  int k = 0;
  std::optional<PairReport> report;
  std::optional<RowError> error;
};

struct GridSummary {
  long rows = 0;
  long pass = 0;
  long fail = 0;
  long skip = 0;
  long errors = 0;

  friend bool operator==(const GridSummary&, const GridSummary&) = default;
};

struct GridReport {
  GridRequest request;
  std::vector<GridRow> rows;
  GridSummary summary;
};

GridSummary summarize(const std::vector<GridRow>& rows);

// Exact integers: JSON numbers inside the 53-bit safe range, decimal strings
// outside it.
nlohmann::ordered_json integer_to_json(const mpz_class& x);
mpz_class integer_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const PairReport& r);
PairReport pair_report_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const GridReport& g);
GridReport grid_report_from_json(const nlohmann::ordered_json& j);

std::string render(const PairReport& r, OutputFormat format);
std::string render(const GridReport& g, OutputFormat format);

bool operator==(const PairReport& a, const PairReport& b);
bool operator==(const GridRow& a, const GridRow& b);

}  // namespace pfgr
