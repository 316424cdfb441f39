#include "pfgr/report.hpp"

#include <algorithm>
#include <sstream>

namespace pfgr {

using json = nlohmann::ordered_json;

namespace {

constexpr ErrorKind kAllKinds[] = {
    ErrorKind::NonExactDivision, ErrorKind::NegativeCoefficient, ErrorKind::InvalidParameter,
    ErrorKind::AmbientMismatch,  ErrorKind::NonIntegralGenus,    ErrorKind::InconsistentEuler,
    ErrorKind::IdentityFailure,  ErrorKind::OutOfSmoothRange,    ErrorKind::NegativeDimension,
    ErrorKind::NotInLemmaRange,  ErrorKind::ParseError,          ErrorKind::EvalError,
    ErrorKind::CacheError,
};

ErrorKind error_kind_from_string(const std::string& s) {
  for (ErrorKind k : kAllKinds)
    if (to_string(k) == s) return k;
  throw Error(ErrorKind::InvalidParameter, "unknown error kind '" + s + "'");
}

template <class Enum, std::size_t N>
Enum enum_from_string(const std::string& s, const Enum (&values)[N]) {
  for (Enum v : values)
    if (to_string(v) == s) return v;
  throw Error(ErrorKind::InvalidParameter, "unknown enum value '" + s + "'");
}

constexpr NLStatus kNL[] = {NLStatus::Satisfied, NLStatus::Unknown};
constexpr MainTheoremStatus kMain[] = {MainTheoremStatus::Applies, MainTheoremStatus::NotCovered,
                                       MainTheoremStatus::HypothesisFails};
constexpr TranscendentalBasis kBasis[] = {TranscendentalBasis::Unconditional, TranscendentalBasis::ConditionalOnNL};
constexpr CheckStatus kStatus[] = {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skip};

json dense_to_json(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(integer_to_json(c));
  return out;
}

std::vector<mpz_class> dense_from_json(const json& j) {
  std::vector<mpz_class> out;
  for (const auto& c : j) out.push_back(integer_from_json(c));
  return out;
}

std::string betti_list(const TPoly& p) {
  std::string out;
  for (const auto& c : p.dense()) out += (out.empty() ? "" : " ") + c.get_str();
  return out.empty() ? "0" : out;
}

std::string join(const std::vector<mpz_class>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].get_str();
  return out;
}

std::string checks_string(const std::set<std::string>& checks) {
  if (checks.empty()) return "all";
  std::string out;
  for (const auto& c : checks) out += (out.empty() ? "" : ",") + c;
  return out;
}

long count_status(const PairReport& r, CheckStatus s) {
  return std::count_if(r.checks.begin(), r.checks.end(), [s](const CheckResult& c) { return c.status == s; });
}

std::string csv_header() {
  return "n,k,dim_x,dim_y,poincare_x,poincare_y,variable_betti,euler_char,middle_hodge,nl_status,main_theorem,"
         "main_theorem_basis,pass,fail,skip,error\n";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_row(int n, int k, const PairReport* r, const RowError* e) {
  std::ostringstream os;
  os << n << "," << k << ",";
  if (r) {
    os << r->pair.dim_x << "," << r->pair.dim_y << "," << betti_list(r->poincare_x) << ","
       << betti_list(r->poincare_y) << "," << r->variable_betti.get_str() << "," << r->hodge.euler_char.get_str()
       << "," << join(r->hodge.middle_hodge, " ") << "," << to_string(r->nl_status) << ","
       << to_string(r->main_theorem) << "," << to_string(r->main_theorem_basis) << ","
       << count_status(*r, CheckStatus::Pass) << "," << count_status(*r, CheckStatus::Fail) << ","
       << count_status(*r, CheckStatus::Skip) << ",";
  } else {
    os << ",,,,,,,,,,,,,";
  }
  if (e) os << csv_quote(std::string(to_string(e->kind)) + ": " + e->message);
  os << "\n";
  return os.str();
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "markdown" || s == "md") return OutputFormat::Markdown;
  if (s == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::InvalidParameter, "unknown output format '" + s + "'");
}

void validate(const GridRequest& r) {
  auto bad = [](const std::string& m) { throw Error(ErrorKind::InvalidParameter, m); };
  if (r.n_min > r.n_max) bad("empty n range");
  if (r.k_min > r.k_max) bad("empty k range");
  if (r.n_min < 4) bad("n must be >= 4");
  if (r.k_min < 1) bad("k must be >= 1");
  if (r.jobs < 1) bad("jobs must be >= 1");
  const auto& known = registered_checks();
  for (const auto& c : r.checks)
    if (std::find(known.begin(), known.end(), c) == known.end()) bad("unknown check '" + c + "'");
}

GridSummary summarize(const std::vector<GridRow>& rows) {
  GridSummary s;
  for (const auto& row : rows) {
    ++s.rows;
    if (row.error) ++s.errors;
    if (!row.report) continue;
    s.pass += count_status(*row.report, CheckStatus::Pass);
    s.fail += count_status(*row.report, CheckStatus::Fail);
    s.skip += count_status(*row.report, CheckStatus::Skip);
  }
  return s;
}

json integer_to_json(const mpz_class& x) {
  static const mpz_class safe("9007199254740991");
  if (abs(x) <= safe) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw Error(ErrorKind::InvalidParameter, "expected an integer, got " + j.dump());
}

json to_json(const PairReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"diagnostic", c.diagnostic}});
  json findings = json::array();
  for (const auto& f : r.findings) findings.push_back({{"id", f.id}, {"message", f.message}});
  return {
      {"schema_version", kSchemaVersion},
      {"pair",
       {{"n", r.pair.n},
        {"k", r.pair.k},
        {"dim_x", r.pair.dim_x},
        {"dim_y", r.pair.dim_y},
        {"s", r.pair.s},
        {"m", r.pair.m},
        {"smooth_range", r.pair.smooth_range}}},
      {"poincare_x", dense_to_json(r.poincare_x.dense())},
      {"poincare_y", dense_to_json(r.poincare_y.dense())},
      {"variable_betti", integer_to_json(r.variable_betti)},
      {"hodge",
       {{"dimension", r.hodge.dimension},
        {"euler_char", integer_to_json(r.hodge.euler_char)},
        {"chi_y", dense_to_json(r.hodge.chi_y.dense())},
        {"middle_betti", integer_to_json(r.hodge.middle_betti)},
        {"middle_hodge", dense_to_json(r.hodge.middle_hodge)}}},
      {"nl_status", to_string(r.nl_status)},
      {"main_theorem", to_string(r.main_theorem)},
      {"main_theorem_basis", to_string(r.main_theorem_basis)},
      {"checks", checks},
      {"findings", findings},
  };
}

PairReport pair_report_from_json(const json& j) {
  try {
    PairReport r;
    const auto& p = j.at("pair");
    r.pair.n = p.at("n");
    r.pair.k = p.at("k");
    r.pair.dim_x = p.at("dim_x");
    r.pair.dim_y = p.at("dim_y");
    r.pair.s = p.at("s");
    r.pair.m = p.at("m");
    r.pair.smooth_range = p.at("smooth_range");
    r.poincare_x = TPoly::from_dense(dense_from_json(j.at("poincare_x")));
    r.poincare_y = TPoly::from_dense(dense_from_json(j.at("poincare_y")));
    r.variable_betti = integer_from_json(j.at("variable_betti"));
    const auto& h = j.at("hodge");
    r.hodge.dimension = h.at("dimension");
    r.hodge.euler_char = integer_from_json(h.at("euler_char"));
    r.hodge.chi_y = YPoly::from_dense(dense_from_json(h.at("chi_y")));
    r.hodge.middle_betti = integer_from_json(h.at("middle_betti"));
    r.hodge.middle_hodge = dense_from_json(h.at("middle_hodge"));
    r.nl_status = enum_from_string(j.at("nl_status").get<std::string>(), kNL);
    r.main_theorem = enum_from_string(j.at("main_theorem").get<std::string>(), kMain);
    r.main_theorem_basis = enum_from_string(j.at("main_theorem_basis").get<std::string>(), kBasis);
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name"), enum_from_string(c.at("status").get<std::string>(), kStatus), c.at("diagnostic")});
    for (const auto& f : j.at("findings")) r.findings.push_back({f.at("id"), f.at("message")});
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidParameter, std::string("malformed pair report: ") + e.what());
  }
}

json to_json(const GridReport& g) {
  json rows = json::array();
  for (const auto& row : g.rows) {
    json r = {{"n", row.n}, {"k", row.k}};
    if (row.report) r["report"] = to_json(*row.report);
    if (row.error) r["error"] = {{"kind", to_string(row.error->kind)}, {"message", row.error->message}};
    rows.push_back(std::move(r));
  }
  json checks = json::array();
  for (const auto& c : g.request.checks) checks.push_back(c);
  return {
      {"schema_version", kSchemaVersion},
      {"request",
       {{"n_min", g.request.n_min},
        {"n_max", g.request.n_max},
        {"k_min", g.request.k_min},
        {"k_max", g.request.k_max},
        {"checks", checks}}},
      {"rows", rows},
      {"summary",
       {{"rows", g.summary.rows},
        {"pass", g.summary.pass},
        {"fail", g.summary.fail},
        {"skip", g.summary.skip},
        {"errors", g.summary.errors}}},
  };
}

GridReport grid_report_from_json(const json& j) {
  try {
    GridReport g;
    const auto& q = j.at("request");
    g.request.n_min = q.at("n_min");
    g.request.n_max = q.at("n_max");
    g.request.k_min = q.at("k_min");
    g.request.k_max = q.at("k_max");
    for (const auto& c : q.at("checks")) g.request.checks.insert(c.get<std::string>());
    for (const auto& r : j.at("rows")) {
      GridRow row;
      row.n = r.at("n");
      row.k = r.at("k");
      if (r.contains("report")) row.report = pair_report_from_json(r.at("report"));
      if (r.contains("error"))
        row.error = RowError{error_kind_from_string(r.at("error").at("kind")), r.at("error").at("message")};
      g.rows.push_back(std::move(row));
    }
    const auto& s = j.at("summary");
    g.summary = {s.at("rows"), s.at("pass"), s.at("fail"), s.at("skip"), s.at("errors")};
    return g;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidParameter, std::string("malformed grid report: ") + e.what());
  }
}

std::string render(const PairReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(r).dump(2) + "\n";
  if (format == OutputFormat::Csv) return csv_header() + csv_row(r.pair.n, r.pair.k, &r, nullptr);

  std::ostringstream os;
  os << "# Pfaffian-Grassmannian pair (n, k) = (" << r.pair.n << ", " << r.pair.k << ")\n\n";
  os << "| quantity | value |\n|---|---|\n";
  os << "| dim X | " << r.pair.dim_x << " |\n";
  os << "| dim Y | " << r.pair.dim_y << " |\n";
  os << "| s | " << r.pair.s << " |\n";
  os << "| m | " << r.pair.m << " |\n";
  os << "| Betti X | " << betti_list(r.poincare_x) << " |\n";
  os << "| Betti Y | " << betti_list(r.poincare_y) << " |\n";
  os << "| b_" << r.pair.dim_x << "(X) | " << r.poincare_x.coefficient(static_cast<unsigned>(r.pair.dim_x)).get_str()
     << " |\n";
  os << "| variable Betti | " << r.variable_betti.get_str() << " |\n";
  os << "| chi(X) | " << r.hodge.euler_char.get_str() << " |\n";
  os << "| chi_y(X) | " << r.hodge.chi_y.to_string() << " |\n";
  os << "| middle Hodge | " << join(r.hodge.middle_hodge, ", ") << " |\n";
  os << "| NL | " << to_string(r.nl_status) << " |\n";
  os << "| main theorem | " << to_string(r.main_theorem) << " (" << to_string(r.main_theorem_basis) << ") |\n";
  os << "\n## Checks\n\n| check | status | diagnostic |\n|---|---|---|\n";
  for (const auto& c : r.checks)
    os << "| " << c.name << " | " << to_string(c.status) << " | " << md_escape(c.diagnostic) << " |\n";
  if (!r.findings.empty()) {
    os << "\n## Findings\n\n";
    for (const auto& f : r.findings) os << "- **" << f.id << "**: " << f.message << "\n";
  }
  return os.str();
}

std::string render(const GridReport& g, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(g).dump(2) + "\n";
  if (format == OutputFormat::Csv) {
    std::string out = csv_header();
    for (const auto& row : g.rows)
      out += csv_row(row.n, row.k, row.report ? &*row.report : nullptr, row.error ? &*row.error : nullptr);
    return out;
  }
  std::ostringstream os;
  os << "# Grid n in [" << g.request.n_min << ", " << g.request.n_max << "], k in [" << g.request.k_min << ", "
     << g.request.k_max << "], checks: " << checks_string(g.request.checks) << "\n\n";
  os << "| n | k | dim X | dim Y | Betti X | Betti Y | var | chi | NL | main theorem | pass | fail | skip |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : g.rows) {
    os << "| " << row.n << " | " << row.k << " | ";
    if (row.report) {
      const auto& r = *row.report;
      os << r.pair.dim_x << " | " << r.pair.dim_y << " | " << betti_list(r.poincare_x) << " | "
         << betti_list(r.poincare_y) << " | " << r.variable_betti.get_str() << " | " << r.hodge.euler_char.get_str()
         << " | " << to_string(r.nl_status) << " | " << to_string(r.main_theorem) << " | "
         << count_status(r, CheckStatus::Pass) << " | " << count_status(r, CheckStatus::Fail) << " | "
         << count_status(r, CheckStatus::Skip) << " |\n";
    } else {
      os << "error: " << md_escape(row.error ? row.error->message : "") << " | | | | | | | | | | |\n";
    }
  }
  os << "\n**Summary**: " << g.summary.rows << " rows, " << g.summary.pass << " pass, " << g.summary.fail
     << " fail, " << g.summary.skip << " skip, " << g.summary.errors << " errors\n";
  std::vector<std::string> seen;
  for (const auto& row : g.rows)
    if (row.report)
      for (const auto& f : row.report->findings)
        if (std::find(seen.begin(), seen.end(), f.id + f.message) == seen.end()) {
          if (seen.empty()) os << "\n## Findings\n\n";
          seen.push_back(f.id + f.message);
          os << "- (" << row.n << "," << row.k << ") **" << f.id << "**: " << f.message << "\n";
        }
  return os.str();
}

bool operator==(const PairReport& a, const PairReport& b) {
  return a.pair == b.pair && a.poincare_x == b.poincare_x && a.poincare_y == b.poincare_y &&
         a.variable_betti == b.variable_betti && a.hodge.dimension == b.hodge.dimension &&
         a.hodge.euler_char == b.hodge.euler_char && a.hodge.chi_y == b.hodge.chi_y &&
         a.hodge.middle_betti == b.hodge.middle_betti && a.hodge.middle_hodge == b.hodge.middle_hodge &&
         a.nl_status == b.nl_status && a.main_theorem == b.main_theorem &&
         a.main_theorem_basis == b.main_theorem_basis && a.checks == b.checks && a.findings == b.findings;
}

bool operator==(const GridRow& a, const GridRow& b) {
  return a.n == b.n && a.k == b.k && a.report == b.report && a.error == b.error;
}

}  // namespace pfgr
