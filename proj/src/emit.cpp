#include "riplab/emit.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace riplab {

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

}  // namespace

std::string regime_note() {
  return "finite-sample validation only: these parameters are far below the regime "
         "where k grows with N, so the asymptotic row-count statement is not being tested";
}

std::string csv_header() { return "experiment,p,n,k,q,trials,seed,estimate,ci99,bound_kind,bound_value,verdict"; }

std::string to_csv_line(const ResultRow& row) {
  std::ostringstream out;
  out << row.experiment << ',' << row.p << ',' << row.n << ',' << row.k << ',' << row.q << ','
      << row.trials << ',' << row.seed << ',' << format_double(row.estimate) << ','
      << format_double(row.ci99) << ',' << row.bound_kind << ',' << format_double(row.bound_value)
      << ',' << (row.verdict ? "pass" : "fail");
  return out.str();
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& row : rows) out << to_csv_line(row) << '\n';
  return out.str();
}

std::vector<ResultRow> summary_rows(const std::string& experiment, const ExperimentConfig& config,
                                    const TrialSummary& summary) {
  std::vector<ResultRow> rows;
  rows.reserve(summary.bounds.size());
  for (const BoundValue& bound : summary.bounds) {
    ResultRow row;
    row.experiment = experiment;
    row.p = config.params.p;
    row.n = config.params.n;
    row.k = config.k;
    row.q = config.q;
    row.trials = summary.trials;
    row.seed = config.master_seed;
    row.estimate = summary.estimate;
    row.ci99 = summary.ci_halfwidth;
    row.bound_kind = std::string(to_string(bound.kind));
    row.bound_value = bound.value;
    row.verdict = summary.verdict;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string rows_to_json(const std::vector<ResultRow>& rows,
                         const std::optional<std::string>& family_json,
                         const std::optional<SparseCertificate>& certificate) {
  nlohmann::json doc;
  doc["note"] = regime_note();
  auto results = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["experiment"] = row.experiment;
    r["p"] = row.p;
    r["n"] = row.n;
    r["k"] = row.k;
    r["q"] = row.q;
    r["trials"] = row.trials;
    r["seed"] = row.seed;
    r["estimate"] = row.estimate;
    r["ci99"] = row.ci99;
    r["bound_kind"] = row.bound_kind;
    r["bound_value"] = row.bound_value;
    r["verdict"] = row.verdict ? "pass" : "fail";
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  if (family_json.has_value()) {
    doc["family"] = nlohmann::json::parse(*family_json);
  }
  if (certificate.has_value()) {
    nlohmann::json cert;
    auto support = nlohmann::json::array();
    for (const auto& s : certificate->support) support.push_back(s.coords);
    cert["support"] = std::move(support);
    auto coeffs = nlohmann::json::array();
    for (const auto& z : certificate->coefficients) {
      coeffs.push_back(nlohmann::json::array({z.real(), z.imag()}));
    }
    cert["coefficients"] = std::move(coeffs);
    doc["certificate"] = std::move(cert);
  }
  return doc.dump(2);
}

}  // namespace riplab
