#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riplab/mc.hpp"

namespace riplab {

/// One CSV row: a single (experiment, bound) comparison. Experiments carrying
/// several bounds emit several rows sharing the estimate.
struct ResultRow {
  std::string experiment;
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  std::uint64_t k = 2;
  std::uint64_t q = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double ci99 = 0.0;
  std::string bound_kind;
  double bound_value = 0.0;
  bool verdict = false;
};

/// Fixed caveat attached to every report: these runs validate the exact
/// finite-sample formulas; the regime where k grows with N is far out of
/// reach at these sizes.
std::string regime_note();

std::string csv_header();
std::string to_csv_line(const ResultRow& row);
std::string rows_to_csv(const std::vector<ResultRow>& rows);

std::vector<ResultRow> summary_rows(const std::string& experiment, const ExperimentConfig& config,
                                    const TrialSummary& summary);

/// Same fields as the CSV plus the note, and the family / certificate
/// documents when provided.
std::string rows_to_json(const std::vector<ResultRow>& rows,
                         const std::optional<std::string>& family_json = std::nullopt,
                         const std::optional<SparseCertificate>& certificate = std::nullopt);

}  // namespace riplab
