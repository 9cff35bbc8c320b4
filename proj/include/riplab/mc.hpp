#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riplab/bounds.hpp"
#include "riplab/family.hpp"
#include "riplab/rng.hpp"
#include "riplab/shatter.hpp"

namespace riplab {

struct ExperimentConfig {
  FieldParams params;
  std::uint32_t d = 1;  // k = p^d
  std::uint64_t k = 2;
  std::uint64_t q = 0;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;

  /// Validates k = p^d with d <= n and trials >= 1.
  static ExperimentConfig make(std::uint32_t p, std::uint32_t n, std::uint64_t k, std::uint64_t q,
                               std::uint64_t trials, std::uint64_t master_seed);
};

/// Two-sided distribution-free 99% half-width sqrt(ln(2/0.01)/(2 trials)).
double hoeffding_halfwidth(std::uint64_t trials);

struct TrialSummary {
  std::uint64_t event_count = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double ci_halfwidth = 0.0;
  std::vector<BoundValue> bounds;
  bool verdict = false;
  std::string note;
  // Certificate spot checks (family experiments only).
  std::uint64_t cert_checks = 0;
  double cert_max_residual = 0.0;
};

/// q uniform rows of F_p^n, with replacement.
SampleSeq draw_rows(const FieldParams& params, std::uint64_t q, Rng& rng);

/// Estimates Pr[Q does not shatter V] for the fixed coordinate subspace
/// span{e_1..e_d} (the uniform row distribution makes the statistics
/// subspace-invariant). Verdict: estimate + ci >= the closed-form lower bound
/// and |estimate - exact probability| <= ci.
TrialSummary mc_single_subspace(const ExperimentConfig& config);
TrialSummary mc_single_subspace(const ExperimentConfig& config, const Subspace& v);

/// Estimates Pr[Q shatters neither v1 nor v2]. Verdict:
/// estimate - ci <= the closed-form upper bound at m = dim(v1 n v2).
TrialSummary mc_pair_subspaces(const ExperimentConfig& config, const Subspace& v1, const Subspace& v2);

/// Estimates Pr[some family member is unshattered]. Verdict: estimate + ci >=
/// the chain lower bound at ell = family size whenever that bound is positive,
/// and every spot-checked failing trial yields a kernel certificate with
/// ||A_Q x||_2 <= 1e-9 sqrt(q k). The family must pass verify_family.
TrialSummary mc_family_failure(const ExperimentConfig& config, const SubspaceFamily& family);

struct BoostSummary {
  TrialSummary full;   // Pr[some member unshattered by all q rows]
  TrialSummary chunk;  // Pr[some member unshattered by the first q/s rows]
  std::uint64_t split_s = 1;
  double target = 0.0;  // max(0, full.estimate - ci)^(1/s)
  bool verdict = false;
};

/// Splits each length-q sequence into s equal chunks and compares the fixed
/// first-chunk failure rate against the s-th root of the full-sequence
/// failure rate: chunk.estimate + ci >= (full.estimate - ci)^(1/s), the
/// independence argument for boosting the failure probability toward 1.
BoostSummary mc_boost_split(const ExperimentConfig& config, const SubspaceFamily& family, std::uint64_t split_s);

}  // namespace riplab
