#include "riplab/mc.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "riplab/fourier.hpp"

namespace riplab {

namespace {

constexpr std::uint64_t kCertSpotCheckCap = 32;

std::uint32_t exact_log_or_throw(std::uint32_t p, std::uint64_t k) {
  std::uint64_t power = 1;
  std::uint32_t d = 0;
  while (power < k) {
    if (power > k / p) throw std::invalid_argument("ExperimentConfig: k must be a power of p");
    power *= p;
    ++d;
  }
  if (power != k) throw std::invalid_argument("ExperimentConfig: k must be a power of p");
  return d;
}

}  // namespace

ExperimentConfig ExperimentConfig::make(std::uint32_t p, std::uint32_t n, std::uint64_t k, std::uint64_t q,
                                        std::uint64_t trials, std::uint64_t master_seed) {
  ExperimentConfig config;
  config.params = FieldParams(p, n);
  config.d = exact_log_or_throw(p, k);
  if (config.d > n) throw std::invalid_argument("ExperimentConfig: k = p^d needs d <= n");
  config.k = k;
  config.q = q;
  if (trials < 1) throw std::invalid_argument("ExperimentConfig: trials must be at least 1");
  config.trials = trials;
  config.master_seed = master_seed;
  return config;
}

double hoeffding_halfwidth(std::uint64_t trials) {
  if (trials < 1) throw std::invalid_argument("hoeffding_halfwidth: trials must be at least 1");
  return std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(trials)));
}

SampleSeq draw_rows(const FieldParams& params, std::uint64_t q, Rng& rng) {
  SampleSeq seq{params, {}};
  seq.rows.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    std::vector<std::uint32_t> coords(params.n);
    for (auto& c : coords) c = static_cast<std::uint32_t>(rng.next_below(params.p));
    seq.rows.emplace_back(params, std::move(coords));
  }
  return seq;
}

TrialSummary mc_single_subspace(const ExperimentConfig& config) {
  return mc_single_subspace(config, Subspace::coordinate(config.params, config.d));
}

TrialSummary mc_single_subspace(const ExperimentConfig& config, const Subspace& v) {
  if (v.dim() != config.d) throw std::invalid_argument("mc_single_subspace: subspace dimension must match config");
  require_same_params(v.params(), config.params, "mc_single_subspace");

  TrialSummary summary;
  summary.trials = config.trials;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    Rng rng = Rng::for_trial(config.master_seed, i);
    const SampleSeq q_seq = draw_rows(config.params, config.q, rng);
    if (!shatters(q_seq, v).shattered) ++summary.event_count;
  }
  summary.estimate = static_cast<double>(summary.event_count) / static_cast<double>(config.trials);
  summary.ci_halfwidth = hoeffding_halfwidth(config.trials);

  const BoundValue lower = lower_bound_single(config.k, config.q);
  const double exact = coupon_exact(config.k, config.q);
  summary.bounds.push_back(lower);
  summary.bounds.push_back(make_bound(BoundKind::coupon_exact, exact));
  summary.verdict = (summary.estimate + summary.ci_halfwidth >= lower.value) &&
                    (std::abs(summary.estimate - exact) <= summary.ci_halfwidth);
  return summary;
}

TrialSummary mc_pair_subspaces(const ExperimentConfig& config, const Subspace& v1, const Subspace& v2) {
  if (v1.dim() != config.d || v2.dim() != config.d) {
    throw std::invalid_argument("mc_pair_subspaces: subspace dimensions must match config");
  }
  require_same_params(v1.params(), config.params, "mc_pair_subspaces");
  require_same_params(v2.params(), config.params, "mc_pair_subspaces");
  const std::uint32_t m = intersection_dim(v1, v2);

  TrialSummary summary;
  summary.trials = config.trials;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    Rng rng = Rng::for_trial(config.master_seed, i);
    const SampleSeq q_seq = draw_rows(config.params, config.q, rng);
    if (!shatters(q_seq, v1).shattered && !shatters(q_seq, v2).shattered) ++summary.event_count;
  }
  summary.estimate = static_cast<double>(summary.event_count) / static_cast<double>(config.trials);
  summary.ci_halfwidth = hoeffding_halfwidth(config.trials);

  const BoundValue upper = upper_bound_pair(config.params.p, config.k, m, config.q);
  summary.bounds.push_back(upper);
  summary.verdict = summary.estimate - summary.ci_halfwidth <= upper.value;
  std::ostringstream note;
  note << "m=" << m;
  summary.note = note.str();
  return summary;
}

TrialSummary mc_family_failure(const ExperimentConfig& config, const SubspaceFamily& family) {
  if (family.dim != config.d) throw std::invalid_argument("mc_family_failure: family dimension must match config");
  require_same_params(family.params, config.params, "mc_family_failure");
  if (family.members.empty()) throw std::invalid_argument("mc_family_failure: empty family");
  if (!verify_family(family)) throw std::invalid_argument("mc_family_failure: family fails verification");

  const double cert_tolerance =
      1e-9 * std::sqrt(static_cast<double>(config.q) * static_cast<double>(config.k));

  TrialSummary summary;
  summary.trials = config.trials;
  bool certs_ok = true;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    Rng rng = Rng::for_trial(config.master_seed, i);
    const SampleSeq q_seq = draw_rows(config.params, config.q, rng);
    const Subspace* unshattered = nullptr;
    std::optional<ShatterReport> failing_report;
    for (const Subspace& member : family.members) {
      ShatterReport report = shatters(q_seq, member);
      if (!report.shattered) {
        unshattered = &member;
        failing_report = std::move(report);
        break;
      }
    }
    if (unshattered == nullptr) continue;
    ++summary.event_count;
    if (summary.cert_checks < kCertSpotCheckCap) {
      ++summary.cert_checks;
      const SparseCertificate cert = kernel_certificate(q_seq, *unshattered, *failing_report);
      const double residual = certificate_residual(q_seq, cert);
      summary.cert_max_residual = std::max(summary.cert_max_residual, residual);
      if (residual > cert_tolerance) certs_ok = false;
    }
  }
  summary.estimate = static_cast<double>(summary.event_count) / static_cast<double>(config.trials);
  summary.ci_halfwidth = hoeffding_halfwidth(config.trials);

  const BoundValue chain = lower_bound_family(config.k, config.q, static_cast<double>(family.size()));
  summary.bounds.push_back(chain);
  const bool bound_ok = chain.value <= 0.0 || summary.estimate + summary.ci_halfwidth >= chain.value;
  summary.verdict = bound_ok && certs_ok;
  std::ostringstream note;
  note << "ell=" << family.size() << " cert_checks=" << summary.cert_checks;
  summary.note = note.str();
  return summary;
}

BoostSummary mc_boost_split(const ExperimentConfig& config, const SubspaceFamily& family, std::uint64_t split_s) {
  if (split_s < 1) throw std::invalid_argument("mc_boost_split: split_s must be at least 1");
  if (config.q % split_s != 0) throw std::invalid_argument("mc_boost_split: q must be divisible by split_s");
  if (family.dim != config.d) throw std::invalid_argument("mc_boost_split: family dimension must match config");
  require_same_params(family.params, config.params, "mc_boost_split");
  if (family.members.empty()) throw std::invalid_argument("mc_boost_split: empty family");
  if (!verify_family(family)) throw std::invalid_argument("mc_boost_split: family fails verification");

  const std::uint64_t chunk_len = config.q / split_s;

  BoostSummary boost;
  boost.split_s = split_s;
  boost.full.trials = config.trials;
  boost.chunk.trials = config.trials;

  for (std::uint64_t i = 0; i < config.trials; ++i) {
    Rng rng = Rng::for_trial(config.master_seed, i);
    const SampleSeq q_seq = draw_rows(config.params, config.q, rng);
    SampleSeq chunk_seq{config.params, {q_seq.rows.begin(), q_seq.rows.begin() + static_cast<std::ptrdiff_t>(chunk_len)}};

    bool full_fail = false;
    bool chunk_fail = false;
    for (const Subspace& member : family.members) {
      if (!chunk_fail && !shatters(chunk_seq, member).shattered) chunk_fail = true;
      if (!full_fail && !shatters(q_seq, member).shattered) full_fail = true;
      if (full_fail && chunk_fail) break;
    }
    if (full_fail) ++boost.full.event_count;
    if (chunk_fail) ++boost.chunk.event_count;
  }

  const double ci = hoeffding_halfwidth(config.trials);
  boost.full.ci_halfwidth = ci;
  boost.chunk.ci_halfwidth = ci;
  boost.full.estimate = static_cast<double>(boost.full.event_count) / static_cast<double>(config.trials);
  boost.chunk.estimate = static_cast<double>(boost.chunk.event_count) / static_cast<double>(config.trials);

  boost.full.bounds.push_back(lower_bound_family(config.k, config.q, static_cast<double>(family.size())));

  const double base = std::max(0.0, boost.full.estimate - ci);
  boost.target = std::pow(base, 1.0 / static_cast<double>(split_s));
  boost.verdict = boost.chunk.estimate + ci >= boost.target;
  boost.full.verdict = boost.verdict;
  boost.chunk.verdict = boost.verdict;
  std::ostringstream note;
  note << "s=" << split_s << " chunk_len=" << chunk_len;
  boost.full.note = note.str();
  boost.chunk.note = note.str();
  return boost;
}

}  // namespace riplab
