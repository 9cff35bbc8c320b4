#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "riplab/emit.hpp"
#include "riplab/fourier.hpp"
#include "riplab/mc.hpp"

namespace {

using namespace riplab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OutputArgs {
  std::string format = "csv";
  std::string out;
};

void add_output_options(CLI::App* cmd, OutputArgs& args) {
  cmd->add_option("--format", args.format, "Output format for --out")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", args.out, "Write results to this path ('-' for stdout)");
}

void write_output(const OutputArgs& args, const std::vector<ResultRow>& rows,
                  const std::optional<std::string>& family_json = std::nullopt,
                  const std::optional<SparseCertificate>& certificate = std::nullopt) {
  if (args.out.empty()) return;
  const std::string payload =
      args.format == "json" ? rows_to_json(rows, family_json, certificate) : rows_to_csv(rows);
  if (args.out == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream file(args.out);
  if (!file) throw std::runtime_error("cannot open output path: " + args.out);
  file << payload;
}

void print_rows(const std::vector<ResultRow>& rows) {
  for (const auto& row : rows) {
    std::cout << row.experiment << ": estimate=" << row.estimate << " ci99=" << row.ci99
              << " " << row.bound_kind << "=" << row.bound_value
              << " verdict=" << (row.verdict ? "pass" : "fail") << "\n";
  }
}

SampleSeq draw_or_enumerate(const FieldParams& params, std::uint64_t q, std::uint64_t seed, bool full) {
  if (full) return SampleSeq{params, enumerate_space(params)};
  Rng rng(seed);
  return draw_rows(params, q, rng);
}

SubspaceFamily make_family(const FieldParams& params, std::uint32_t d, std::int64_t max_int_dim_flag,
                           std::uint64_t ell, std::uint64_t seed, const std::string& family_in) {
  if (!family_in.empty()) {
    std::ifstream file(family_in);
    if (!file) throw std::runtime_error("cannot open family file: " + family_in);
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    SubspaceFamily family = family_from_json(text);
    if (family.params != params || family.dim != d) {
      throw std::runtime_error("family file does not match --p/--n/--k");
    }
    return family;
  }
  const std::uint32_t cap = max_int_dim_flag >= 0 ? static_cast<std::uint32_t>(max_int_dim_flag) : d / 2;
  return build_family(params, d, cap, ell, seed);
}

int run(int argc, char** argv) {
  CLI::App app{"Shattering, RIP failure certificates and probability bounds for subsampled character matrices"};
  app.require_subcommand(1);

  std::uint32_t p = 2;
  std::uint32_t n = 4;
  std::uint64_t k = 4;
  std::uint64_t q = 10;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::uint64_t ell = 8;
  std::int64_t max_int_dim = -1;  // -1: use floor(d/2)
  std::uint64_t split_s = 2;
  std::uint32_t d = 2;
  std::uint32_t m = 0;
  bool full = false;

  OutputArgs output;

  auto add_field_options = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "Field characteristic (prime)");
    cmd->add_option("--n", n, "Ambient dimension");
  };

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the closed-form bounds and exact oracles");
  add_field_options(bounds_cmd);
  bounds_cmd->add_option("--k", k, "Sparsity (power of p)");
  bounds_cmd->add_option("--q", q, "Sample length");
  bounds_cmd->add_option("--m", m, "Intersection dimension for the pair bound");
  double ell_real = 0.0;  // 0: use the balancing value
  bounds_cmd->add_option("--ell", ell_real, "Family size for the chain bound (default: balancing value)");
  add_output_options(bounds_cmd, output);

  // shatter-check
  auto* shatter_cmd = app.add_subcommand("shatter-check", "Test whether a sampled sequence shatters span{e_1..e_d}");
  add_field_options(shatter_cmd);
  shatter_cmd->add_option("--d", d, "Subspace dimension");
  shatter_cmd->add_option("--q", q, "Number of sampled rows");
  shatter_cmd->add_option("--seed", seed, "RNG seed");
  shatter_cmd->add_flag("--full", full, "Use every vector of the space as the sequence");

  // certificate
  auto* cert_cmd = app.add_subcommand("certificate", "Produce a kernel certificate when the sequence fails to shatter");
  add_field_options(cert_cmd);
  cert_cmd->add_option("--d", d, "Subspace dimension");
  cert_cmd->add_option("--q", q, "Number of sampled rows");
  cert_cmd->add_option("--seed", seed, "RNG seed");
  add_output_options(cert_cmd, output);

  // rip-bruteforce
  auto* rip_cmd = app.add_subcommand("rip-bruteforce", "Exact RIP constant by enumerating all size-k supports");
  add_field_options(rip_cmd);
  rip_cmd->add_option("--k", k, "Sparsity");
  rip_cmd->add_option("--q", q, "Number of sampled rows");
  rip_cmd->add_option("--seed", seed, "RNG seed");
  rip_cmd->add_flag("--full", full, "Use the fully sampled matrix");

  // family-build
  auto* family_cmd = app.add_subcommand("family-build", "Greedily build a pairwise-low-intersection subspace family");
  add_field_options(family_cmd);
  family_cmd->add_option("--d", d, "Member dimension");
  family_cmd->add_option("--ell", ell, "Target family size");
  family_cmd->add_option("--max-int-dim", max_int_dim, "Pairwise intersection cap (default floor(d/2))");
  family_cmd->add_option("--seed", seed, "RNG seed");
  std::uint64_t max_attempts = 0;
  family_cmd->add_option("--max-attempts", max_attempts, "Candidate draw budget (default 1000x target)");
  std::string family_out;
  family_cmd->add_option("--family-out", family_out, "Write the family as JSON to this path");

  // mc-single
  auto* single_cmd = app.add_subcommand("mc-single", "Estimate the single-subspace non-shattering probability");
  add_field_options(single_cmd);
  single_cmd->add_option("--k", k, "Sparsity (power of p)");
  single_cmd->add_option("--q", q, "Sample length");
  single_cmd->add_option("--trials", trials, "Monte Carlo trials");
  single_cmd->add_option("--seed", seed, "Master seed");
  add_output_options(single_cmd, output);

  // mc-pair
  auto* pair_cmd = app.add_subcommand("mc-pair", "Estimate the joint non-shattering probability of two subspaces");
  add_field_options(pair_cmd);
  pair_cmd->add_option("--k", k, "Sparsity (power of p)");
  pair_cmd->add_option("--q", q, "Sample length");
  pair_cmd->add_option("--m", m, "Intersection dimension of the constructed pair");
  pair_cmd->add_option("--trials", trials, "Monte Carlo trials");
  pair_cmd->add_option("--seed", seed, "Master seed");
  add_output_options(pair_cmd, output);

  // mc-family
  auto* mc_family_cmd = app.add_subcommand("mc-family", "Estimate Pr[some family member unshattered]");
  add_field_options(mc_family_cmd);
  mc_family_cmd->add_option("--k", k, "Sparsity (power of p)");
  mc_family_cmd->add_option("--q", q, "Sample length");
  mc_family_cmd->add_option("--ell", ell, "Family size to build");
  mc_family_cmd->add_option("--max-int-dim", max_int_dim, "Pairwise intersection cap (default floor(d/2))");
  mc_family_cmd->add_option("--trials", trials, "Monte Carlo trials");
  mc_family_cmd->add_option("--seed", seed, "Master seed");
  std::string family_in;
  mc_family_cmd->add_option("--family-in", family_in, "Load the family from a JSON file instead of building");
  add_output_options(mc_family_cmd, output);

  // mc-boost
  auto* boost_cmd = app.add_subcommand("mc-boost", "Compare chunked against full-sequence failure rates");
  add_field_options(boost_cmd);
  boost_cmd->add_option("--k", k, "Sparsity (power of p)");
  boost_cmd->add_option("--q", q, "Full sample length (divisible by --split-s)");
  boost_cmd->add_option("--ell", ell, "Family size to build");
  boost_cmd->add_option("--max-int-dim", max_int_dim, "Pairwise intersection cap (default floor(d/2))");
  boost_cmd->add_option("--split-s", split_s, "Number of equal chunks");
  boost_cmd->add_option("--trials", trials, "Monte Carlo trials");
  boost_cmd->add_option("--seed", seed, "Master seed");
  add_output_options(boost_cmd, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (bounds_cmd->parsed()) {
    const FieldParams params(p, n);  // validates the prime
    std::vector<ResultRow> rows;
    const auto push = [&](const BoundValue& bound) {
      ResultRow row;
      row.experiment = "bounds";
      row.p = params.p;
      row.n = params.n;
      row.k = k;
      row.q = q;
      row.bound_kind = std::string(to_string(bound.kind));
      row.bound_value = bound.value;
      row.verdict = true;
      rows.push_back(std::move(row));
    };
    const auto print_bound = [&](const BoundValue& bound) {
      std::cout << to_string(bound.kind) << "(k=" << k << ", q=" << q << ") = " << bound.value;
      if (bound.raw != bound.value) std::cout << " (raw " << bound.raw << ")";
      std::cout << "\n";
      push(bound);
    };
    print_bound(lower_bound_single(k, q));
    print_bound(make_bound(BoundKind::coupon_exact, coupon_exact(k, q)));
    print_bound(upper_bound_pair(p, k, m, q));
    const double ell_used = ell_real > 0.0 ? ell_real : opt_ell(k, q);
    const BoundValue chain = ell_real > 0.0 ? lower_bound_family(k, q, ell_real)
                                            : lower_bound_family_opt_ell(k, q);
    print_bound(chain);
    std::cout << "ell used for the chain bound: " << ell_used << "\n";

    // The N-dependent rows need k = p^d; skip them (with a note) otherwise.
    std::uint64_t power = 1;
    std::uint32_t log_p_k = 0;
    while (power < k && power <= k / p) {
      power *= p;
      ++log_p_k;
    }
    if (power == k && log_p_k <= n && k <= params.order() / 2) {
      print_bound(make_bound(BoundKind::family_threshold, family_size_threshold(p, n, k)));
      std::cout << "subspace_count(" << p << ", " << n << ", " << log_p_k << ") = "
                << subspace_count(p, n, log_p_k).get_str() << "\n";
      std::cout << "sample length threshold (chain stays positive below): "
                << sample_len_threshold(p, n, k) << " (strict form: " << sample_len_threshold_tight(p, n, k) << ")\n";
    } else {
      std::cout << "family threshold rows skipped (need k = p^d with d <= n and k <= N/2)\n";
    }
    write_output(output, rows);
    return kExitPass;
  }

  if (shatter_cmd->parsed()) {
    const FieldParams params(p, n);
    const SampleSeq seq = draw_or_enumerate(params, q, seed, full);
    const Subspace v = Subspace::coordinate(params, d);
    const ShatterReport report = shatters(seq, v);
    std::cout << "shattered: " << (report.shattered ? "true" : "false") << "\n";
    if (!report.shattered) {
      std::cout << "smallest missing signature: (";
      for (std::size_t i = 0; i < report.missing->values.size(); ++i) {
        std::cout << (i ? "," : "") << report.missing->values[i];
      }
      std::cout << ")\n";
    }
    return report.shattered ? kExitPass : kExitFail;
  }

  if (cert_cmd->parsed()) {
    const FieldParams params(p, n);
    Rng rng(seed);
    const SampleSeq seq = draw_rows(params, q, rng);
    const Subspace v = Subspace::coordinate(params, d);
    const ShatterReport report = shatters(seq, v);
    if (report.shattered) {
      std::cout << "sequence shatters the subspace; no kernel certificate exists\n";
      return kExitFail;
    }
    const SparseCertificate cert = kernel_certificate(seq, v, report);
    const double residual = certificate_residual(seq, cert);
    const double tolerance = 1e-9 * std::sqrt(static_cast<double>(q) * static_cast<double>(cert.k()));
    std::cout << "certificate support size: " << cert.k() << "\n";
    std::cout << "residual ||A x||_2 = " << residual << " (tolerance " << tolerance << ")\n";
    OutputArgs cert_output = output;
    cert_output.format = "json";
    write_output(cert_output, {}, std::nullopt, cert);
    return residual <= tolerance ? kExitPass : kExitFail;
  }

  if (rip_cmd->parsed()) {
    const FieldParams params(p, n);
    const SampleSeq seq = draw_or_enumerate(params, q, seed, full);
    const RipEstimate rip = rip_epsilon(seq, k);
    std::cout << "epsilon = " << rip.epsilon << " over " << rip.supports_checked << " supports\n";
    std::cout << "witness columns:";
    for (auto c : rip.witness_support) std::cout << " " << c;
    std::cout << "\n";
    return kExitPass;
  }

  if (family_cmd->parsed()) {
    const FieldParams params(p, n);
    const std::uint32_t cap = max_int_dim >= 0 ? static_cast<std::uint32_t>(max_int_dim) : d / 2;
    const SubspaceFamily family = build_family(params, d, cap, ell, seed, max_attempts);
    const bool ok = verify_family(family);
    std::cout << "built " << family.size() << " of " << ell << " members (max_int_dim " << cap << ")";
    if (family.exhausted) std::cout << ", attempt budget exhausted";
    std::cout << "\nverified: " << (ok ? "true" : "false") << "\n";
    if (!family_out.empty()) {
      std::ofstream file(family_out);
      if (!file) throw std::runtime_error("cannot open output path: " + family_out);
      file << family_to_json(family);
    }
    return (ok && !family.exhausted) ? kExitPass : kExitFail;
  }

  if (single_cmd->parsed()) {
    const ExperimentConfig config = ExperimentConfig::make(p, n, k, q, trials, seed);
    const TrialSummary summary = mc_single_subspace(config);
    const auto rows = summary_rows("mc-single", config, summary);
    print_rows(rows);
    std::cout << regime_note() << "\n";
    write_output(output, rows);
    return summary.verdict ? kExitPass : kExitFail;
  }

  if (pair_cmd->parsed()) {
    const ExperimentConfig config = ExperimentConfig::make(p, n, k, q, trials, seed);
    const std::uint32_t dd = config.d;
    if (m > dd) throw std::runtime_error("--m cannot exceed log_p k");
    if (2 * dd - m > n) throw std::runtime_error("need 2*log_p(k) - m <= n to embed the pair");
    const Subspace v1 = Subspace::coordinate(config.params, dd);
    std::vector<FpVector> basis2;
    for (std::uint32_t i = 0; i < m; ++i) basis2.push_back(FpVector::unit(config.params, i));
    for (std::uint32_t i = 0; i < dd - m; ++i) basis2.push_back(FpVector::unit(config.params, dd + i));
    const Subspace v2 = Subspace::span_of(basis2);
    const TrialSummary summary = mc_pair_subspaces(config, v1, v2);
    const auto rows = summary_rows("mc-pair", config, summary);
    print_rows(rows);
    std::cout << "pair intersection: " << summary.note << "\n" << regime_note() << "\n";
    write_output(output, rows);
    return summary.verdict ? kExitPass : kExitFail;
  }

  if (mc_family_cmd->parsed()) {
    const ExperimentConfig config = ExperimentConfig::make(p, n, k, q, trials, seed);
    const SubspaceFamily family = make_family(config.params, config.d, max_int_dim, ell, seed, family_in);
    if (family.exhausted) {
      std::cout << "warning: family build exhausted at " << family.size() << " of " << ell << " members\n";
    }
    const TrialSummary summary = mc_family_failure(config, family);
    const auto rows = summary_rows("mc-family", config, summary);
    print_rows(rows);
    std::cout << summary.note << " cert_max_residual=" << summary.cert_max_residual << "\n"
              << regime_note() << "\n";
    write_output(output, rows, family_to_json(family));
    return summary.verdict ? kExitPass : kExitFail;
  }

  if (boost_cmd->parsed()) {
    const ExperimentConfig config = ExperimentConfig::make(p, n, k, q, trials, seed);
    const SubspaceFamily family = make_family(config.params, config.d, max_int_dim, ell, seed, "");
    if (family.exhausted) {
      std::cout << "warning: family build exhausted at " << family.size() << " of " << ell << " members\n";
    }
    const BoostSummary boost = mc_boost_split(config, family, split_s);
    std::vector<ResultRow> rows = summary_rows("mc-boost-full", config, boost.full);
    ResultRow chunk_row;
    chunk_row.experiment = "mc-boost-chunk";
    chunk_row.p = p;
    chunk_row.n = n;
    chunk_row.k = k;
    chunk_row.q = config.q / split_s;
    chunk_row.trials = boost.chunk.trials;
    chunk_row.seed = seed;
    chunk_row.estimate = boost.chunk.estimate;
    chunk_row.ci99 = boost.chunk.ci_halfwidth;
    chunk_row.bound_kind = "boost_target";
    chunk_row.bound_value = boost.target;
    chunk_row.verdict = boost.verdict;
    rows.push_back(std::move(chunk_row));
    print_rows(rows);
    std::cout << boost.full.note << " target=" << boost.target << "\n" << regime_note() << "\n";
    write_output(output, rows, family_to_json(family));
    return boost.verdict ? kExitPass : kExitFail;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
