#include "riplab/shatter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace riplab {

ShatterReport shatters(const SampleSeq& q_seq, const Subspace& v) {
  if (q_seq.params != v.params()) {
    throw std::invalid_argument("shatters: sample sequence and subspace live in different spaces");
  }
  const std::uint32_t p = v.params().p;
  const std::size_t d = v.dim();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= p;
    if (total > (std::uint64_t{1} << 26)) {
      throw std::invalid_argument("shatters: signature space too large to track");
    }
  }

  std::vector<bool> seen(total, false);
  std::uint64_t distinct = 0;
  for (const FpVector& r : q_seq.rows) {
    const std::uint64_t idx = signature_rank(signature(r, v), p);
    if (!seen[idx]) {
      seen[idx] = true;
      ++distinct;
      if (distinct == total) break;
    }
  }

  ShatterReport report{v, distinct == total, std::nullopt};
  if (!report.shattered) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (!seen[idx]) {
        report.missing = signature_from_rank(v.params().p, d, idx);
        break;
      }
    }
  }
  return report;
}

SparseCertificate kernel_certificate(const SampleSeq& q_seq, const Subspace& v, const ShatterReport& report) {
  if (report.shattered || !report.missing.has_value()) {
    throw std::invalid_argument("kernel_certificate: subspace is shattered, no certificate exists");
  }
  if (report.subspace != v) {
    throw std::invalid_argument("kernel_certificate: report was computed for a different subspace");
  }
  if (q_seq.params != v.params()) {
    throw std::invalid_argument("kernel_certificate: sample sequence and subspace live in different spaces");
  }

  const std::uint32_t p = v.params().p;
  const std::size_t d = v.dim();
  const Signature& w = *report.missing;

  std::uint64_t k = 1;
  for (std::size_t i = 0; i < d; ++i) k *= p;

  SparseCertificate cert;
  cert.support = enumerate_subspace(v);
  cert.coefficients.reserve(k);

  const double step = 2.0 * std::numbers::pi / static_cast<double>(p);
  // Walk coefficient vectors c in the same lex order enumerate_subspace uses.
  std::vector<std::uint32_t> c(d, 0);
  for (std::uint64_t rank = 0; rank < k; ++rank) {
    std::uint64_t rest = rank;
    for (std::size_t i = d; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    std::uint64_t phase = 0;
    for (std::size_t i = 0; i < d; ++i) {
      phase += static_cast<std::uint64_t>(w.values[i]) * c[i];
    }
    phase %= p;
    // omega^(-<w,c>)
    const double angle = -step * static_cast<double>(phase);
    cert.coefficients.emplace_back(std::cos(angle), std::sin(angle));
  }
  return cert;
}

}  // namespace riplab
