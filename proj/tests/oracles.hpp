#pragma once

// Independent brute-force oracles the test suites compare the library
// against. Everything here is deliberately naive: set arithmetic and full
// enumeration only, no echelon forms, no closed-form counting.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "riplab/field.hpp"
#include "riplab/linalg.hpp"

namespace oracles {

using riplab::FieldParams;
using riplab::FpVector;
using riplab::Subspace;

/// All distinct F_p-combinations of the given vectors, as coordinate tuples.
inline std::set<std::vector<std::uint32_t>> span_set(const std::vector<FpVector>& vectors,
                                                     const FieldParams& params) {
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    combos *= params.p;
    if (combos > (1ULL << 22)) throw std::invalid_argument("span_set: too many combinations");
  }
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint64_t code = 0; code < combos; ++code) {
    FpVector acc = FpVector::zero(params);
    std::uint64_t rest = code;
    for (const auto& v : vectors) {
      const auto c = static_cast<std::uint32_t>(rest % params.p);
      rest /= params.p;
      if (c != 0) acc = acc + c * v;
    }
    out.insert(acc.coords);
  }
  return out;
}

/// Element set of a subspace via span_set of its basis.
inline std::set<std::vector<std::uint32_t>> element_set(const Subspace& v) {
  if (v.dim() == 0) return {FpVector::zero(v.params()).coords};
  return span_set(v.basis(), v.params());
}

/// Every d-dimensional subspace of F_p^n, found by extending each
/// (d-1)-dimensional subspace by every outside vector and de-duplicating
/// canonical forms. Exponential; for n <= 4 only.
inline std::vector<Subspace> all_subspaces(const FieldParams& params, std::uint32_t d) {
  if (d > params.n) return {};
  std::set<Subspace> layer{Subspace::zero(params)};
  const std::vector<FpVector> space = riplab::enumerate_space(params);
  for (std::uint32_t step = 0; step < d; ++step) {
    std::set<Subspace> next;
    for (const Subspace& base : layer) {
      for (const FpVector& v : space) {
        if (base.contains(v)) continue;
        std::vector<FpVector> spanning = base.basis();
        spanning.push_back(v);
        next.insert(Subspace::span_of(spanning));
      }
    }
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

/// Pr[q uniform draws from k symbols miss at least one symbol], by walking
/// all k^q sequences and counting. Returned as (misses, k^q).
inline std::pair<std::uint64_t, std::uint64_t> coupon_miss_count(std::uint32_t k, std::uint32_t q) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < q; ++i) {
    total *= k;
    if (total > (1ULL << 24)) throw std::invalid_argument("coupon_miss_count: too many sequences");
  }
  std::uint64_t misses = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint32_t seen = 0;
    std::uint64_t rest = code;
    for (std::uint32_t i = 0; i < q; ++i) {
      seen |= 1u << (rest % k);
      rest /= k;
    }
    if (seen != (k >= 32 ? ~0u : ((1u << k) - 1))) ++misses;
  }
  return {misses, total};
}

/// Pearson chi-square statistic for observed counts against a uniform target.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts, double expected) {
  double stat = 0.0;
  for (const auto c : counts) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

}  // namespace oracles
