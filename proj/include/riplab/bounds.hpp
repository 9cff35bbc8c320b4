#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string_view>

namespace riplab {

enum class BoundKind {
  single_lower,      // lower bound on Pr[single subspace unshattered]
  pair_upper,        // upper bound on Pr[neither of a pair shattered]
  family_chain,      // lower bound on Pr[some family member unshattered]
  coupon_exact,      // exact single-subspace probability
  subspace_count,    // exact count of d-dim subspaces
  family_threshold,  // guaranteed family size
};

std::string_view to_string(BoundKind kind);

/// Raw formula value next to the reporting value. Upper bounds on
/// probabilities are reported clamped to 1; nothing is clamped from below (a
/// negative lower bound is vacuous but honest).
struct BoundValue {
  BoundKind kind;
  double raw = 0.0;
  double value = 0.0;
};

BoundValue make_bound(BoundKind kind, double raw);

/// Shared argument bundle for the probability formulas.
struct BoundInputs {
  std::uint32_t p = 2;
  std::uint64_t k = 2;                  // p^d
  std::uint64_t q = 0;
  std::optional<std::uint32_t> m;       // intersection dimension, pair bound only
  std::optional<double> ell;            // family size, chain bound only
};

/// Pr[q uniform draws from k symbols miss at least one symbol], the exact
/// inclusion-exclusion sum sum_{j=1}^{k} (-1)^(j+1) C(k,j) (1-j/k)^q.
/// q < k short-circuits to exactly 1 (the sum telescopes to 1 but loses all
/// precision to cancellation in floating point).
double coupon_exact(std::uint64_t k, std::uint64_t q);

/// Same sum in exact rational arithmetic; the ground-truth oracle for small k.
mpq_class coupon_exact_rational(std::uint64_t k, std::uint64_t q);

/// k(1-1/k)^q (1 - k(1-1/(k-1))^q), a closed-form lower bound on
/// coupon_exact(k, q). Requires k >= 2.
BoundValue lower_bound_single(std::uint64_t k, std::uint64_t q);
mpq_class lower_bound_single_rational(std::uint64_t k, std::uint64_t q);

/// k^2 (1-1/k)^q exp(-q (k-p^m)/((k-1)k)), an upper bound on the joint
/// non-shattering probability of two dim-d subspaces with intersection
/// dimension m. Requires k >= 2 and p^m <= k.
BoundValue upper_bound_pair(std::uint32_t p, std::uint64_t k, std::uint32_t m, std::uint64_t q);

/// ell k (1-1/k)^q (1 - k(1-1/(k-1))^q - ell k exp(-q/(k+sqrt(k)))), the
/// inclusion-exclusion lower bound on Pr[some member of an ell-sized
/// pairwise-low-intersection family is unshattered]. Requires k >= 2, ell >= 1.
BoundValue lower_bound_family(std::uint64_t k, std::uint64_t q, double ell);

/// The family size exp(q/(k+sqrt(k)))/(e k) that balances the two terms of the
/// chain bound.
double opt_ell(std::uint64_t k, std::uint64_t q);

/// lower_bound_family evaluated at opt_ell(k, q). Algebraically equal to
/// (1 - 1/e - k(1-1/(k-1))^q) exp(q/(k+sqrt(k)) - 1) (1-1/k)^q.
BoundValue lower_bound_family_opt_ell(std::uint64_t k, std::uint64_t q);

/// Exact number of d-dimensional subspaces of F_p^n, the Gaussian binomial
/// product prod_{i=0}^{d-1} (p^(n-i) - 1)/(p^(d-i) - 1).
mpz_class subspace_count(std::uint32_t p, std::uint32_t n, std::uint32_t d);

/// (N/(2k^3))^(d/2+1) with N = p^n and d = log_p(k): how many dim-d subspaces
/// with pairwise intersection dimension <= d/2 are guaranteed to exist when
/// k <= N/2. May be < 1 at small scale, in which case the guarantee is vacuous.
/// Requires k to be a power of p and k <= N/2.
double family_size_threshold(std::uint32_t p, std::uint32_t n, std::uint64_t k);

/// Largest q for which a family of size opt_ell(k, q) fits under
/// family_size_threshold: (k+sqrt(k))((d/2+1)(ln N - 3 ln 2k) + 1 + ln k).
/// Requires k to be a power of p.
double sample_len_threshold(std::uint32_t p, std::uint32_t n, std::uint64_t k);

/// The headline version without the +1 term; smaller, so a stricter cap on q.
double sample_len_threshold_tight(std::uint32_t p, std::uint32_t n, std::uint64_t k);

}  // namespace riplab
