#include "riplab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace riplab {

namespace {

void require_k_at_least_2(std::uint64_t k, const char* where) {
  if (k < 2) throw std::invalid_argument(std::string(where) + ": k must be at least 2");
}

/// d with p^d = k, or throws.
std::uint32_t exact_log(std::uint32_t p, std::uint64_t k, const char* where) {
  std::uint64_t power = 1;
  std::uint32_t d = 0;
  while (power < k) {
    if (power > k / p) break;
    power *= p;
    ++d;
  }
  if (power != k) throw std::invalid_argument(std::string(where) + ": k must be a power of p");
  return d;
}

/// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double term) {
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }

  double total() const { return sum + comp; }
};

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::single_lower: return "single_lower";
    case BoundKind::pair_upper: return "pair_upper";
    case BoundKind::family_chain: return "family_chain";
    case BoundKind::coupon_exact: return "coupon_exact";
    case BoundKind::subspace_count: return "subspace_count";
    case BoundKind::family_threshold: return "family_threshold";
  }
  throw std::invalid_argument("to_string: unknown BoundKind");
}

BoundValue make_bound(BoundKind kind, double raw) {
  // counts pass through; probability bounds clamp to <= 1 (never from below,
  // a negative lower bound is vacuous but honest)
  const bool is_count = kind == BoundKind::family_threshold || kind == BoundKind::subspace_count;
  return BoundValue{kind, raw, is_count ? raw : std::min(raw, 1.0)};
}

double coupon_exact(std::uint64_t k, std::uint64_t q) {
  if (k < 1) throw std::invalid_argument("coupon_exact: k must be at least 1");
  if (q < k) return 1.0;  // fewer draws than symbols always miss one

  CompensatedSum sum;
  if (k <= 60) {
    // C(k,j) by running ratio; exact for small k, and the ~1e17 peak values
    // of mid k carry enough precision next to the decaying power factor.
    double binom = 1.0;
    for (std::uint64_t j = 1; j <= k; ++j) {
      binom *= static_cast<double>(k - j + 1) / static_cast<double>(j);
      const double base = 1.0 - static_cast<double>(j) / static_cast<double>(k);
      const double term = binom * std::pow(base, static_cast<double>(q));
      sum.add((j % 2 == 1) ? term : -term);
    }
  } else {
    for (std::uint64_t j = 1; j <= k; ++j) {
      const double log_binom = std::lgamma(static_cast<double>(k) + 1.0) -
                               std::lgamma(static_cast<double>(j) + 1.0) -
                               std::lgamma(static_cast<double>(k - j) + 1.0);
      const double base = 1.0 - static_cast<double>(j) / static_cast<double>(k);
      const double log_term = log_binom + static_cast<double>(q) * std::log(base);
      // j = k gives base 0; log(0) = -inf and exp(-inf) = 0, the right term.
      const double term = std::exp(log_term);
      sum.add((j % 2 == 1) ? term : -term);
    }
  }
  return std::clamp(sum.total(), 0.0, 1.0);
}

mpq_class coupon_exact_rational(std::uint64_t k, std::uint64_t q) {
  if (k < 1) throw std::invalid_argument("coupon_exact_rational: k must be at least 1");
  mpq_class sum = 0;
  for (std::uint64_t j = 1; j <= k; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(k - j), static_cast<unsigned long>(q));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(q));
    mpq_class term(num * binom, den);
    term.canonicalize();
    if (j % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BoundValue lower_bound_single(std::uint64_t k, std::uint64_t q) {
  require_k_at_least_2(k, "lower_bound_single");
  const double kd = static_cast<double>(k);
  const double qd = static_cast<double>(q);
  const double first = kd * std::pow(1.0 - 1.0 / kd, qd);
  const double bracket = 1.0 - kd * std::pow(1.0 - 1.0 / (kd - 1.0), qd);
  return make_bound(BoundKind::single_lower, first * bracket);
}

mpq_class lower_bound_single_rational(std::uint64_t k, std::uint64_t q) {
  require_k_at_least_2(k, "lower_bound_single_rational");
  const auto ratio_pow = [q](std::uint64_t num, std::uint64_t den) {
    mpz_class pn, pd;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(num), static_cast<unsigned long>(q));
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(den), static_cast<unsigned long>(q));
    mpq_class r(pn, pd);
    r.canonicalize();
    return r;
  };
  const mpq_class first = mpq_class(k) * ratio_pow(k - 1, k);
  const mpq_class bracket = mpq_class(1) - mpq_class(k) * ratio_pow(k - 2, k - 1);
  return first * bracket;
}

BoundValue upper_bound_pair(std::uint32_t p, std::uint64_t k, std::uint32_t m, std::uint64_t q) {
  require_k_at_least_2(k, "upper_bound_pair");
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (pm > k) break;
    pm *= p;
  }
  if (pm > k) throw std::invalid_argument("upper_bound_pair: p^m must not exceed k");
  const double kd = static_cast<double>(k);
  const double qd = static_cast<double>(q);
  const double value = kd * kd * std::pow(1.0 - 1.0 / kd, qd) *
                       std::exp(-qd * (kd - static_cast<double>(pm)) / ((kd - 1.0) * kd));
  return make_bound(BoundKind::pair_upper, value);
}

namespace {

double family_chain_raw(std::uint64_t k, std::uint64_t q, double ell) {
  const double kd = static_cast<double>(k);
  const double qd = static_cast<double>(q);
  const double single_first = kd * std::pow(1.0 - 1.0 / kd, qd);
  const double pair_mass = ell * kd * std::exp(-qd / (kd + std::sqrt(kd)));
  const double bracket = 1.0 - kd * std::pow(1.0 - 1.0 / (kd - 1.0), qd) - pair_mass;
  return ell * single_first * bracket;
}

}  // namespace

BoundValue lower_bound_family(std::uint64_t k, std::uint64_t q, double ell) {
  require_k_at_least_2(k, "lower_bound_family");
  if (ell < 1.0) throw std::invalid_argument("lower_bound_family: ell must be at least 1");
  return make_bound(BoundKind::family_chain, family_chain_raw(k, q, ell));
}

double opt_ell(std::uint64_t k, std::uint64_t q) {
  require_k_at_least_2(k, "opt_ell");
  const double kd = static_cast<double>(k);
  return std::exp(static_cast<double>(q) / (kd + std::sqrt(kd))) / (std::numbers::e * kd);
}

BoundValue lower_bound_family_opt_ell(std::uint64_t k, std::uint64_t q) {
  require_k_at_least_2(k, "lower_bound_family_opt_ell");
  return make_bound(BoundKind::family_chain, family_chain_raw(k, q, opt_ell(k, q)));
}

mpz_class subspace_count(std::uint32_t p, std::uint32_t n, std::uint32_t d) {
  if (d > n) throw std::invalid_argument("subspace_count: d must not exceed n");
  mpz_class num = 1;
  mpz_class den = 1;
  const mpz_class base = p;
  for (std::uint32_t i = 0; i < d; ++i) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), n - i);
    num *= pw - 1;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), d - i);
    den *= pw - 1;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("subspace_count: product is not integral");
  }
  mpz_class count;
  mpz_divexact(count.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return count;
}

double family_size_threshold(std::uint32_t p, std::uint32_t n, std::uint64_t k) {
  const std::uint32_t d = exact_log(p, k, "family_size_threshold");
  const double n_big = std::pow(static_cast<double>(p), static_cast<double>(n));
  const double kd = static_cast<double>(k);
  if (kd > n_big / 2.0) throw std::invalid_argument("family_size_threshold: requires k <= N/2");
  const double base = n_big / (2.0 * kd * kd * kd);
  return std::pow(base, static_cast<double>(d) / 2.0 + 1.0);
}

namespace {

double sample_len_threshold_impl(std::uint32_t p, std::uint32_t n, std::uint64_t k, double extra) {
  const std::uint32_t d = exact_log(p, k, "sample_len_threshold");
  const double kd = static_cast<double>(k);
  const double log_n_big = static_cast<double>(n) * std::log(static_cast<double>(p));
  const double inner = (static_cast<double>(d) / 2.0 + 1.0) * (log_n_big - 3.0 * std::log(2.0 * kd)) +
                       extra + std::log(kd);
  return (kd + std::sqrt(kd)) * inner;
}

}  // namespace

double sample_len_threshold(std::uint32_t p, std::uint32_t n, std::uint64_t k) {
  return sample_len_threshold_impl(p, n, k, 1.0);
}

double sample_len_threshold_tight(std::uint32_t p, std::uint32_t n, std::uint64_t k) {
  return sample_len_threshold_impl(p, n, k, 0.0);
}

}  // namespace riplab
