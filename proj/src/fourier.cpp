#include "riplab/fourier.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace riplab {

namespace {

std::vector<std::complex<double>> unit_roots(std::uint32_t p) {
  std::vector<std::complex<double>> roots(p);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(p);
  for (std::uint32_t t = 0; t < p; ++t) {
    roots[t] = {std::cos(step * t), std::sin(step * t)};
  }
  return roots;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // Integral at every step; result <= cap and n <= 2^20 keep this in range.
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace

ComplexDenseMatrix fourier_submatrix(const std::vector<FpVector>& row_index,
                                     const std::vector<FpVector>& col_index, const FieldParams& params) {
  for (const auto& r : row_index) require_same_params(r.params, params, "fourier_submatrix");
  for (const auto& c : col_index) require_same_params(c.params, params, "fourier_submatrix");
  if (row_index.size() * col_index.size() > (1ULL << 26)) {
    throw std::invalid_argument("fourier_submatrix: index sets too large for a dense matrix");
  }
  const auto roots = unit_roots(params.p);

  ComplexDenseMatrix m(row_index.size(), col_index.size());
  for (std::size_t r = 0; r < row_index.size(); ++r) {
    for (std::size_t c = 0; c < col_index.size(); ++c) {
      m.at(r, c) = roots[dot(row_index[r], col_index[c])];
    }
  }
  return m;
}

ComplexDenseMatrix fourier_submatrix(const SampleSeq& q_seq) {
  return fourier_submatrix(q_seq.rows, enumerate_space(q_seq.params), q_seq.params);
}

std::vector<std::complex<double>> apply(const ComplexDenseMatrix& m, const std::vector<std::complex<double>>& x) {
  if (x.size() != m.cols) {
    throw std::invalid_argument("apply: vector length does not match matrix columns");
  }
  std::vector<std::complex<double>> y(m.rows, {0.0, 0.0});
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t c = 0; c < m.cols; ++c) acc += m.at(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

double certificate_residual(const SampleSeq& q_seq, const SparseCertificate& cert) {
  const FieldParams& params = q_seq.params;
  if (!cert.support.empty()) require_same_params(cert.support.front().params, params, "certificate_residual");
  if (cert.support.size() != cert.coefficients.size()) {
    throw std::invalid_argument("certificate_residual: support/coefficient length mismatch");
  }
  const auto roots = unit_roots(params.p);
  double sq = 0.0;
  for (const FpVector& row : q_seq.rows) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < cert.support.size(); ++j) {
      acc += roots[dot(row, cert.support[j])] * cert.coefficients[j];
    }
    sq += std::norm(acc);
  }
  return std::sqrt(sq);
}

std::pair<double, double> gram_eigen_range(const SampleSeq& q_seq, const std::vector<std::uint64_t>& support) {
  const FieldParams& params = q_seq.params;
  const std::size_t q = q_seq.q();
  const std::size_t k = support.size();
  if (q == 0) throw std::invalid_argument("gram_eigen_range: empty sample sequence");
  if (k == 0) throw std::invalid_argument("gram_eigen_range: empty support");

  const auto roots = unit_roots(params.p);
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));

  Eigen::MatrixXcd cols(q, k);
  for (std::size_t j = 0; j < k; ++j) {
    const FpVector x = vector_from_rank(params, support[j]);
    for (std::size_t r = 0; r < q; ++r) {
      cols(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = roots[dot(q_seq.rows[r], x)] * scale;
    }
  }
  Eigen::MatrixXcd gram = cols.adjoint() * cols;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

RipEstimate rip_epsilon(const SampleSeq& q_seq, std::uint64_t k) {
  const FieldParams& params = q_seq.params;
  const std::uint64_t n_cols = params.order();
  const std::size_t q = q_seq.q();
  if (q == 0) throw std::invalid_argument("rip_epsilon: empty sample sequence");
  if (k == 0 || k > n_cols) throw std::invalid_argument("rip_epsilon: sparsity out of range");

  constexpr std::uint64_t kMaxSupports = 1'000'000;
  const std::uint64_t n_supports = binomial_capped(n_cols, k, kMaxSupports);
  if (n_supports > kMaxSupports) {
    throw std::invalid_argument("rip_epsilon: C(N, k) exceeds the brute-force budget of 10^6 supports");
  }

  const auto roots = unit_roots(params.p);
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));

  // Columns of M = A_{Q,.} / sqrt(q), then H = M^* M once; every size-k Gram
  // matrix is a principal submatrix of H.
  Eigen::MatrixXcd m(q, n_cols);
  for (std::uint64_t c = 0; c < n_cols; ++c) {
    const FpVector x = vector_from_rank(params, c);
    for (std::size_t r = 0; r < q; ++r) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = roots[dot(q_seq.rows[r], x)] * scale;
    }
  }
  Eigen::MatrixXcd h = m.adjoint() * m;

  RipEstimate result;
  result.k = k;
  result.epsilon = -1.0;

  std::vector<std::uint64_t> support(k);
  for (std::uint64_t i = 0; i < k; ++i) support[i] = i;

  Eigen::MatrixXcd gram(k, k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;

  while (true) {
    ++result.supports_checked;

    double offdiag_sq = 0.0;
    for (std::uint64_t a = 0; a < k; ++a) {
      for (std::uint64_t b = 0; b < k; ++b) {
        const std::complex<double> entry = h(static_cast<Eigen::Index>(support[a]), static_cast<Eigen::Index>(support[b]));
        gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = entry;
        const double shift = (a == b) ? 1.0 : 0.0;
        offdiag_sq += std::norm(entry - std::complex<double>(shift, 0.0));
      }
    }
    // ||G - I||_F bounds the spectral deviation; skip the eigensolve when it
    // cannot beat the current maximum.
    if (std::sqrt(offdiag_sq) > result.epsilon) {
      if (k == 1) {
        const double lambda = gram(0, 0).real();
        const double eps = std::max(lambda - 1.0, 1.0 - lambda);
        if (eps > result.epsilon) {
          result.epsilon = eps;
          result.witness_support = support;
        }
      } else {
        solver.compute(gram, Eigen::EigenvaluesOnly);
        const auto& ev = solver.eigenvalues();
        const double eps = std::max(ev(ev.size() - 1) - 1.0, 1.0 - ev(0));
        if (eps > result.epsilon) {
          result.epsilon = eps;
          result.witness_support = support;
        }
      }
    }

    // Next lex support.
    std::uint64_t i = k;
    while (i > 0) {
      --i;
      if (support[i] != i + n_cols - k) {
        ++support[i];
        for (std::uint64_t j = i + 1; j < k; ++j) support[j] = support[j - 1] + 1;
        break;
      }
      if (i == 0) return result;
    }
  }
}

}  // namespace riplab
