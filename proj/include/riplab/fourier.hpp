#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "riplab/shatter.hpp"

namespace riplab {

/// Row-major complex matrix, sized for q x N submatrices with q*N modest.
struct ComplexDenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> data;

  ComplexDenseMatrix() = default;
  ComplexDenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  std::complex<double>& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Character matrix block: entry (a, b) = omega^(<row_a, col_b>) with
/// omega = exp(2 pi i / p).
ComplexDenseMatrix fourier_submatrix(const std::vector<FpVector>& row_index,
                                     const std::vector<FpVector>& col_index, const FieldParams& params);

/// Rows of the sampled sequence against all N = p^n columns in lex order.
ComplexDenseMatrix fourier_submatrix(const SampleSeq& q_seq);

/// y = M x.
std::vector<std::complex<double>> apply(const ComplexDenseMatrix& m, const std::vector<std::complex<double>>& x);

/// ||A_{Q,.} x||_2 for a claimed kernel certificate x, computed on the support
/// columns only. Annihilation holds when this is <= 1e-9 * sqrt(q k).
double certificate_residual(const SampleSeq& q_seq, const SparseCertificate& cert);

struct RipEstimate {
  std::uint64_t k = 0;
  double epsilon = 0.0;
  // Lex-smallest size-k support attaining epsilon, as column ranks.
  std::vector<std::uint64_t> witness_support;
  std::uint64_t supports_checked = 0;
};

/// Exact RIP constant of M = A_{Q,.} / sqrt(q) at sparsity k: the max over all
/// size-k column supports S of max(lambda_max(G_S) - 1, 1 - lambda_min(G_S))
/// with G_S the Gram matrix of the selected columns. Cost is C(N, k) dense
/// eigensolves, so calls are refused past 10^6 supports.
RipEstimate rip_epsilon(const SampleSeq& q_seq, std::uint64_t k);

/// Eigenvalue range {lambda_min, lambda_max} of the Gram matrix of the columns
/// in `support` of A_{Q,.} / sqrt(q).
std::pair<double, double> gram_eigen_range(const SampleSeq& q_seq, const std::vector<std::uint64_t>& support);

}  // namespace riplab
