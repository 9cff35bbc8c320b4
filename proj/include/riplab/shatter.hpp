#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "riplab/linalg.hpp"

namespace riplab {

/// Ordered sequence of sampled rows of F_p^n, duplicates allowed.
struct SampleSeq {
  FieldParams params;
  std::vector<FpVector> rows;

  std::size_t q() const { return rows.size(); }
};

struct ShatterReport {
  Subspace subspace;
  bool shattered = false;
  // Lexicographically smallest signature attained by no row; present iff not
  // shattered. A dim-0 subspace has the single empty signature, so an empty
  // sequence never shatters anything.
  std::optional<Signature> missing;
};

/// Does {signature(r, v) : r in q_seq} cover all of F_p^d?
ShatterReport shatters(const SampleSeq& q_seq, const Subspace& v);

/// k-sparse kernel witness of RIP failure: unit-modulus coefficients on the
/// columns indexed by the elements of V, annihilated by every sampled row.
struct SparseCertificate {
  std::vector<FpVector> support;                    // the k elements of V, coefficient-lex order
  std::vector<std::complex<double>> coefficients;   // unit modulus

  std::size_t k() const { return support.size(); }
};

/// For the element with coefficient vector c the coefficient is
/// omega^(-<w*, c>) where w* is the missing signature. Character orthogonality
/// makes every row of A_{Q, V} orthogonal to it.
SparseCertificate kernel_certificate(const SampleSeq& q_seq, const Subspace& v, const ShatterReport& report);

}  // namespace riplab
