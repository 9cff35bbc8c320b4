#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "riplab/field.hpp"

namespace riplab {

struct RrefResult {
  std::vector<FpVector> rows;  // same shape as the input, reduced
  std::size_t rank = 0;
};

/// Reduced row-echelon form over F_p. Pivots are 1 with zeros above and
/// below; pivot columns strictly increase. Row space is preserved.
RrefResult rref(std::vector<FpVector> rows, const FieldParams& params);

/// d-dimensional subspace of F_p^n held as a reduced-echelon basis. The RREF
/// basis is canonical, so equality of subspaces is equality of bases.
class Subspace {
 public:
  static Subspace span_of(const std::vector<FpVector>& vectors);
  static Subspace zero(const FieldParams& params);
  /// span{e_1, ..., e_d}.
  static Subspace coordinate(const FieldParams& params, std::uint32_t d);
  /// Internal/test constructor: rows must already be a RREF basis of rank
  /// rows.size(); validated.
  static Subspace from_echelon_basis(const FieldParams& params, std::vector<FpVector> rows);

  const FieldParams& params() const { return params_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
  const std::vector<FpVector>& basis() const { return basis_; }

  bool contains(const FpVector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace& a, const Subspace& b) { return a.basis_ <=> b.basis_; }

 private:
  Subspace(FieldParams params, std::vector<FpVector> basis) : params_(params), basis_(std::move(basis)) {}
  FieldParams params_;
  std::vector<FpVector> basis_;  // RREF rows, no zero rows
};

/// Inner products of a row against the canonical basis of V: the realization
/// of the projection map used by the shattering test. Two rows get the same
/// signature iff they agree on every Fourier column indexed by an element
/// of V.
struct Signature {
  std::vector<std::uint32_t> values;  // residues in [0, p), length dim V

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature& a, const Signature& b) { return a.values <=> b.values; }
};

Signature signature(const FpVector& r, const Subspace& v);

/// Position of s in the lexicographic enumeration of F_p^d.
std::uint64_t signature_rank(const Signature& s, std::uint32_t p);
Signature signature_from_rank(std::uint32_t p, std::uint32_t d, std::uint64_t rank);

/// Basis of V1 ∩ V2 via the Zassenhaus block construction. Deliberately not
/// computed from the dimension formula so the two routes can check each other.
Subspace intersection(const Subspace& v1, const Subspace& v2);
std::uint32_t intersection_dim(const Subspace& v1, const Subspace& v2);

/// All p^d elements of v, ordered lexicographically by coefficient vector
/// against the canonical basis.
std::vector<FpVector> enumerate_subspace(const Subspace& v);

/// Element of v with the given coefficient vector (lexicographic rank) against
/// the canonical basis.
FpVector subspace_element(const Subspace& v, std::uint64_t coeff_rank);

}  // namespace riplab
