#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace riplab {

bool is_prime(std::uint32_t m);

/// Ambient space F_p^n. N = p^n indexes the rows and columns of the Fourier
/// matrix, so p^n must fit comfortably in 64 bits.
struct FieldParams {
  std::uint32_t p = 2;
  std::uint32_t n = 1;

  FieldParams() = default;
  FieldParams(std::uint32_t p_, std::uint32_t n_);

  /// N = p^n.
  std::uint64_t order() const;

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// Element of F_p^n. Coordinates are least non-negative residues and every
/// operation reduces eagerly.
struct FpVector {
  FieldParams params;
  std::vector<std::uint32_t> coords;

  FpVector() = default;
  FpVector(FieldParams params_, std::vector<std::uint32_t> coords_);

  static FpVector zero(const FieldParams& params);
  static FpVector unit(const FieldParams& params, std::uint32_t axis);

  bool is_zero() const;

  friend bool operator==(const FpVector&, const FpVector&) = default;
  // Lexicographic on coordinates; only meaningful for equal params.
  friend auto operator<=>(const FpVector& a, const FpVector& b) { return a.coords <=> b.coords; }
};

FpVector operator+(const FpVector& a, const FpVector& b);
FpVector operator-(const FpVector& a, const FpVector& b);
FpVector operator*(std::uint32_t c, const FpVector& v);

/// <a, b> mod p.
std::uint32_t dot(const FpVector& a, const FpVector& b);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// Position of v in the lexicographic enumeration of F_p^n (coords[0] most
/// significant digit).
std::uint64_t vector_rank(const FpVector& v);
FpVector vector_from_rank(const FieldParams& params, std::uint64_t rank);

/// All p^n vectors in lexicographic order. Guarded against desk-scale abuse.
std::vector<FpVector> enumerate_space(const FieldParams& params);

void require_same_params(const FieldParams& a, const FieldParams& b, const char* where);

}  // namespace riplab
