#include "riplab/field.hpp"

#include <stdexcept>
#include <string>

namespace riplab {

bool is_prime(std::uint32_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

FieldParams::FieldParams(std::uint32_t p_, std::uint32_t n_) : p(p_), n(n_) {
  if (!is_prime(p)) throw std::invalid_argument("FieldParams: p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("FieldParams: n must be >= 1");
  order();  // overflow check
}

std::uint64_t FieldParams::order() const {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (result > (UINT64_MAX >> 2) / p) throw std::overflow_error("FieldParams: p^n does not fit the index range");
    result *= p;
  }
  return result;
}

FpVector::FpVector(FieldParams params_, std::vector<std::uint32_t> coords_)
    : params(params_), coords(std::move(coords_)) {
  if (coords.size() != params.n) throw std::invalid_argument("FpVector: coordinate count does not match ambient n");
  for (auto c : coords) {
    if (c >= params.p) throw std::invalid_argument("FpVector: coordinate out of range [0, p)");
  }
}

FpVector FpVector::zero(const FieldParams& params) {
  return FpVector(params, std::vector<std::uint32_t>(params.n, 0));
}

FpVector FpVector::unit(const FieldParams& params, std::uint32_t axis) {
  if (axis >= params.n) throw std::invalid_argument("FpVector::unit: axis out of range");
  std::vector<std::uint32_t> c(params.n, 0);
  c[axis] = 1;
  return FpVector(params, std::move(c));
}

bool FpVector::is_zero() const {
  for (auto c : coords) {
    if (c != 0) return false;
  }
  return true;
}

void require_same_params(const FieldParams& a, const FieldParams& b, const char* where) {
  if (!(a == b)) throw std::invalid_argument(std::string(where) + ": ambient parameters do not match");
}

FpVector operator+(const FpVector& a, const FpVector& b) {
  require_same_params(a.params, b.params, "FpVector::operator+");
  FpVector r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = (r.coords[i] + b.coords[i]) % a.params.p;
  return r;
}

FpVector operator-(const FpVector& a, const FpVector& b) {
  require_same_params(a.params, b.params, "FpVector::operator-");
  FpVector r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = (r.coords[i] + a.params.p - b.coords[i]) % a.params.p;
  return r;
}

FpVector operator*(std::uint32_t c, const FpVector& v) {
  FpVector r = v;
  const std::uint64_t cc = c % v.params.p;
  for (auto& x : r.coords) x = static_cast<std::uint32_t>((cc * x) % v.params.p);
  return r;
}

std::uint32_t dot(const FpVector& a, const FpVector& b) {
  require_same_params(a.params, b.params, "dot");
  std::uint64_t acc = 0;
  const std::uint64_t p = a.params.p;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    acc = (acc + static_cast<std::uint64_t>(a.coords[i]) * b.coords[i]) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::invalid_argument("mod_inverse: zero has no inverse");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint64_t vector_rank(const FpVector& v) {
  std::uint64_t rank = 0;
  for (auto c : v.coords) rank = rank * v.params.p + c;
  return rank;
}

FpVector vector_from_rank(const FieldParams& params, std::uint64_t rank) {
  std::vector<std::uint32_t> coords(params.n, 0);
  for (std::uint32_t i = params.n; i-- > 0;) {
    coords[i] = static_cast<std::uint32_t>(rank % params.p);
    rank /= params.p;
  }
  if (rank != 0) throw std::invalid_argument("vector_from_rank: rank exceeds p^n");
  return FpVector(params, std::move(coords));
}

std::vector<FpVector> enumerate_space(const FieldParams& params) {
  const std::uint64_t total = params.order();
  if (total > (1ULL << 24)) throw std::overflow_error("enumerate_space: p^n too large to enumerate");
  std::vector<FpVector> out;
  out.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) out.push_back(vector_from_rank(params, r));
  return out;
}

}  // namespace riplab
