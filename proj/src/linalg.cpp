#include "riplab/linalg.hpp"

#include <stdexcept>

namespace riplab {

RrefResult rref(std::vector<FpVector> rows, const FieldParams& params) {
  for (const auto& r : rows) require_same_params(r.params, params, "rref");
  const std::uint32_t p = params.p;
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = params.n;

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n_cols && pivot_row < n_rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < n_rows && rows[sel].coords[col] == 0) ++sel;
    if (sel == n_rows) continue;
    std::swap(rows[pivot_row], rows[sel]);

    const std::uint64_t inv = mod_inverse(rows[pivot_row].coords[col], p);
    for (std::size_t j = col; j < n_cols; ++j) {
      rows[pivot_row].coords[j] = static_cast<std::uint32_t>((inv * rows[pivot_row].coords[j]) % p);
    }
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == pivot_row || rows[i].coords[col] == 0) continue;
      const std::uint64_t factor = rows[i].coords[col];
      for (std::size_t j = col; j < n_cols; ++j) {
        const std::uint64_t sub = (factor * rows[pivot_row].coords[j]) % p;
        rows[i].coords[j] = static_cast<std::uint32_t>((rows[i].coords[j] + p - sub) % p);
      }
    }
    ++pivot_row;
  }
  return RrefResult{std::move(rows), pivot_row};
}

Subspace Subspace::span_of(const std::vector<FpVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("Subspace::span_of: empty spanning set");
  const FieldParams params = vectors.front().params;
  for (const auto& v : vectors) require_same_params(v.params, params, "Subspace::span_of");
  RrefResult red = rref(vectors, params);
  red.rows.resize(red.rank);  // drop zero rows
  return Subspace(params, std::move(red.rows));
}

Subspace Subspace::zero(const FieldParams& params) { return Subspace(params, {}); }

Subspace Subspace::coordinate(const FieldParams& params, std::uint32_t d) {
  if (d > params.n) throw std::invalid_argument("Subspace::coordinate: d > n");
  std::vector<FpVector> rows;
  rows.reserve(d);
  for (std::uint32_t i = 0; i < d; ++i) rows.push_back(FpVector::unit(params, i));
  return Subspace(params, std::move(rows));
}

Subspace Subspace::from_echelon_basis(const FieldParams& params, std::vector<FpVector> rows) {
  RrefResult check = rref(rows, params);
  if (check.rank != rows.size() || check.rows != rows) {
    throw std::invalid_argument("Subspace::from_echelon_basis: rows are not a reduced-echelon basis");
  }
  return Subspace(params, std::move(rows));
}

bool Subspace::contains(const FpVector& v) const {
  require_same_params(v.params, params_, "Subspace::contains");
  // reduce v against the echelon basis; contained iff the residue vanishes
  FpVector r = v;
  const std::uint32_t p = params_.p;
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (b.coords[pivot] == 0) ++pivot;
    const std::uint64_t factor = r.coords[pivot];
    if (factor == 0) continue;
    for (std::size_t j = pivot; j < r.coords.size(); ++j) {
      const std::uint64_t sub = (factor * b.coords[j]) % p;
      r.coords[j] = static_cast<std::uint32_t>((r.coords[j] + p - sub) % p);
    }
  }
  return r.is_zero();
}

Signature signature(const FpVector& r, const Subspace& v) {
  require_same_params(r.params, v.params(), "signature");
  Signature s;
  s.values.reserve(v.dim());
  for (const auto& b : v.basis()) s.values.push_back(dot(r, b));
  return s;
}

std::uint64_t signature_rank(const Signature& s, std::uint32_t p) {
  std::uint64_t rank = 0;
  for (auto val : s.values) rank = rank * p + val;
  return rank;
}

Signature signature_from_rank(std::uint32_t p, std::uint32_t d, std::uint64_t rank) {
  Signature s;
  s.values.assign(d, 0);
  for (std::uint32_t i = d; i-- > 0;) {
    s.values[i] = static_cast<std::uint32_t>(rank % p);
    rank /= p;
  }
  if (rank != 0) throw std::invalid_argument("signature_from_rank: rank exceeds p^d");
  return s;
}

Subspace intersection(const Subspace& v1, const Subspace& v2) {
  require_same_params(v1.params(), v2.params(), "intersection");
  const FieldParams& params = v1.params();
  if (v1.dim() == 0 || v2.dim() == 0) return Subspace::zero(params);

  // Zassenhaus: reduce [B1 | B1; B2 | 0]; rows with zero left half carry an
  // intersection basis in the right half.
  const FieldParams wide(params.p, 2 * params.n);
  std::vector<FpVector> block;
  block.reserve(v1.dim() + v2.dim());
  for (const auto& b : v1.basis()) {
    std::vector<std::uint32_t> c(b.coords);
    c.insert(c.end(), b.coords.begin(), b.coords.end());
    block.emplace_back(wide, std::move(c));
  }
  for (const auto& b : v2.basis()) {
    std::vector<std::uint32_t> c(b.coords);
    c.resize(2 * params.n, 0);
    block.emplace_back(wide, std::move(c));
  }
  RrefResult red = rref(std::move(block), wide);

  std::vector<FpVector> intersection_rows;
  for (std::size_t i = 0; i < red.rank; ++i) {
    const auto& row = red.rows[i].coords;
    bool left_zero = true;
    for (std::size_t j = 0; j < params.n; ++j) {
      if (row[j] != 0) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    std::vector<std::uint32_t> right(row.begin() + params.n, row.end());
    intersection_rows.emplace_back(params, std::move(right));
  }
  if (intersection_rows.empty()) return Subspace::zero(params);
  return Subspace::span_of(intersection_rows);
}

std::uint32_t intersection_dim(const Subspace& v1, const Subspace& v2) {
  return intersection(v1, v2).dim();
}

std::vector<FpVector> enumerate_subspace(const Subspace& v) {
  const FieldParams& params = v.params();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < v.dim(); ++i) {
    if (total > (1ULL << 24) / params.p) throw std::overflow_error("enumerate_subspace: p^d too large to enumerate");
    total *= params.p;
  }
  std::vector<FpVector> out;
  out.reserve(total);
  for (std::uint64_t rank = 0; rank < total; ++rank) out.push_back(subspace_element(v, rank));
  return out;
}

FpVector subspace_element(const Subspace& v, std::uint64_t coeff_rank) {
  const FieldParams& params = v.params();
  FpVector elem = FpVector::zero(params);
  const std::uint32_t d = v.dim();
  const std::uint32_t p = params.p;
  for (std::uint32_t i = d; i-- > 0;) {
    const std::uint32_t c = static_cast<std::uint32_t>(coeff_rank % p);
    coeff_rank /= p;
    if (c != 0) elem = elem + c * v.basis()[i];
  }
  if (coeff_rank != 0) throw std::invalid_argument("subspace_element: coefficient rank exceeds p^d");
  return elem;
}

}  // namespace riplab
