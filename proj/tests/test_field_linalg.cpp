#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "riplab/field.hpp"
#include "riplab/linalg.hpp"
#include "riplab/rng.hpp"

using namespace riplab;

namespace {

FpVector vec(const FieldParams& params, std::initializer_list<std::uint32_t> coords) {
  return FpVector(params, std::vector<std::uint32_t>(coords));
}

/// Random full-rank d x d matrix over F_p, by rejection.
std::vector<std::vector<std::uint32_t>> random_invertible(std::uint32_t d, std::uint32_t p, Rng& rng) {
  const FieldParams square(p, d);
  while (true) {
    std::vector<FpVector> rows;
    for (std::uint32_t i = 0; i < d; ++i) {
      std::vector<std::uint32_t> coords(d);
      for (auto& c : coords) c = static_cast<std::uint32_t>(rng.next_below(p));
      rows.emplace_back(square, std::move(coords));
    }
    if (rref(rows, square).rank == d) {
      std::vector<std::vector<std::uint32_t>> out;
      for (const auto& r : rows) out.push_back(r.coords);
      return out;
    }
  }
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(13));
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(65536));
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(FieldParams(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams(2, 0), std::invalid_argument);
    CHECK(FieldParams(3, 4).order() == 81);
    CHECK(FieldParams(2, 20).order() == 1048576);
    CHECK_THROWS_AS(FieldParams(2, 80).order(), std::overflow_error);
  }

  TEST_CASE("coordinates are validated residues") {
    const FieldParams params(3, 2);
    CHECK_THROWS_AS(FpVector(params, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(FpVector(params, {0, 1, 2}), std::invalid_argument);
    CHECK(vec(params, {2, 1}).coords == std::vector<std::uint32_t>{2, 1});
  }

  TEST_CASE("arithmetic reduces mod p") {
    const FieldParams params(5, 3);
    const FpVector a = vec(params, {4, 2, 0});
    const FpVector b = vec(params, {3, 4, 1});
    CHECK((a + b).coords == std::vector<std::uint32_t>{2, 1, 1});
    CHECK((a - b).coords == std::vector<std::uint32_t>{1, 3, 4});
    CHECK((3 * a).coords == std::vector<std::uint32_t>{2, 1, 0});
    CHECK(dot(a, b) == (4 * 3 + 2 * 4 + 0) % 5);
  }

  TEST_CASE("every nonzero residue has an inverse") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 97u}) {
      for (std::uint32_t a = 1; a < p; ++a) {
        CHECK(static_cast<std::uint64_t>(a) * mod_inverse(a, p) % p == 1);
      }
    }
  }

  TEST_CASE("lexicographic rank round trip") {
    const FieldParams params(3, 3);
    for (std::uint64_t rank = 0; rank < params.order(); ++rank) {
      CHECK(vector_rank(vector_from_rank(params, rank)) == rank);
    }
    // coords[0] is the most significant digit
    CHECK(vector_from_rank(params, 9).coords == std::vector<std::uint32_t>{1, 0, 0});
    const auto space = enumerate_space(params);
    CHECK(space.size() == 27);
    CHECK(std::is_sorted(space.begin(), space.end(),
                         [](const FpVector& a, const FpVector& b) { return a.coords < b.coords; }));
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("reduction leaves an identity alone") {
    const FieldParams params(2, 3);
    std::vector<FpVector> rows{vec(params, {1, 0, 0}), vec(params, {0, 1, 0}), vec(params, {0, 0, 1})};
    const auto result = rref(rows, params);
    CHECK(result.rank == 3);
    CHECK(result.rows == rows);
  }

  TEST_CASE("reduction of the zero matrix") {
    const FieldParams params(3, 3);
    const std::vector<FpVector> rows{FpVector::zero(params), FpVector::zero(params)};
    const auto result = rref(rows, params);
    CHECK(result.rank == 0);
    CHECK(result.rows == rows);
  }

  TEST_CASE("linearly dependent rows lose rank but keep their span") {
    const FieldParams params(2, 3);
    const std::vector<FpVector> rows{vec(params, {1, 1, 0}), vec(params, {0, 1, 1}), vec(params, {1, 0, 1})};
    const auto result = rref(rows, params);
    CHECK(result.rank == 2);
    std::vector<FpVector> reduced_basis(result.rows.begin(), result.rows.begin() + 2);
    CHECK(oracles::span_set(reduced_basis, params) == oracles::span_set(rows, params));
  }

  TEST_CASE("row space is preserved for random matrices") {
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
      const std::uint32_t p = (trial % 2 == 0) ? 2 : 3;
      const FieldParams params(p, 4);
      std::vector<FpVector> rows;
      const auto n_rows = 1 + rng.next_below(4);
      for (std::uint64_t i = 0; i < n_rows; ++i) {
        std::vector<std::uint32_t> coords(params.n);
        for (auto& c : coords) c = static_cast<std::uint32_t>(rng.next_below(p));
        rows.emplace_back(params, std::move(coords));
      }
      const auto result = rref(rows, params);
      std::vector<FpVector> basis(result.rows.begin(), result.rows.begin() + static_cast<std::ptrdiff_t>(result.rank));
      CHECK(oracles::span_set(basis, params) == oracles::span_set(rows, params));
    }
  }

  TEST_CASE("span of the zero vector") {
    const FieldParams params(2, 4);
    const Subspace v = Subspace::span_of({FpVector::zero(params)});
    CHECK(v.dim() == 0);
    CHECK(v == Subspace::zero(params));
  }

  TEST_CASE("redundant spanning vectors collapse to the canonical basis") {
    const FieldParams params(2, 4);
    const FpVector e1 = FpVector::unit(params, 0);
    const FpVector e2 = FpVector::unit(params, 1);
    const Subspace v = Subspace::span_of({e1, e2, e1 + e2});
    CHECK(v.dim() == 2);
    CHECK(v.basis() == std::vector<FpVector>{e1, e2});
    CHECK(oracles::element_set(v).size() == 4);
  }

  TEST_CASE("canonical form is invariant under reordering and recombination") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      const std::uint32_t p = (trial % 2 == 0) ? 2 : 5;
      const FieldParams params(p, 5);
      const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng.next_below(3));

      std::vector<FpVector> spanning;
      while (rref(spanning, params).rank < d) {
        std::vector<std::uint32_t> coords(params.n);
        for (auto& c : coords) c = static_cast<std::uint32_t>(rng.next_below(p));
        spanning.emplace_back(params, std::move(coords));
      }
      const Subspace v = Subspace::span_of(spanning);
      const std::uint32_t rank = v.dim();

      std::vector<FpVector> shuffled = spanning;
      for (std::size_t i = shuffled.size(); i > 1; --i) {
        std::swap(shuffled[i - 1], shuffled[rng.next_below(i)]);
      }
      CHECK(Subspace::span_of(shuffled) == v);

      // invertible recombination of a basis spans the same subspace
      const auto mix = random_invertible(rank, p, rng);
      std::vector<FpVector> recombined;
      for (std::uint32_t i = 0; i < rank; ++i) {
        FpVector acc = FpVector::zero(params);
        for (std::uint32_t j = 0; j < rank; ++j) acc = acc + mix[i][j] * v.basis()[j];
        recombined.push_back(acc);
      }
      CHECK(Subspace::span_of(recombined) == v);
    }
  }

  TEST_CASE("echelon constructor rejects non-canonical rows") {
    const FieldParams params(2, 3);
    CHECK_THROWS_AS(Subspace::from_echelon_basis(params, {vec(params, {1, 1, 0}), vec(params, {1, 0, 1})}),
                    std::invalid_argument);
    const Subspace ok = Subspace::from_echelon_basis(params, {vec(params, {1, 0, 1}), vec(params, {0, 1, 1})});
    CHECK(ok.dim() == 2);
  }

  TEST_CASE("membership matches the element set") {
    const FieldParams params(3, 3);
    const Subspace v = Subspace::span_of({vec(params, {1, 2, 0}), vec(params, {0, 1, 1})});
    const auto elements = oracles::element_set(v);
    for (const auto& x : enumerate_space(params)) {
      CHECK(v.contains(x) == (elements.count(x.coords) == 1));
    }
  }

  TEST_CASE("signature of the zero row is zero") {
    const FieldParams params(2, 4);
    const Subspace v = Subspace::coordinate(params, 2);
    CHECK(signature(FpVector::zero(params), v).values == std::vector<std::uint32_t>{0, 0});
  }

  TEST_CASE("signature against a coordinate plane reads off coordinates") {
    const FieldParams params(2, 4);
    const Subspace v = Subspace::coordinate(params, 2);
    CHECK(signature(vec(params, {1, 0, 1, 1}), v).values == std::vector<std::uint32_t>{1, 0});
  }

  TEST_CASE("signatures are equidistributed over the full space") {
    const FieldParams params(2, 4);
    const Subspace v = Subspace::span_of({vec(params, {1, 1, 0, 0}), vec(params, {0, 0, 1, 1})});
    std::vector<std::uint64_t> counts(4, 0);
    for (const auto& r : enumerate_space(params)) {
      ++counts[signature_rank(signature(r, v), params.p)];
    }
    for (const auto c : counts) CHECK(c == 4);
  }

  TEST_CASE("equal signatures mean the difference lies in the dual kernel") {
    for (std::uint32_t n = 2; n <= 4; ++n) {
      const FieldParams params(2, n);
      std::vector<std::uint32_t> coords(n, 0);
      coords[0] = 1;
      coords[n - 1] = 1;
      const Subspace v = Subspace::span_of({FpVector(params, coords)});
      const auto space = enumerate_space(params);
      for (const auto& r : space) {
        for (const auto& w : space) {
          const bool same = signature(r, v) == signature(w, v);
          bool in_kernel = true;
          for (const auto& b : v.basis()) {
            if (dot(r - w, b) != 0) in_kernel = false;
          }
          CHECK(same == in_kernel);
        }
      }
    }
  }

  TEST_CASE("signature ranks cover all of the codomain") {
    for (std::uint32_t p : {2u, 3u}) {
      const FieldParams params(p, 3);
      Rng rng(7 * p);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<FpVector> spanning;
        const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng.next_below(3));
        while (rref(spanning, params).rank < d) {
          std::vector<std::uint32_t> coords(params.n);
          for (auto& c : coords) c = static_cast<std::uint32_t>(rng.next_below(p));
          spanning.emplace_back(params, std::move(coords));
        }
        const Subspace v = Subspace::span_of(spanning);
        std::set<std::uint64_t> seen;
        for (const auto& r : enumerate_space(params)) {
          seen.insert(signature_rank(signature(r, v), p));
        }
        std::uint64_t expected = 1;
        for (std::uint32_t i = 0; i < v.dim(); ++i) expected *= p;
        CHECK(seen.size() == expected);
      }
    }
  }

  TEST_CASE("signature rank round trip") {
    for (std::uint64_t rank = 0; rank < 27; ++rank) {
      CHECK(signature_rank(signature_from_rank(3, 3, rank), 3) == rank);
    }
  }

  TEST_CASE("self intersection is the whole subspace") {
    const FieldParams params(2, 4);
    const Subspace v = Subspace::span_of({vec(params, {1, 0, 1, 0}), vec(params, {0, 1, 0, 1})});
    CHECK(intersection(v, v) == v);
    CHECK(intersection_dim(v, v) == 2);
  }

  TEST_CASE("disjoint coordinate lines") {
    const FieldParams params(2, 4);
    const Subspace v1 = Subspace::span_of({FpVector::unit(params, 0)});
    const Subspace v2 = Subspace::span_of({FpVector::unit(params, 1)});
    CHECK(intersection_dim(v1, v2) == 0);
  }

  TEST_CASE("overlapping coordinate planes intersect in a line") {
    const FieldParams params(2, 4);
    const Subspace v1 = Subspace::span_of({FpVector::unit(params, 0), FpVector::unit(params, 1)});
    const Subspace v2 = Subspace::span_of({FpVector::unit(params, 1), FpVector::unit(params, 2)});
    CHECK(intersection_dim(v1, v2) == 1);
    CHECK(intersection(v1, v2) == Subspace::span_of({FpVector::unit(params, 1)}));
  }

  TEST_CASE("intersection matches element-set intersection") {
    Rng rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
      const std::uint32_t p = (trial % 2 == 0) ? 2 : 3;
      const FieldParams params(p, 4);
      const auto draw = [&] {
        std::vector<FpVector> spanning;
        const std::uint32_t d = static_cast<std::uint32_t>(rng.next_below(3));
        while (rref(spanning, params).rank < d) {
          std::vector<std::uint32_t> coords(params.n);
          for (auto& c : coords) c = static_cast<std::uint32_t>(rng.next_below(p));
          spanning.emplace_back(params, std::move(coords));
        }
        return spanning.empty() ? Subspace::zero(params) : Subspace::span_of(spanning);
      };
      const Subspace v1 = draw();
      const Subspace v2 = draw();

      const auto s1 = oracles::element_set(v1);
      const auto s2 = oracles::element_set(v2);
      std::set<std::vector<std::uint32_t>> expected;
      std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                            std::inserter(expected, expected.begin()));
      CHECK(oracles::element_set(intersection(v1, v2)) == expected);

      // dimension formula cross-check through the sum space
      std::vector<FpVector> joined = v1.basis();
      joined.insert(joined.end(), v2.basis().begin(), v2.basis().end());
      const std::size_t sum_dim = rref(joined, params).rank;
      CHECK(v1.dim() + v2.dim() == sum_dim + intersection_dim(v1, v2));
    }
  }

  TEST_CASE("intersection requires a shared ambient space") {
    const Subspace a = Subspace::coordinate(FieldParams(2, 3), 1);
    const Subspace b = Subspace::coordinate(FieldParams(2, 4), 1);
    CHECK_THROWS_AS(intersection(a, b), std::invalid_argument);
  }

  TEST_CASE("subspace enumeration follows coefficient order") {
    const FieldParams params(3, 2);
    const Subspace line = Subspace::span_of({FpVector::unit(params, 0)});
    const auto elements = enumerate_subspace(line);
    REQUIRE(elements.size() == 3);
    CHECK(elements[0].coords == std::vector<std::uint32_t>{0, 0});
    CHECK(elements[1].coords == std::vector<std::uint32_t>{1, 0});
    CHECK(elements[2].coords == std::vector<std::uint32_t>{2, 0});

    CHECK(enumerate_subspace(Subspace::zero(params)) ==
          std::vector<FpVector>{FpVector::zero(params)});
  }

  TEST_CASE("subspace enumeration is closed under addition") {
    const FieldParams params(2, 3);
    const Subspace v = Subspace::span_of({vec(params, {1, 0, 1}), vec(params, {0, 1, 1})});
    const auto elements = enumerate_subspace(v);
    REQUIRE(elements.size() == 4);
    const auto as_set = oracles::element_set(v);
    for (const auto& a : elements) {
      for (const auto& b : elements) {
        CHECK(as_set.count((a + b).coords) == 1);
      }
    }
    for (std::uint64_t rank = 0; rank < 4; ++rank) {
      CHECK(subspace_element(v, rank) == elements[rank]);
    }
  }
}
