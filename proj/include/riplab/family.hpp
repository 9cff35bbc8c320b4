#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riplab/linalg.hpp"
#include "riplab/rng.hpp"

namespace riplab {

/// A collection of dim-d subspaces with every pairwise intersection of
/// dimension at most max_int_dim. The invariants are checked by
/// verify_family, never assumed.
struct SubspaceFamily {
  FieldParams params;
  std::uint32_t dim = 0;
  std::uint32_t max_int_dim = 0;
  std::vector<Subspace> members;
  // build_family hit max_attempts before reaching its target size.
  bool exhausted = false;

  std::size_t size() const { return members.size(); }
};

/// Uniformly random d-dimensional subspace: draw uniform vectors, keep the
/// ones that grow the rank, stop at rank d. Every subspace has the same
/// number of ordered bases, so the result is uniform.
Subspace random_subspace(const FieldParams& params, std::uint32_t d, Rng& rng);
Subspace random_subspace(const FieldParams& params, std::uint32_t d, std::uint64_t rng_seed);

/// Greedy accumulation: draw candidates, accept one iff it is distinct from
/// and has intersection dimension <= max_int_dim with every accepted member.
/// Stops at target_size or after max_attempts draws (0 means 1000 x target),
/// setting `exhausted` in the latter case. Partial families are valid output.
SubspaceFamily build_family(const FieldParams& params, std::uint32_t d, std::uint32_t max_int_dim,
                            std::size_t target_size, std::uint64_t rng_seed, std::uint64_t max_attempts = 0);

/// Recomputes every member dimension, pairwise distinctness, and pairwise
/// intersection dimension. True iff all invariants hold.
bool verify_family(const SubspaceFamily& family);

/// {p, n, d, max_int_dim, members: [[basis rows as integer arrays]]}
std::string family_to_json(const SubspaceFamily& family);
SubspaceFamily family_from_json(const std::string& text);

}  // namespace riplab
