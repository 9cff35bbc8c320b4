#include "riplab/family.hpp"

#include <json.hpp>
#include <stdexcept>

namespace riplab {

namespace {

FpVector random_vector(const FieldParams& params, Rng& rng) {
  std::vector<std::uint32_t> coords(params.n);
  for (auto& c : coords) c = static_cast<std::uint32_t>(rng.next_below(params.p));
  return FpVector(params, std::move(coords));
}

}  // namespace

Subspace random_subspace(const FieldParams& params, std::uint32_t d, Rng& rng) {
  if (d > params.n) throw std::invalid_argument("random_subspace: d must not exceed n");
  if (d == 0) return Subspace::zero(params);
  std::vector<FpVector> accepted;
  accepted.reserve(d);
  std::size_t rank = 0;
  while (rank < d) {
    accepted.push_back(random_vector(params, rng));
    const std::size_t new_rank = rref(accepted, params).rank;
    if (new_rank > rank) {
      rank = new_rank;
    } else {
      accepted.pop_back();
    }
  }
  return Subspace::span_of(accepted);
}

Subspace random_subspace(const FieldParams& params, std::uint32_t d, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return random_subspace(params, d, rng);
}

SubspaceFamily build_family(const FieldParams& params, std::uint32_t d, std::uint32_t max_int_dim,
                            std::size_t target_size, std::uint64_t rng_seed, std::uint64_t max_attempts) {
  if (target_size < 1) throw std::invalid_argument("build_family: target_size must be at least 1");
  if (max_attempts == 0) max_attempts = 1000 * static_cast<std::uint64_t>(target_size);

  SubspaceFamily family{params, d, max_int_dim, {}, false};
  Rng rng(rng_seed);
  std::uint64_t attempts = 0;
  while (family.members.size() < target_size && attempts < max_attempts) {
    ++attempts;
    Subspace candidate = random_subspace(params, d, rng);
    bool ok = true;
    for (const Subspace& member : family.members) {
      if (candidate == member || intersection_dim(candidate, member) > max_int_dim) {
        ok = false;
        break;
      }
    }
    if (ok) family.members.push_back(std::move(candidate));
  }
  family.exhausted = family.members.size() < target_size;
  return family;
}

bool verify_family(const SubspaceFamily& family) {
  const auto& members = family.members;
  for (const Subspace& m : members) {
    if (m.params() != family.params || m.dim() != family.dim) return false;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) return false;
      if (intersection_dim(members[i], members[j]) > family.max_int_dim) return false;
    }
  }
  return true;
}

std::string family_to_json(const SubspaceFamily& family) {
  nlohmann::json doc;
  doc["p"] = family.params.p;
  doc["n"] = family.params.n;
  doc["d"] = family.dim;
  doc["max_int_dim"] = family.max_int_dim;
  auto members = nlohmann::json::array();
  for (const Subspace& m : family.members) {
    auto basis = nlohmann::json::array();
    for (const FpVector& row : m.basis()) basis.push_back(row.coords);
    members.push_back(std::move(basis));
  }
  doc["members"] = std::move(members);
  return doc.dump(2);
}

SubspaceFamily family_from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  const FieldParams params(doc.at("p").get<std::uint32_t>(), doc.at("n").get<std::uint32_t>());
  SubspaceFamily family{params, doc.at("d").get<std::uint32_t>(), doc.at("max_int_dim").get<std::uint32_t>(), {}, false};
  for (const auto& basis_json : doc.at("members")) {
    std::vector<FpVector> basis;
    for (const auto& row_json : basis_json) {
      basis.emplace_back(params, row_json.get<std::vector<std::uint32_t>>());
    }
    Subspace member = Subspace::from_echelon_basis(params, basis);
    if (member.dim() != family.dim) {
      throw std::invalid_argument("family_from_json: member dimension does not match d");
    }
    family.members.push_back(std::move(member));
  }
  return family;
}

}  // namespace riplab
