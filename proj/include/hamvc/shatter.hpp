#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamvc/hamming.hpp"

// Shattering of a subset W of U by the neighborhood family {n(u) : u in U}:
// every S subseteq W must equal n(u) ∩ W for some u in U. The dimension of
// (U, n(U)) is the size of the largest shattered W.

namespace hamvc {

struct ShatterWitness {
  // Shattered set, ascending point order.
  std::vector<Point> set;
  // One realizer per subset of `set`; index is the bitmask over `set`
  // (bit i corresponds to set[i]), so assignments.size() == 2^set.size().
  std::vector<Point> assignments;
};

struct VcResult {
  int dimension = -1;
  std::optional<ShatterWitness> witness;
  // dimension + 1 when the search at that size ran to completion empty.
  std::optional<int> refuted_at;
};

inline constexpr int kDefaultMaxK = 4;
inline constexpr int kDefaultMaxWitnessSize = 5;

// Realizers for every subset of w, or nullopt. If the check fails and
// first_missing is non-null it receives the smallest unrealized bitmask.
// w must consist of distinct members of u; sizes above max_size are rejected.
std::optional<ShatterWitness> shatters(const std::vector<Point>& w,
                                       const PointSet& u,
                                       int max_size = kDefaultMaxWitnessSize,
                                       std::uint32_t* first_missing = nullptr);

// Largest shattered size, searching |W| = 1, 2, ... up to
// min(max_k, floor(log2 |U|), |U|). Deterministic: the witness is the
// lexicographically least shattered set of maximal size, with the first
// qualifying member (in index order) realizing each subset.
// Empty U reports dimension -1.
VcResult vc_dimension(const PointSet& u,
                      std::optional<int> max_k = std::nullopt);

// True when some W of size exactly k is shattered (k = 0 needs only a
// nonempty U).
bool has_vc_at_least(const PointSet& u, int k);

bool validate_witness(const ShatterWitness& w, const PointSet& u,
                      std::string* diagnostic = nullptr);

// Bulk yes/no dimension probe over member-index subsets of one parameter set.
// Uses single-word neighborhood masks when q^d <= 64. Members must be strictly
// ascending vertex indices.
class SubsetProbe {
 public:
  explicit SubsetProbe(const HammingParams& p,
                       std::uint64_t cap = kDefaultVertexCap);
  const HammingParams& params() const { return params_; }
  bool vc_at_least(std::span<const std::uint64_t> members, int k) const;
  // min(dimension, max_k + 1): values above max_k are not distinguished.
  int vc_capped(std::span<const std::uint64_t> members, int max_k) const;

 private:
  HammingParams params_;
  std::uint64_t universe_;
  bool small_;
  std::vector<std::uint64_t> nbr_;  // per-vertex masks when small_
};

}  // namespace hamvc
