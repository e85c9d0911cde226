#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamvc/constructions.hpp"
#include "hamvc/hamming.hpp"
#include "hamvc/shatter.hpp"

namespace hamvc {

// Identifiers of the externally stated claims this harness can exercise.
// They are opaque labels as far as the code is concerned; the statement data
// lives in expand_claim.
enum class ClaimId { P1_1, T1_2, T1_3, C1_4, P1_5, P1_6, P1_8, T1_8t2, L3_1, L4_1 };

std::string_view claim_id_name(ClaimId id);
std::optional<ClaimId> claim_id_from_name(std::string_view name);
const std::vector<ClaimId>& all_claim_ids();

enum class ClaimShape {
  Universal,  // every size-m subset satisfies the vc relation
  Tightness,  // a named construction of exact size m satisfies it
  Property,   // sampled implication over random subsets
};

enum class VcRelation { AtLeast, Equal, AtMost };

struct ClaimSpec {
  ClaimId id = ClaimId::P1_1;
  ClaimShape shape = ClaimShape::Universal;
  HammingParams params;
  // Universal: subset size enumerated. Tightness: expected construction size.
  std::uint64_t m = 0;
  int k = 0;
  VcRelation relation = VcRelation::AtLeast;
  std::optional<ConstructionSpec> construction;  // Tightness only
  std::uint64_t property_samples = 0;            // Property only
  std::string note;  // carried into the report annotation
};

// What one claim id means at a given q (and optionally d, for the claims
// parameterized by ambient dimension). Returns every runnable piece; empty
// when the claim does not apply at these parameters (wrong parity, q too
// small).
std::vector<ClaimSpec> expand_claim(ClaimId id, int q,
                                    std::optional<int> d = std::nullopt);

struct Budget {
  std::uint64_t work_cap = 10'000'000;  // subsets examined, not wall time
  std::uint64_t samples = 100'000;
  std::optional<std::uint64_t> seed;  // mandatory for anything sampled
  int jobs = 1;
  // Called with (done, total) every progress_interval subsets; total is 0
  // when unknown in advance.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
  std::uint64_t progress_interval = 1 << 16;
  std::uint64_t vertex_cap = kDefaultVertexCap;
};

enum class RunMode { Exhaustive, Sampled, Constructive };
enum class Outcome { Verified, Refuted, Infeasible };

std::string_view run_mode_name(RunMode m);
std::string_view outcome_name(Outcome o);

struct VerificationReport {
  ClaimSpec claim;
  RunMode mode = RunMode::Exhaustive;
  std::uint64_t samples = 0;  // sampled mode only
  std::optional<std::uint64_t> seed;
  Outcome outcome = Outcome::Verified;
  std::string reason;      // infeasible explanation
  std::string annotation;  // notes worth surfacing (discrepancies, warnings)
  std::optional<PointSet> counterexample;
  std::optional<VcResult> counterexample_vc;
  std::uint64_t work = 0;
  double elapsed_seconds = 0.0;
};

// Universal claims. Exhaustive mode reports infeasible when C(q^d, m)
// exceeds budget.work_cap; sampled mode draws budget-derived m-subsets from
// the seeded generator and requires a seed.
VerificationReport check_universal(const ClaimSpec& claim, RunMode mode,
                                   const Budget& budget);

// Tightness and other constructive claims: builds the named construction,
// asserts its exact size, the vc relation, and per-claim structure checks.
VerificationReport check_tightness(const ClaimSpec& claim, const Budget& budget);
VerificationReport check_tightness(ClaimId id, int q, const Budget& budget);

// Sampled implication claims (random subsets, Bernoulli(1/2) per vertex for
// the line-forcing claims, uniform m-subsets for the pigeonhole claim).
VerificationReport check_property(const ClaimSpec& claim, const Budget& budget);

// Runs claims in order, downgrading exhaustive universal checks to sampled
// when the work cap demands (recording that in the report), and never throws
// for individual infeasibilities.
std::vector<VerificationReport> run_suite(const std::vector<ClaimSpec>& claims,
                                          const Budget& budget);

// 1 if any report refuted, else 2 if any infeasible, else 0.
int suite_exit_code(const std::vector<VerificationReport>& reports);

struct InfeasibleError : std::runtime_error {
  InfeasibleError(const std::string& message, std::string projected_count);
  std::string projected;
};

struct ThresholdResult {
  int m_star = 0;
  PointSet certificate;
  std::uint64_t work = 0;
  double elapsed_seconds = 0.0;
};

// Maximum-cardinality subset with vc < k by monotone DFS (supersets of a
// high-vc set are never extended); m* = |certificate| + 1. The certificate
// is the lexicographically least maximum set because the search runs in lex
// preorder. Throws InfeasibleError when the projected enumeration exceeds
// the work cap.
ThresholdResult threshold_search(const HammingParams& params, int k,
                                 const Budget& budget);

// min(C(n, k), cap + 1), overflow-safe.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap);

}  // namespace hamvc
