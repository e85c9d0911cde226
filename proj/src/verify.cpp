#include "hamvc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "hamvc/configs.hpp"

namespace hamvc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct ClaimName {
  ClaimId id;
  std::string_view name;
};

constexpr ClaimName kClaimNames[] = {
    {ClaimId::P1_1, "P1.1"},   {ClaimId::T1_2, "T1.2"},
    {ClaimId::T1_3, "T1.3"},   {ClaimId::C1_4, "C1.4"},
    {ClaimId::P1_5, "P1.5"},   {ClaimId::P1_6, "P1.6"},
    {ClaimId::P1_8, "P1.8"},   {ClaimId::T1_8t2, "T1.8t2"},
    {ClaimId::L3_1, "L3.1"},   {ClaimId::L4_1, "L4.1"},
};

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Rough count for display when the exact value saturates.
std::string binomial_display(std::uint64_t n, std::uint64_t k,
                             std::uint64_t cap) {
  std::uint64_t exact = binomial_capped(n, k, cap);
  std::ostringstream os;
  os << "C(" << n << "," << k << ")";
  if (exact <= cap) {
    os << " = " << exact;
  } else {
    double lg = std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
                std::lgamma(double(n - k) + 1);
    os << " (about " << std::scientific << std::exp(lg) << ")";
  }
  return os.str();
}

// Unbiased draw from [0, n) using raw generator output; avoids the
// implementation-defined std::uniform_int_distribution so equal seeds give
// equal reports everywhere.
std::uint64_t bounded(std::mt19937_64& g, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t x = g();
    if (x >= threshold) return x % n;
  }
}

// Uniform m-subset of [0, n) by selection sampling: one pass, include vertex
// v with probability (still needed)/(still available).
std::vector<std::uint64_t> sample_m_subset(std::mt19937_64& g, std::uint64_t n,
                                           std::uint64_t m) {
  std::vector<std::uint64_t> out;
  out.reserve(m);
  std::uint64_t need = m;
  for (std::uint64_t v = 0; v < n && need > 0; ++v) {
    if (bounded(g, n - v) < need) {
      out.push_back(v);
      --need;
    }
  }
  return out;
}

std::vector<std::uint64_t> sample_bernoulli_subset(std::mt19937_64& g,
                                                   std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < n; ++v) {
    if (g() & 1) out.push_back(v);
  }
  return out;
}

bool next_combination(std::vector<std::uint64_t>& c, std::uint64_t n) {
  const std::uint64_t m = c.size();
  for (std::uint64_t i = m; i-- > 0;) {
    if (c[i] + (m - i) < n) {
      ++c[i];
      for (std::uint64_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Lex rank to combination (combinatorial number system).
std::vector<std::uint64_t> unrank_combination(std::uint64_t rank,
                                              std::uint64_t n,
                                              std::uint64_t m) {
  std::vector<std::uint64_t> out;
  out.reserve(m);
  std::uint64_t v = 0;
  for (std::uint64_t pos = 0; pos < m; ++pos) {
    for (;; ++v) {
      std::uint64_t rest =
          binomial_capped(n - v - 1, m - pos - 1, ~std::uint64_t{1});
      if (rank < rest) {
        out.push_back(v);
        ++v;
        break;
      }
      rank -= rest;
    }
  }
  return out;
}

bool relation_holds(const SubsetProbe& probe,
                    std::span<const std::uint64_t> mem, int k,
                    VcRelation rel) {
  switch (rel) {
    case VcRelation::AtLeast:
      return probe.vc_at_least(mem, k);
    case VcRelation::Equal:
      return probe.vc_at_least(mem, k) && !probe.vc_at_least(mem, k + 1);
    case VcRelation::AtMost:
      return !probe.vc_at_least(mem, k + 1);
  }
  return false;
}

bool relation_holds_value(int dimension, int k, VcRelation rel) {
  switch (rel) {
    case VcRelation::AtLeast:
      return dimension >= k;
    case VcRelation::Equal:
      return dimension == k;
    case VcRelation::AtMost:
      return dimension <= k;
  }
  return false;
}

void attach_counterexample(VerificationReport& report, const PointSet& u) {
  report.outcome = Outcome::Refuted;
  report.counterexample = u;
  report.counterexample_vc = vc_dimension(u);
}

}  // namespace

std::string_view claim_id_name(ClaimId id) {
  for (const auto& cn : kClaimNames) {
    if (cn.id == id) return cn.name;
  }
  return "?";
}

std::optional<ClaimId> claim_id_from_name(std::string_view name) {
  for (const auto& cn : kClaimNames) {
    if (cn.name == name) return cn.id;
  }
  return std::nullopt;
}

const std::vector<ClaimId>& all_claim_ids() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& cn : kClaimNames) v.push_back(cn.id);
    return v;
  }();
  return ids;
}

std::string_view run_mode_name(RunMode m) {
  switch (m) {
    case RunMode::Exhaustive:
      return "exhaustive";
    case RunMode::Sampled:
      return "sampled";
    case RunMode::Constructive:
      return "constructive";
  }
  return "?";
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Verified:
      return "verified";
    case Outcome::Refuted:
      return "refuted";
    case Outcome::Infeasible:
      return "infeasible";
  }
  return "?";
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

InfeasibleError::InfeasibleError(const std::string& message,
                                 std::string projected_count)
    : std::runtime_error(message), projected(std::move(projected_count)) {}

std::vector<ClaimSpec> expand_claim(ClaimId id, int q, std::optional<int> d) {
  std::vector<ClaimSpec> out;
  auto universal = [&](HammingParams p, std::uint64_t m, int k, VcRelation rel) {
    ClaimSpec c;
    c.id = id;
    c.shape = ClaimShape::Universal;
    c.params = p;
    c.m = m;
    c.k = k;
    c.relation = rel;
    out.push_back(std::move(c));
  };
  auto tightness = [&](HammingParams p, ConstructionSpec cs, std::uint64_t m,
                       int k, VcRelation rel, std::string note = {}) {
    ClaimSpec c;
    c.id = id;
    c.shape = ClaimShape::Tightness;
    c.params = p;
    c.construction = cs;
    c.m = m;
    c.k = k;
    c.relation = rel;
    c.note = std::move(note);
    out.push_back(std::move(c));
  };
  auto property = [&](HammingParams p, std::uint64_t m, int k,
                      std::uint64_t samples) {
    ClaimSpec c;
    c.id = id;
    c.shape = ClaimShape::Property;
    c.params = p;
    c.m = m;
    c.k = k;
    c.relation = VcRelation::Equal;
    c.property_samples = samples;
    out.push_back(std::move(c));
  };
  switch (id) {
    case ClaimId::P1_1: {
      if (q < 3) break;
      std::vector<int> ds = d ? std::vector<int>{*d} : std::vector<int>{2, 3};
      for (int dd : ds) {
        if (dd < 2) continue;
        universal({dd, q, 1}, 2 * pow_u64(std::uint64_t(q), dd - 1) + 1, 2,
                  VcRelation::AtLeast);
      }
      bool covers_d2 = !d || *d == 2;
      if (covers_d2 && q % 2 == 0 && q >= 4) {
        tightness({2, q, 1}, {ConstructionName::U1, 2, q},
                  2 * std::uint64_t(q), 1, VcRelation::AtMost);
      }
      break;
    }
    case ClaimId::T1_2: {
      if (q < 3 || q % 2 == 0) break;
      universal({2, q, 1}, 2 * std::uint64_t(q), 2, VcRelation::AtLeast);
      tightness({2, q, 1}, {ConstructionName::U1, 2, q},
                2 * std::uint64_t(q) - 1, 1, VcRelation::AtMost);
      break;
    }
    case ClaimId::T1_3: {
      if (q < 4) break;
      universal({2, q, 1}, 3 * std::uint64_t(q) + 1, 3, VcRelation::Equal);
      tightness({2, q, 1}, {ConstructionName::U2, 2, q}, 3 * std::uint64_t(q),
                2, VcRelation::AtMost);
      break;
    }
    case ClaimId::C1_4: {
      int dd = d.value_or(3);
      if (q < 4 || dd < 3) break;
      property({dd, q, 1}, 3 * pow_u64(std::uint64_t(q), dd - 1) + 1, 3, 100);
      break;
    }
    case ClaimId::P1_5: {
      if (q < 4 || q % 2 != 0) break;
      tightness({3, q, 1}, {ConstructionName::U3, 3, q},
                5 * std::uint64_t(q) * std::uint64_t(q) / 4, 1,
                VcRelation::Equal);
      break;
    }
    case ClaimId::P1_6: {
      int dd = d.value_or(2);
      if (q < 2 || dd < 2) break;
      tightness({dd, q, 1}, {ConstructionName::Diag, dd, q},
                pow_u64(std::uint64_t(q), dd - 1), 0, VcRelation::Equal,
                "claim states dimension 1; the set is edge-free, so only the "
                "empty trace is realized and the oracle value is 0");
      break;
    }
    case ClaimId::P1_8: {
      int dd = d.value_or(3);
      if (q < 6 || dd < 3) break;
      tightness({dd, q, 1}, {ConstructionName::Band3, dd, q},
                3 * pow_u64(std::uint64_t(q), dd - 1), 2, VcRelation::AtMost);
      break;
    }
    case ClaimId::T1_8t2: {
      if (q < 3) break;
      universal({2, q, 2}, 2 * std::uint64_t(q), 2, VcRelation::AtLeast);
      tightness({2, q, 2}, {ConstructionName::UStar, 2, q},
                2 * std::uint64_t(q) - 1, 1, VcRelation::AtMost);
      break;
    }
    case ClaimId::L3_1: {
      if (q < 2) break;
      property({2, q, 1}, 0, 3, 10'000);
      break;
    }
    case ClaimId::L4_1: {
      int dd = d.value_or(3);
      if (q < 2 || dd < 2) break;
      property({dd, q, 1}, 0, 3, 10'000);
      break;
    }
  }
  return out;
}

namespace {

VerificationReport exhaustive_universal(const ClaimSpec& claim,
                                        const Budget& budget,
                                        std::uint64_t total,
                                        VerificationReport report) {
  const auto t0 = Clock::now();
  const std::uint64_t n = claim.params.vertex_count(budget.vertex_cap);
  const std::uint64_t m = claim.m;
  const SubsetProbe probe(claim.params, budget.vertex_cap);

  int jobs = std::max(1, budget.jobs);
  if (std::uint64_t(jobs) * 4 > total) jobs = 1;

  std::uint64_t fail_rank = ~std::uint64_t{0};
  if (jobs == 1) {
    std::vector<std::uint64_t> comb = unrank_combination(0, n, m);
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      if (budget.progress && rank % budget.progress_interval == 0) {
        budget.progress(rank, total);
      }
      if (!relation_holds(probe, comb, claim.k, claim.relation)) {
        fail_rank = rank;
        break;
      }
      next_combination(comb, n);
    }
  } else {
    // Rank ranges per worker; the reported counterexample is the smallest
    // failing rank, so the parallel result matches the sequential one.
    std::atomic<std::uint64_t> first_fail{~std::uint64_t{0}};
    std::atomic<std::uint64_t> done{0};
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const std::uint64_t lo = std::min(total, std::uint64_t(w) * chunk);
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      workers.emplace_back([&, lo, hi] {
        std::vector<std::uint64_t> comb = unrank_combination(lo, n, m);
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
          if ((rank & 511) == 0 &&
              rank >= first_fail.load(std::memory_order_relaxed)) {
            break;
          }
          if (!relation_holds(probe, comb, claim.k, claim.relation)) {
            std::uint64_t cur = first_fail.load(std::memory_order_relaxed);
            while (rank < cur && !first_fail.compare_exchange_weak(cur, rank)) {
            }
            break;
          }
          next_combination(comb, n);
          if ((rank & 4095) == 0) {
            done.fetch_add(4096, std::memory_order_relaxed);
          }
        }
      });
    }
    if (budget.progress) {
      while (done.load(std::memory_order_relaxed) < total &&
             first_fail.load(std::memory_order_relaxed) == ~std::uint64_t{0}) {
        bool all_joined = true;
        for (auto& t : workers) all_joined = all_joined && !t.joinable();
        if (all_joined) break;
        budget.progress(std::min(total, done.load(std::memory_order_relaxed)),
                        total);
        std::this_thread::sleep_for(std::chrono::milliseconds(200));
      }
    }
    for (auto& t : workers) t.join();
    fail_rank = first_fail.load();
  }

  if (fail_rank != ~std::uint64_t{0}) {
    report.work = fail_rank + 1;
    attach_counterexample(
        report, PointSet::of_indices(claim.params,
                                     unrank_combination(fail_rank, n, m)));
  } else {
    report.outcome = Outcome::Verified;
    report.work = total;
  }
  if (budget.progress) budget.progress(report.work, total);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

VerificationReport sampled_universal(const ClaimSpec& claim,
                                     const Budget& budget,
                                     VerificationReport report) {
  const auto t0 = Clock::now();
  if (!budget.seed) {
    report.outcome = Outcome::Infeasible;
    report.reason = "sampled mode requires a seed";
    return report;
  }
  const std::uint64_t n = claim.params.vertex_count(budget.vertex_cap);
  const std::uint64_t count = std::min(budget.samples, budget.work_cap);
  const SubsetProbe probe(claim.params, budget.vertex_cap);
  std::mt19937_64 gen(*budget.seed);
  report.seed = *budget.seed;
  report.samples = count;
  for (std::uint64_t s = 0; s < count; ++s) {
    if (budget.progress && s % budget.progress_interval == 0) {
      budget.progress(s, count);
    }
    std::vector<std::uint64_t> mem = sample_m_subset(gen, n, claim.m);
    if (!relation_holds(probe, mem, claim.k, claim.relation)) {
      report.work = s + 1;
      attach_counterexample(report, PointSet::of_indices(claim.params, mem));
      report.elapsed_seconds = seconds_since(t0);
      return report;
    }
  }
  report.outcome = Outcome::Verified;
  report.work = count;
  if (budget.progress) budget.progress(count, count);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

}  // namespace

VerificationReport check_universal(const ClaimSpec& claim, RunMode mode,
                                   const Budget& budget) {
  if (claim.shape != ClaimShape::Universal) {
    throw std::invalid_argument("check_universal: claim is not universal");
  }
  VerificationReport report;
  report.claim = claim;
  report.mode = mode;
  const std::uint64_t n = claim.params.vertex_count(budget.vertex_cap);
  const std::uint64_t total = binomial_capped(n, claim.m, budget.work_cap);
  if (total == 0) {
    // No subsets of this size exist; vacuously true.
    report.outcome = Outcome::Verified;
    report.annotation = "no subsets of size " + std::to_string(claim.m) +
                        " in a universe of " + std::to_string(n);
    return report;
  }
  switch (mode) {
    case RunMode::Exhaustive:
      if (total > budget.work_cap) {
        report.outcome = Outcome::Infeasible;
        report.reason = "exhaustive enumeration needs " +
                        binomial_display(n, claim.m, budget.work_cap) +
                        " subsets; work cap is " +
                        std::to_string(budget.work_cap);
        return report;
      }
      return exhaustive_universal(claim, budget, total, std::move(report));
    case RunMode::Sampled:
      return sampled_universal(claim, budget, std::move(report));
    case RunMode::Constructive:
      throw std::invalid_argument(
          "check_universal: constructive mode does not apply");
  }
  return report;
}

namespace {

// Structure checks beyond size and dimension, keyed by claim.
bool tightness_extras(const ClaimSpec& claim, const PointSet& u,
                      VerificationReport& report) {
  switch (claim.id) {
    case ClaimId::P1_5: {
      const std::uint64_t q = std::uint64_t(claim.params.q);
      auto comps = connected_components(u);
      if (comps.size() != q * q / 4) {
        report.reason = "expected " + std::to_string(q * q / 4) +
                        " components, found " + std::to_string(comps.size());
        return false;
      }
      for (const auto& comp : comps) {
        if (comp.size() != 5) {
          report.reason = "component of order " + std::to_string(comp.size()) +
                          "; every component must have order 5";
          return false;
        }
      }
      auto degrees = induced_degrees(u);
      std::vector<int> hist(8, 0);
      for (int deg : degrees) {
        if (deg > 7) {
          report.reason = "member of induced degree " + std::to_string(deg);
          return false;
        }
        ++hist[static_cast<std::size_t>(deg)];
      }
      const int five = static_cast<int>(u.size() / 5);
      if (hist[1] != five || hist[2] != 3 * five || hist[3] != five) {
        report.reason = "degree histogram off: every component must have "
                        "degrees (1,2,2,2,3)";
        return false;
      }
      return true;
    }
    case ClaimId::P1_6:
      if (!edge_free(u)) {
        report.reason = "construction is not edge-free";
        return false;
      }
      return true;
    default:
      return true;
  }
}

}  // namespace

VerificationReport check_tightness(const ClaimSpec& claim,
                                   const Budget& budget) {
  if (claim.shape != ClaimShape::Tightness || !claim.construction) {
    throw std::invalid_argument(
        "check_tightness: claim carries no construction");
  }
  const auto t0 = Clock::now();
  VerificationReport report;
  report.claim = claim;
  report.mode = RunMode::Constructive;
  report.annotation = claim.note;
  std::string warning;
  PointSet u = construct(*claim.construction, budget.vertex_cap, &warning);
  if (!warning.empty()) {
    report.annotation += report.annotation.empty() ? warning : "; " + warning;
  }
  report.work = 1;
  if (u.size() != claim.m) {
    report.outcome = Outcome::Refuted;
    report.reason = "construction has size " + std::to_string(u.size()) +
                    ", stated size is " + std::to_string(claim.m);
    report.counterexample = u;
    report.elapsed_seconds = seconds_since(t0);
    return report;
  }
  VcResult vc = vc_dimension(u);
  if (!relation_holds_value(vc.dimension, claim.k, claim.relation)) {
    report.outcome = Outcome::Refuted;
    report.reason = "oracle dimension " + std::to_string(vc.dimension) +
                    " violates the stated bound";
    report.counterexample = u;
    report.counterexample_vc = vc;
    report.elapsed_seconds = seconds_since(t0);
    return report;
  }
  if (!tightness_extras(claim, u, report)) {
    report.outcome = Outcome::Refuted;
    report.counterexample = u;
    report.counterexample_vc = vc;
    report.elapsed_seconds = seconds_since(t0);
    return report;
  }
  report.outcome = Outcome::Verified;
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

VerificationReport check_tightness(ClaimId id, int q, const Budget& budget) {
  for (const ClaimSpec& c : expand_claim(id, q)) {
    if (c.shape == ClaimShape::Tightness) return check_tightness(c, budget);
  }
  VerificationReport report;
  report.claim.id = id;
  report.claim.shape = ClaimShape::Tightness;
  report.outcome = Outcome::Infeasible;
  report.reason = "claim has no tightness construction at q = " +
                  std::to_string(q);
  return report;
}

VerificationReport check_property(const ClaimSpec& claim,
                                  const Budget& budget) {
  if (claim.shape != ClaimShape::Property) {
    throw std::invalid_argument("check_property: claim is not a property");
  }
  const auto t0 = Clock::now();
  VerificationReport report;
  report.claim = claim;
  report.mode = RunMode::Sampled;
  if (!budget.seed) {
    report.outcome = Outcome::Infeasible;
    report.reason = "sampled mode requires a seed";
    return report;
  }
  const std::uint64_t n = claim.params.vertex_count(budget.vertex_cap);
  std::uint64_t count =
      claim.property_samples ? claim.property_samples : budget.samples;
  count = std::min(count, budget.work_cap);
  report.samples = count;
  report.seed = *budget.seed;
  std::mt19937_64 gen(*budget.seed);
  const SubsetProbe probe(claim.params, budget.vertex_cap);

  for (std::uint64_t s = 0; s < count; ++s) {
    if (budget.progress && s % budget.progress_interval == 0) {
      budget.progress(s, count);
    }
    bool ok = true;
    std::vector<std::uint64_t> mem;
    switch (claim.id) {
      case ClaimId::L3_1: {
        mem = sample_bernoulli_subset(gen, n);
        if (probe.vc_capped(mem, 3) == 3) {
          PointSet u = PointSet::of_indices(claim.params, mem);
          ok = find_four_on_line(u).has_value();
        }
        break;
      }
      case ClaimId::L4_1: {
        mem = sample_bernoulli_subset(gen, n);
        if (probe.vc_capped(mem, 3) == 3) {
          PointSet u = PointSet::of_indices(claim.params, mem);
          ok = find_four_on_line(u).has_value() ||
               find_rectangle(u).has_value();
        }
        break;
      }
      case ClaimId::C1_4: {
        mem = sample_m_subset(gen, n, claim.m);
        PointSet u = PointSet::of_indices(claim.params, mem);
        auto slice = pigeonhole_slice(u, 3 * claim.params.q + 1);
        ok = slice.has_value() &&
             vc_dimension(slice->second).dimension == claim.k;
        break;
      }
      default:
        throw std::invalid_argument("check_property: claim " +
                                    std::string(claim_id_name(claim.id)) +
                                    " has no sampled predicate");
    }
    if (!ok) {
      report.work = s + 1;
      attach_counterexample(report, PointSet::of_indices(claim.params, mem));
      report.elapsed_seconds = seconds_since(t0);
      return report;
    }
  }
  report.outcome = Outcome::Verified;
  report.work = count;
  if (budget.progress) budget.progress(count, count);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

std::vector<VerificationReport> run_suite(const std::vector<ClaimSpec>& claims,
                                          const Budget& budget) {
  std::vector<VerificationReport> reports;
  reports.reserve(claims.size());
  for (const ClaimSpec& claim : claims) {
    switch (claim.shape) {
      case ClaimShape::Universal: {
        const std::uint64_t n = claim.params.vertex_count(budget.vertex_cap);
        const std::uint64_t total =
            binomial_capped(n, claim.m, budget.work_cap);
        if (total <= budget.work_cap) {
          reports.push_back(check_universal(claim, RunMode::Exhaustive, budget));
        } else {
          VerificationReport r =
              check_universal(claim, RunMode::Sampled, budget);
          std::string note = "downgraded to sampled: " +
                             binomial_display(n, claim.m, budget.work_cap) +
                             " exceeds the work cap";
          r.annotation = r.annotation.empty() ? note : note + "; " + r.annotation;
          reports.push_back(std::move(r));
        }
        break;
      }
      case ClaimShape::Tightness:
        reports.push_back(check_tightness(claim, budget));
        break;
      case ClaimShape::Property:
        reports.push_back(check_property(claim, budget));
        break;
    }
  }
  return reports;
}

int suite_exit_code(const std::vector<VerificationReport>& reports) {
  bool infeasible = false;
  for (const auto& r : reports) {
    if (r.outcome == Outcome::Refuted) return 1;
    if (r.outcome == Outcome::Infeasible) infeasible = true;
  }
  return infeasible ? 2 : 0;
}

namespace {

// Best known size of a vc < k certificate, used to bound the search tree
// from below before starting.
std::uint64_t certificate_floor(const HammingParams& p, int k) {
  const std::uint64_t q = std::uint64_t(p.q);
  if (p.d == 2 && p.t == 1 && k == 2) return 2 * q - (q % 2);
  if (p.d == 2 && p.t == 1 && k == 3) return 3 * q;
  if (p.d == 2 && p.t == 2 && k == 2) return 2 * q - 1;
  return pow_u64(q, p.d - 1);
}

}  // namespace

ThresholdResult threshold_search(const HammingParams& params, int k,
                                 const Budget& budget) {
  if (k < 1) throw std::invalid_argument("threshold_search: k must be >= 1");
  const auto t0 = Clock::now();
  const std::uint64_t n = params.vertex_count(budget.vertex_cap);
  const std::uint64_t floor_size = std::min(certificate_floor(params, k), n);
  if (floor_size >= 63 || (std::uint64_t{1} << floor_size) > budget.work_cap) {
    const std::string projected = "2^" + std::to_string(floor_size);
    const std::string message =
        "threshold_search: at least " + projected +
        " subsets reachable (a known vc < " + std::to_string(k) +
        " set has size " + std::to_string(floor_size) +
        ", and all its subsets get visited); work cap is " +
        std::to_string(budget.work_cap);
    throw InfeasibleError(message, projected);
  }
  const SubsetProbe probe(params, budget.vertex_cap);
  std::vector<std::uint64_t> members;
  std::vector<std::uint64_t> best;
  std::uint64_t work = 0;
  // Lex preorder over subsets, extending only those with vc < k. Supersets
  // of a vc >= k set keep vc >= k, so their subtrees cannot hold a
  // certificate. The first maximum found is the lexicographically least.
  auto rec = [&](auto&& self, std::uint64_t start) -> void {
    for (std::uint64_t v = start; v < n; ++v) {
      members.push_back(v);
      ++work;
      if (work > budget.work_cap) {
        throw InfeasibleError(
            "threshold_search: exceeded the work cap of " +
                std::to_string(budget.work_cap) + " examined subsets",
            ">" + std::to_string(budget.work_cap));
      }
      if (budget.progress && work % budget.progress_interval == 0) {
        budget.progress(work, 0);
      }
      if (!probe.vc_at_least(members, k)) {
        if (members.size() > best.size()) best = members;
        self(self, v + 1);
      }
      members.pop_back();
    }
  };
  rec(rec, 0);
  ThresholdResult result;
  result.m_star = static_cast<int>(best.size()) + 1;
  result.certificate = PointSet::of_indices(params, best);
  result.work = work;
  result.elapsed_seconds = seconds_since(t0);
  return result;
}

}  // namespace hamvc
