// Acceptance gate. Each criterion prints exactly one PASS/FAIL line and the
// binary exits nonzero if any criterion fails. Pinned values (subset counts,
// thresholds, sizes) are part of the contract; so are the wall-clock budgets
// where one is attached.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hamvc/configs.hpp"
#include "hamvc/constructions.hpp"
#include "hamvc/hamming.hpp"
#include "hamvc/shatter.hpp"
#include "hamvc/verify.hpp"
#include "support/naive_oracle.hpp"

namespace {

using namespace hamvc;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    append(what);
  }
  void note(const std::string& what) { append(what); }

 private:
  void append(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

bool run_criterion(int id, const char* label, double budget_seconds,
                   const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("unexpected exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    char over[64];
    std::snprintf(over, sizeof(over), "over the %.0fs budget", budget_seconds);
    c.require(false, over);
  }
  std::printf("%s  criterion %2d  %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL",
              id, label, secs, c.detail.empty() ? "" : ": ",
              c.detail.c_str());
  std::fflush(stdout);
  return c.ok;
}

Budget seeded(std::uint64_t seed) {
  Budget b;
  b.seed = seed;
  return b;
}

ClaimSpec universal_of(ClaimId id, int q) {
  for (const ClaimSpec& s : expand_claim(id, q)) {
    if (s.shape == ClaimShape::Universal) return s;
  }
  throw std::logic_error("no universal expansion");
}

PointSet bernoulli_subset(std::mt19937_64& gen, const HammingParams& p) {
  std::vector<std::uint64_t> keep;
  const std::uint64_t n = p.vertex_count();
  for (std::uint64_t v = 0; v < n; ++v) {
    if (gen() & 1) keep.push_back(v);
  }
  return PointSet::of_indices(p, keep);
}

std::string u64s(std::uint64_t v) { return std::to_string(v); }

// 1. Every 6-subset of H(2,3,1) shatters a pair, and the threshold search
//    finds m* = 6 with a 5-point certificate.
void criterion1(Check& c) {
  VerificationReport r = check_universal(universal_of(ClaimId::T1_2, 3),
                                         RunMode::Exhaustive, Budget{});
  c.require(r.outcome == Outcome::Verified, "every 6-subset reaches vc >= 2");
  c.require(r.work == 84, "84 subsets expected, examined " + u64s(r.work));
  ThresholdResult th = threshold_search({2, 3, 1}, 2, Budget{});
  c.require(th.m_star == 6, "m* = 6, got " + std::to_string(th.m_star));
  c.require(th.certificate.size() == 5,
            "certificate of 5 points, got " + u64s(th.certificate.size()));
  c.require(vc_dimension(th.certificate).dimension < 2,
            "certificate must stay below vc 2");
}

// 2. In H(2,4,1) all 697 subsets of size 13..16 sit at vc exactly 3, size 12
//    is refutable, and u2(4) is a 12-point set at vc <= 2.
void criterion2(Check& c) {
  const ClaimSpec base = universal_of(ClaimId::T1_3, 4);
  std::uint64_t total = 0;
  for (std::uint64_t m = 13; m <= 16; ++m) {
    ClaimSpec claim = base;
    claim.m = m;
    VerificationReport r = check_universal(claim, RunMode::Exhaustive, Budget{});
    c.require(r.outcome == Outcome::Verified,
              "all size-" + u64s(m) + " subsets at vc = 3");
    total += r.work;
  }
  c.require(total == 697, "697 subsets expected, examined " + u64s(total));

  ClaimSpec twelve = base;
  twelve.m = 12;
  VerificationReport r12 = check_universal(twelve, RunMode::Exhaustive, Budget{});
  c.require(r12.outcome == Outcome::Refuted, "some 12-subset must drop below vc 3");
  c.require(r12.counterexample.has_value() && r12.counterexample->size() == 12,
            "refutation carries a 12-point counterexample");

  PointSet u2 = construct_u2(4);
  c.require(u2.size() == 12, "u2(4) has 12 points");
  c.require(vc_dimension(u2).dimension <= 2, "u2(4) stays at vc <= 2");
}

// 3. u1 sizes and dimension across small q of both parities.
void criterion3(Check& c) {
  for (int q : {4, 6, 8, 10, 12}) {
    PointSet u = construct_u1(q);
    c.require(u.size() == std::uint64_t(2 * q),
              "u1(" + std::to_string(q) + ") has 2q points");
    c.require(vc_dimension(u).dimension == 1,
              "u1(" + std::to_string(q) + ") at vc = 1");
  }
  for (int q : {3, 5, 7, 9, 11}) {
    PointSet u = construct_u1(q);
    c.require(u.size() == std::uint64_t(2 * q - 1),
              "u1(" + std::to_string(q) + ") has 2q-1 points");
    c.require(vc_dimension(u).dimension == 1,
              "u1(" + std::to_string(q) + ") at vc = 1");
  }
}

// 4. The q = 5 universal check runs exhaustively over C(25,10) subsets inside
//    ten minutes and the sampled fallback covers 100k subsets inside ten
//    seconds with a fixed seed.
void criterion4(Check& c) {
  const ClaimSpec claim = universal_of(ClaimId::T1_2, 5);
  VerificationReport ex = check_universal(claim, RunMode::Exhaustive, Budget{});
  c.require(ex.outcome == Outcome::Verified, "exhaustive pass verified");
  c.require(ex.work == 3'268'760,
            "C(25,10) subsets expected, examined " + u64s(ex.work));
  c.require(ex.elapsed_seconds < 600.0, "exhaustive pass inside 10 minutes");

  Budget sb = seeded(20250818);
  sb.samples = 100'000;
  VerificationReport sa = check_universal(claim, RunMode::Sampled, sb);
  c.require(sa.outcome == Outcome::Verified, "sampled pass verified");
  c.require(sa.work == 100'000,
            "100000 samples expected, examined " + u64s(sa.work));
  c.require(sa.elapsed_seconds < 10.0, "sampled pass inside 10 seconds");
}

// 5. The t = 2 analogue at q = 3, plus the ustar family staying at vc <= 1.
void criterion5(Check& c) {
  VerificationReport r = check_universal(universal_of(ClaimId::T1_8t2, 3),
                                         RunMode::Exhaustive, Budget{});
  c.require(r.outcome == Outcome::Verified,
            "every 6-subset of H(2,3,2) reaches vc >= 2");
  c.require(r.work == 84, "84 subsets expected, examined " + u64s(r.work));
  for (int q = 3; q <= 8; ++q) {
    PointSet u = construct_ustar(q);
    c.require(u.size() == std::uint64_t(2 * q - 1),
              "ustar(" + std::to_string(q) + ") has 2q-1 points");
    c.require(vc_dimension(u).dimension <= 1,
              "ustar(" + std::to_string(q) + ") at vc <= 1");
  }
}

// 6. u3(4): 20 points in four order-5 components, each with degree profile
//    (1,2,2,2,3), at vc = 1. u3(6): 45 points, vc = 1.
void criterion6(Check& c) {
  PointSet u = construct_u3(4);
  c.require(u.size() == 20, "u3(4) has 20 points, got " + u64s(u.size()));
  const std::vector<std::uint64_t> idx = u.indices();
  const std::vector<int> deg = induced_degrees(u);
  const auto comps = connected_components(u);
  c.require(comps.size() == 4,
            "4 components, got " + u64s(comps.size()));
  const std::vector<int> profile{1, 2, 2, 2, 3};
  for (const auto& comp : comps) {
    c.require(comp.size() == 5, "component of order 5");
    std::vector<int> dd;
    for (std::uint64_t v : comp) {
      auto it = std::lower_bound(idx.begin(), idx.end(), v);
      dd.push_back(deg[std::size_t(it - idx.begin())]);
    }
    std::sort(dd.begin(), dd.end());
    c.require(dd == profile, "degree profile 1,2,2,2,3");
  }
  c.require(vc_dimension(u).dimension == 1, "u3(4) at vc = 1");

  PointSet u6 = construct_u3(6);
  c.require(u6.size() == 45, "u3(6) has 45 points, got " + u64s(u6.size()));
  c.require(vc_dimension(u6).dimension == 1, "u3(6) at vc = 1");
}

// 7. band3(3,6): no line carries four members, no rectangle, vc exactly 2.
void criterion7(Check& c) {
  std::string warning;
  PointSet u = construct_band3(3, 6, kDefaultVertexCap, &warning);
  c.require(u.size() == 108, "108 points, got " + u64s(u.size()));
  c.require(!find_four_on_line(u).has_value(),
            "a line carries four or more members");
  c.require(!find_rectangle(u).has_value(), "a rectangle is present");
  const bool two = has_vc_at_least(u, 2);
  const bool three = has_vc_at_least(u, 3);
  if (!two) c.require(false, "vc fell below 2");
  if (three) c.require(false, "vc is at least 3, not exactly 2");
}

// 8. diag(d,q) is edge-free at vc = 0 for d in 2..4, q in 2..5, and the
//    verification report carries the discrepancy annotation against the
//    stated dimension 1.
void criterion8(Check& c) {
  for (int d = 2; d <= 4; ++d) {
    for (int q = 2; q <= 5; ++q) {
      const std::string tag =
          "diag(" + std::to_string(d) + "," + std::to_string(q) + ")";
      PointSet u = construct_diag(d, q);
      c.require(edge_free(u), tag + " is edge-free");
      c.require(vc_dimension(u).dimension == 0, tag + " at vc = 0");
      const auto specs = expand_claim(ClaimId::P1_6, q, d);
      if (specs.empty()) {
        c.require(false, tag + " has no claim expansion");
        continue;
      }
      VerificationReport r = check_tightness(specs.front(), Budget{});
      c.require(r.outcome == Outcome::Verified, tag + " verifies");
      c.require(r.annotation.find("claim states dimension 1") !=
                    std::string::npos,
                tag + " report carries the discrepancy annotation");
    }
  }
}

// 9. Over 10^4 seeded random subsets per ambient graph: vc = 3 in H(2,4,1)
//    forces four members on a line; vc = 3 in H(3,3,1) forces four on a line
//    or a rectangle. Zero violations.
void criterion9(Check& c) {
  VerificationReport flat =
      check_property(expand_claim(ClaimId::L3_1, 4).at(0), seeded(90401));
  c.require(flat.outcome == Outcome::Verified,
            "vc = 3 in H(2,4,1) must force four on a line");
  c.require(flat.work == 10'000,
            "10000 planar samples expected, ran " + u64s(flat.work));

  VerificationReport solid =
      check_property(expand_claim(ClaimId::L4_1, 3).at(0), seeded(90402));
  c.require(solid.outcome == Outcome::Verified,
            "vc = 3 in H(3,3,1) must force four on a line or a rectangle");
  c.require(solid.work == 10'000,
            "10000 spatial samples expected, ran " + u64s(solid.work));
}

// 10. Witness soundness: across 10^4 seeded subsets per parameter set, every
//     hit from a witness-capable detector converts to a witness that
//     validates. The corner conversion may legitimately refuse when the
//     occupancy around the hole breaks a role (RoleError); nothing else may
//     throw. Rectangle and four-on-a-line hits certify line occupancy, not a
//     shattering, so they have no conversion to exercise.
void criterion10(Check& c) {
  std::uint64_t triples = 0, corners = 0, corner_skips = 0, fists = 0,
                plucks = 0, bad = 0;
  std::string first_bad;

  auto fail = [&](const std::string& what) {
    ++bad;
    if (first_bad.empty()) first_bad = what;
  };
  auto must_validate = [&](const Configuration& cfg, const PointSet& u,
                           std::uint64_t trial, const char* kind) {
    std::string why;
    ShatterWitness w = witness_from_config(cfg, u);
    if (!validate_witness(w, u, &why)) {
      fail(std::string(kind) + " witness failed validation at trial " +
           u64s(trial) + ": " + why);
      return false;
    }
    return true;
  };

  std::mt19937_64 gen(101010);
  const HammingParams flat{2, 4, 1};
  for (std::uint64_t trial = 0; trial < 10'000; ++trial) {
    PointSet u = bernoulli_subset(gen, flat);
    if (auto cfg = find_line_triple(u)) {
      if (must_validate(*cfg, u, trial, "line-triple")) ++triples;
    }
    if (auto cfg = find_corner(u)) {
      try {
        if (must_validate(*cfg, u, trial, "corner")) ++corners;
      } catch (const RoleError&) {
        ++corner_skips;
      }
    }
    if (auto cfg = find_fist(u)) {
      if (must_validate(*cfg, u, trial, "fist")) ++fists;
    }
  }

  std::mt19937_64 gen2(202020);
  const HammingParams crossed{2, 4, 2};
  for (std::uint64_t trial = 0; trial < 10'000; ++trial) {
    PointSet u = bernoulli_subset(gen2, crossed);
    if (auto cfg = find_pluck(u)) {
      if (must_validate(*cfg, u, trial, "pluck")) ++plucks;
    }
  }

  c.require(bad == 0, u64s(bad) + " invalid witnesses, first: " + first_bad);
  c.require(triples > 0 && corners > 0 && fists > 0 && plucks > 0,
            "every detector must convert at least once");
  c.note("conversions: line-triple " + u64s(triples) + ", corner " +
         u64s(corners) + " (+" + u64s(corner_skips) + " role refusals), fist " +
         u64s(fists) + ", pluck " + u64s(plucks));
}

// 11. Engine vs the definition-chasing reference oracle: 1000 seeded subsets
//     in each of four parameter sets, zero disagreements.
void criterion11(Check& c) {
  const HammingParams sets[] = {{2, 3, 1}, {2, 4, 1}, {2, 3, 2}, {3, 3, 1}};
  const std::uint64_t seeds[] = {5801, 5802, 5803, 5804};
  for (std::size_t i = 0; i < 4; ++i) {
    std::mt19937_64 gen(seeds[i]);
    for (int trial = 0; trial < 1000; ++trial) {
      PointSet u = bernoulli_subset(gen, sets[i]);
      const int fast = vc_dimension(u).dimension;
      const int slow = hamvc_test::naive_vc(u);
      if (fast != slow) {
        c.require(false, "H(" + std::to_string(sets[i].d) + "," +
                             std::to_string(sets[i].q) + "," +
                             std::to_string(sets[i].t) + ") trial " +
                             std::to_string(trial) + ": engine " +
                             std::to_string(fast) + ", reference " +
                             std::to_string(slow));
        break;
      }
    }
  }
}

// 12. 100 seeded 49-point subsets of H(3,4,1): each pigeonholes onto a plane
//     slice of 13+ points, and that slice sits at vc = 3.
void criterion12(Check& c) {
  VerificationReport r =
      check_property(expand_claim(ClaimId::C1_4, 4).at(0), seeded(120412));
  c.require(r.outcome == Outcome::Verified,
            "every sampled subset must slice to a vc = 3 plane");
  c.require(r.work == 100, "100 samples expected, ran " + u64s(r.work));
}

}  // namespace

int main() {
  int passed = 0, failed = 0;
  auto run = [&](int id, const char* label, double budget,
                 const std::function<void(Check&)>& body) {
    (run_criterion(id, label, budget, body) ? passed : failed) += 1;
  };

  run(1, "H(2,3,1): 6-subsets shatter a pair; threshold m* = 6", 1.0,
      criterion1);
  run(2, "H(2,4,1): sizes 13..16 pin vc = 3; u2(4) stays at vc <= 2", 10.0,
      criterion2);
  run(3, "u1 sizes and dimension across q = 3..12", 1.0, criterion3);
  run(4, "H(2,5,1): 10-subsets exhaustively and by sampling", 0.0, criterion4);
  run(5, "H(2,3,2): 6-subsets shatter a pair; ustar stays at vc <= 1", 1.0,
      criterion5);
  run(6, "u3 component structure and dimension", 1.0, criterion6);
  run(7, "band3(3,6): detector misses and vc exactly 2", 30.0, criterion7);
  run(8, "diag: edge-free, vc = 0, discrepancy annotation", 0.0, criterion8);
  run(9, "vc = 3 forces a heavy line (or a rectangle in d = 3)", 0.0,
      criterion9);
  run(10, "detector hits convert to validated witnesses", 0.0, criterion10);
  run(11, "engine agrees with the reference oracle", 60.0, criterion11);
  run(12, "49-point subsets of H(3,4,1) slice to a vc = 3 plane", 0.0,
      criterion12);

  std::printf("%d of 12 criteria passed\n", passed);
  return failed == 0 ? 0 : 1;
}
