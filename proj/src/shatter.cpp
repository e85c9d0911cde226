#include "hamvc/shatter.hpp"

#include <algorithm>
#include <bit>

namespace hamvc {

namespace {

// Adjacency of U's members over member ordinals, bitset rows. All shattering
// questions about W subseteq U only involve adjacency inside U, so the induced
// graph is the whole story.
struct MemberGraph {
  explicit MemberGraph(const PointSet& u) {
    members = u.indices();
    n = members.size();
    pts.reserve(n);
    for (std::uint64_t idx : members) {
      pts.push_back(Point::decode(u.params(), idx));
    }
    words = (n + 63) / 64;
    rows.assign(n * words, 0);
    const int t = u.params().t;
    for (std::size_t i = 0; i < n; ++i) {
      if (t == 0) set_adj(i, i);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (hamming_distance(pts[i], pts[j]) == t) {
          set_adj(i, j);
          set_adj(j, i);
        }
      }
    }
    uni.assign(words, 0);
    for (std::size_t i = 0; i < n; ++i) uni[i >> 6] |= one << (i & 63);
  }

  static constexpr std::uint64_t one = 1;
  std::vector<std::uint64_t> members;
  std::vector<Point> pts;
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> rows;
  std::vector<std::uint64_t> uni;

  void set_adj(std::size_t i, std::size_t j) {
    rows[i * words + (j >> 6)] |= one << (j & 63);
  }
  const std::uint64_t* row(std::size_t i) const { return &rows[i * words]; }
  bool adj(std::size_t i, std::size_t j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1;
  }
  bool rows_intersect(std::size_t i, std::size_t j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    for (std::size_t w = 0; w < words; ++w) {
      if (a[w] & b[w]) return true;
    }
    return false;
  }

  // First member (ordinal order) realizing every subset of ws, or nullopt.
  // realizer[mask] over the bitmask indexing bit b <-> ws[b].
  std::optional<std::vector<std::size_t>> realizers(
      const std::vector<std::size_t>& ws, std::uint32_t* first_missing) const {
    const std::uint32_t full = std::uint32_t{1} << ws.size();
    std::vector<std::size_t> realizer(full, n);
    std::uint32_t found = 0;
    for (std::size_t u = 0; u < n && found < full; ++u) {
      std::uint32_t mask = 0;
      for (std::size_t b = 0; b < ws.size(); ++b) {
        mask |= static_cast<std::uint32_t>(adj(u, ws[b])) << b;
      }
      if (realizer[mask] == n) {
        realizer[mask] = u;
        ++found;
      }
    }
    if (found != full) {
      if (first_missing) {
        for (std::uint32_t m = 0; m < full; ++m) {
          if (realizer[m] == n) {
            *first_missing = m;
            break;
          }
        }
      }
      return std::nullopt;
    }
    return realizer;
  }

  ShatterWitness make_witness(const std::vector<std::size_t>& ws,
                              const std::vector<std::size_t>& realizer) const {
    ShatterWitness w;
    w.set.reserve(ws.size());
    for (std::size_t i : ws) w.set.push_back(pts[i]);
    w.assignments.reserve(realizer.size());
    for (std::size_t r : realizer) w.assignments.push_back(pts[r]);
    return w;
  }

  std::optional<ShatterWitness> witness_for(const std::vector<std::size_t>& ws) const {
    auto realizer = realizers(ws, nullptr);
    if (!realizer) return std::nullopt;
    return make_witness(ws, *realizer);
  }

  bool pair_shatters(std::size_t i, std::size_t j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    std::uint64_t m11 = 0, m10 = 0, m01 = 0, m00 = 0;
    for (std::size_t w = 0; w < words; ++w) {
      m11 |= a[w] & b[w];
      m10 |= a[w] & ~b[w];
      m01 |= ~a[w] & b[w];
      m00 |= ~a[w] & ~b[w] & uni[w];
      if (m11 && m10 && m01 && m00) return true;
    }
    return m11 && m10 && m01 && m00;
  }

  bool triple_shatters(std::size_t i, std::size_t j, std::size_t l) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    const std::uint64_t* c = row(l);
    std::uint64_t acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t aw = a[w], bw = b[w], cw = c[w], uw = uni[w];
      acc[0] |= ~aw & ~bw & ~cw & uw;
      acc[1] |= aw & ~bw & ~cw;
      acc[2] |= ~aw & bw & ~cw;
      acc[3] |= aw & bw & ~cw;
      acc[4] |= ~aw & ~bw & cw;
      acc[5] |= aw & ~bw & cw;
      acc[6] |= ~aw & bw & cw;
      acc[7] |= aw & bw & cw;
    }
    for (std::uint64_t v : acc) {
      if (!v) return false;
    }
    return true;
  }

  std::optional<ShatterWitness> find_size1() const {
    for (std::size_t i = 0; i < n; ++i) {
      bool hit = false, miss = false;
      const std::uint64_t* r = row(i);
      for (std::size_t w = 0; w < words && !(hit && miss); ++w) {
        if (r[w]) hit = true;
        if (~r[w] & uni[w]) miss = true;
      }
      if (hit && miss) return witness_for({i});
    }
    return std::nullopt;
  }

  std::optional<ShatterWitness> find_size2() const {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (pair_shatters(i, j)) return witness_for({i, j});
      }
    }
    return std::nullopt;
  }

  // Pair pruning: no shattered W may contain a pair with no common neighbor
  // in U, since the subset {x,y} of W would be unrealizable.
  std::vector<std::uint64_t> covered_rows() const {
    std::vector<std::uint64_t> cov(n * words, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rows_intersect(i, j)) {
          cov[i * words + (j >> 6)] |= one << (j & 63);
          cov[j * words + (i >> 6)] |= one << (i & 63);
        }
      }
    }
    return cov;
  }

  std::optional<ShatterWitness> find_size3() const {
    std::vector<std::uint64_t> cov = covered_rows();
    std::vector<std::uint64_t> third(words);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t* ci = &cov[i * words];
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!((ci[j >> 6] >> (j & 63)) & 1)) continue;
        const std::uint64_t* cj = &cov[j * words];
        for (std::size_t w = 0; w < words; ++w) third[w] = ci[w] & cj[w];
        for (std::size_t w = (j + 1) >> 6; w < words; ++w) {
          std::uint64_t bits = third[w];
          if (w == (j + 1) >> 6 && ((j + 1) & 63)) {
            bits &= ~((one << ((j + 1) & 63)) - 1);
          }
          while (bits) {
            std::size_t l = (w << 6) + std::countr_zero(bits);
            bits &= bits - 1;
            if (triple_shatters(i, j, l)) return witness_for({i, j, l});
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<ShatterWitness> find_generic(int k) const {
    std::vector<std::uint64_t> cov = covered_rows();
    std::vector<std::size_t> ws;
    ws.reserve(k);
    std::optional<ShatterWitness> out;
    auto covered = [&](std::size_t i, std::size_t j) {
      return (cov[i * words + (j >> 6)] >> (j & 63)) & 1;
    };
    auto rec = [&](auto&& self, std::size_t start) -> bool {
      if (static_cast<int>(ws.size()) == k) {
        auto realizer = realizers(ws, nullptr);
        if (!realizer) return false;
        out = make_witness(ws, *realizer);
        return true;
      }
      std::size_t need = k - ws.size();
      for (std::size_t nxt = start; nxt + need <= n; ++nxt) {
        bool ok = true;
        for (std::size_t prev : ws) {
          if (!covered(prev, nxt)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        ws.push_back(nxt);
        if (self(self, nxt + 1)) return true;
        ws.pop_back();
      }
      return false;
    };
    rec(rec, 0);
    return out;
  }

  std::optional<ShatterWitness> find_shattered(int k) const {
    if (static_cast<std::size_t>(k) > n) return std::nullopt;
    switch (k) {
      case 1:
        return find_size1();
      case 2:
        return find_size2();
      case 3:
        return find_size3();
      default:
        return find_generic(k);
    }
  }
};

int floor_log2(std::size_t n) {
  return static_cast<int>(std::bit_width(n)) - 1;
}

}  // namespace

std::optional<ShatterWitness> shatters(const std::vector<Point>& w,
                                       const PointSet& u, int max_size,
                                       std::uint32_t* first_missing) {
  if (static_cast<int>(w.size()) > max_size) {
    throw std::invalid_argument("shatters: candidate set larger than " +
                                std::to_string(max_size));
  }
  std::vector<Point> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("shatters: candidate set has duplicate points");
  }
  for (const Point& x : sorted) {
    if (!u.contains(x)) {
      throw std::invalid_argument("shatters: point " + to_string(x) +
                                  " is not a member of U");
    }
  }
  MemberGraph g(u);
  std::vector<std::size_t> ws;
  ws.reserve(sorted.size());
  for (const Point& x : sorted) {
    std::uint64_t idx = x.encode(u.params());
    std::size_t pos = static_cast<std::size_t>(
        std::lower_bound(g.members.begin(), g.members.end(), idx) -
        g.members.begin());
    ws.push_back(pos);
  }
  auto realizer = g.realizers(ws, first_missing);
  if (!realizer) return std::nullopt;
  return g.make_witness(ws, *realizer);
}

VcResult vc_dimension(const PointSet& u, std::optional<int> max_k_opt) {
  int max_k = max_k_opt.value_or(kDefaultMaxK);
  if (max_k < 0) throw std::invalid_argument("vc_dimension: max_k must be >= 0");
  VcResult r;
  if (u.empty()) {
    r.dimension = -1;
    r.refuted_at = 0;
    return r;
  }
  MemberGraph g(u);
  r.dimension = 0;
  r.witness = ShatterWitness{{}, {g.pts[0]}};
  // A shattered W needs 2^|W| distinct realizers, so |W| <= log2 |U|.
  int kmax = std::min(max_k, floor_log2(g.n));
  for (int k = 1; k <= kmax; ++k) {
    auto found = g.find_shattered(k);
    if (!found) {
      r.refuted_at = k;
      break;
    }
    r.dimension = k;
    r.witness = std::move(found);
  }
  if (!r.refuted_at && r.dimension == kmax && kmax < max_k) {
    // Stopped by the counting bound, not by max_k: size kmax+1 would need
    // 2^(kmax+1) > |U| realizers, so the refutation is still exhaustive.
    r.refuted_at = kmax + 1;
  }
  return r;
}

bool has_vc_at_least(const PointSet& u, int k) {
  if (k < 0) return true;
  if (k == 0) return !u.empty();
  if (static_cast<std::size_t>(k) > u.size()) return false;
  MemberGraph g(u);
  if (k > floor_log2(g.n)) return false;
  return g.find_shattered(k).has_value();
}

bool validate_witness(const ShatterWitness& w, const PointSet& u,
                      std::string* diagnostic) {
  auto fail = [&](const std::string& msg) {
    if (diagnostic) *diagnostic = msg;
    return false;
  };
  if (w.set.size() >= 25) return fail("witness set implausibly large");
  const std::size_t full = std::size_t{1} << w.set.size();
  if (w.assignments.size() != full) {
    return fail("expected " + std::to_string(full) + " assignments, got " +
                std::to_string(w.assignments.size()));
  }
  for (std::size_t i = 0; i < w.set.size(); ++i) {
    if (!u.contains(w.set[i])) {
      return fail("witness point " + to_string(w.set[i]) + " not in U");
    }
    for (std::size_t j = i + 1; j < w.set.size(); ++j) {
      if (w.set[i] == w.set[j]) {
        return fail("witness set repeats " + to_string(w.set[i]));
      }
    }
  }
  const int t = u.params().t;
  for (std::size_t mask = 0; mask < full; ++mask) {
    const Point& r = w.assignments[mask];
    if (!u.contains(r)) {
      return fail("realizer " + to_string(r) + " not in U");
    }
    for (std::size_t b = 0; b < w.set.size(); ++b) {
      bool is_adjacent = hamming_distance(r, w.set[b]) == t;
      bool wanted = (mask >> b) & 1;
      if (is_adjacent != wanted) {
        return fail("realizer " + to_string(r) + " for subset mask " +
                    std::to_string(mask) + " is " +
                    (is_adjacent ? "adjacent" : "not adjacent") + " to " +
                    to_string(w.set[b]));
      }
    }
  }
  return true;
}

SubsetProbe::SubsetProbe(const HammingParams& p, std::uint64_t cap)
    : params_(p), universe_(p.vertex_count(cap)) {
  small_ = universe_ <= 64;
  if (small_) {
    std::vector<Point> pts;
    pts.reserve(universe_);
    for (std::uint64_t i = 0; i < universe_; ++i) {
      pts.push_back(Point::decode(p, i));
    }
    nbr_.assign(universe_, 0);
    for (std::uint64_t i = 0; i < universe_; ++i) {
      for (std::uint64_t j = 0; j < universe_; ++j) {
        if (hamming_distance(pts[i], pts[j]) == p.t) {
          nbr_[i] |= std::uint64_t{1} << j;
        }
      }
    }
  }
}

bool SubsetProbe::vc_at_least(std::span<const std::uint64_t> mem,
                              int k) const {
  if (k < 0) return true;
  if (k == 0) return !mem.empty();
  if (static_cast<std::size_t>(k) > mem.size()) return false;
  if ((std::size_t{1} << k) > mem.size()) return false;
  if (!small_) {
    PointSet u = PointSet::of_indices(
        params_, std::vector<std::uint64_t>(mem.begin(), mem.end()));
    return has_vc_at_least(u, k);
  }
  std::uint64_t uset = 0;
  for (std::uint64_t v : mem) uset |= std::uint64_t{1} << v;
  const std::size_t m = mem.size();
  switch (k) {
    case 1: {
      for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t r = nbr_[mem[i]];
        if ((r & uset) && (~r & uset)) return true;
      }
      return false;
    }
    case 2: {
      for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t a = nbr_[mem[i]];
        for (std::size_t j = i + 1; j < m; ++j) {
          std::uint64_t b = nbr_[mem[j]];
          if ((a & b & uset) && (a & ~b & uset) && (~a & b & uset) &&
              (~a & ~b & uset)) {
            return true;
          }
        }
      }
      return false;
    }
    case 3: {
      for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t a = nbr_[mem[i]];
        for (std::size_t j = i + 1; j < m; ++j) {
          std::uint64_t b = nbr_[mem[j]];
          if (!(a & b & uset)) continue;
          for (std::size_t l = j + 1; l < m; ++l) {
            std::uint64_t c = nbr_[mem[l]];
            if ((a & b & c & uset) && (a & b & ~c & uset) &&
                (a & ~b & c & uset) && (a & ~b & ~c & uset) &&
                (~a & b & c & uset) && (~a & b & ~c & uset) &&
                (~a & ~b & c & uset) && (~a & ~b & ~c & uset)) {
              return true;
            }
          }
        }
      }
      return false;
    }
    default: {
      // Generic trace count over k chosen members.
      std::vector<std::size_t> ws(static_cast<std::size_t>(k));
      auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> bool {
        if (depth == ws.size()) {
          const std::uint32_t full = std::uint32_t{1} << k;
          std::vector<bool> seen(full, false);
          std::uint32_t count = 0;
          for (std::size_t ui = 0; ui < m && count < full; ++ui) {
            std::uint32_t mask = 0;
            for (std::size_t b = 0; b < ws.size(); ++b) {
              mask |= static_cast<std::uint32_t>(
                          (nbr_[mem[ws[b]]] >> mem[ui]) & 1)
                      << b;
            }
            if (!seen[mask]) {
              seen[mask] = true;
              ++count;
            }
          }
          return count == full;
        }
        for (std::size_t nxt = start; nxt + (ws.size() - depth) <= m; ++nxt) {
          ws[depth] = nxt;
          if (self(self, nxt + 1, depth + 1)) return true;
        }
        return false;
      };
      return rec(rec, 0, 0);
    }
  }
}

int SubsetProbe::vc_capped(std::span<const std::uint64_t> mem,
                           int max_k) const {
  if (mem.empty()) return -1;
  int k = 0;
  while (k <= max_k) {
    if (!vc_at_least(mem, k + 1)) return k;
    ++k;
  }
  return max_k + 1;
}

}  // namespace hamvc
