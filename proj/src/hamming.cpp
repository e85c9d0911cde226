#include "hamvc/hamming.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace hamvc {

std::uint64_t HammingParams::vertex_count(std::uint64_t cap) const {
  validate(cap);
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) n *= static_cast<std::uint64_t>(q);
  return n;
}

void HammingParams::validate(std::uint64_t cap) const {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    if (n > cap / static_cast<std::uint64_t>(q)) {
      throw std::invalid_argument("q^d exceeds vertex cap " +
                                  std::to_string(cap));
    }
    n *= static_cast<std::uint64_t>(q);
  }
  if (n > cap) {
    throw std::invalid_argument("q^d exceeds vertex cap " + std::to_string(cap));
  }
}

std::string to_string(const HammingParams& p) {
  return "H(" + std::to_string(p.d) + "," + std::to_string(p.q) + "," +
         std::to_string(p.t) + ")";
}

Point Point::reduced(const HammingParams& p, const std::vector<int>& raw) {
  std::vector<int> c(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int v = raw[i] % p.q;
    if (v < 0) v += p.q;
    c[i] = v;
  }
  return Point(std::move(c));
}

bool Point::valid_under(const HammingParams& p) const {
  if (static_cast<int>(coords_.size()) != p.d) return false;
  for (int v : coords_) {
    if (v < 0 || v >= p.q) return false;
  }
  return true;
}

std::uint64_t Point::encode(const HammingParams& p) const {
  if (!valid_under(p)) {
    throw std::invalid_argument("point " + to_string(*this) +
                                " not valid under " + to_string(p));
  }
  std::uint64_t idx = 0;
  for (int v : coords_) idx = idx * static_cast<std::uint64_t>(p.q) + v;
  return idx;
}

Point Point::decode(const HammingParams& p, std::uint64_t index) {
  std::vector<int> c(static_cast<std::size_t>(p.d));
  for (int i = p.d - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] =
        static_cast<int>(index % static_cast<std::uint64_t>(p.q));
    index /= static_cast<std::uint64_t>(p.q);
  }
  if (index != 0) throw std::invalid_argument("vertex index out of range");
  return Point(std::move(c));
}

std::string to_string(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

int hamming_distance(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("hamming_distance: dimension mismatch");
  }
  int dist = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    dist += x[i] != y[i];
  }
  return dist;
}

bool adjacent(const Point& x, const Point& y, const HammingParams& p) {
  return hamming_distance(x, y) == p.t;
}

bool Line::contains(const Point& x) const {
  if (static_cast<int>(x.dim()) != dim()) return false;
  std::size_t k = 0;
  for (int j = 0; j < dim(); ++j) {
    if (j == free_coord) continue;
    if (x[static_cast<std::size_t>(j)] != fixed[k++]) return false;
  }
  return true;
}

Point Line::point_at(const HammingParams& p, int value) const {
  std::vector<int> c(static_cast<std::size_t>(p.d));
  std::size_t k = 0;
  for (int j = 0; j < p.d; ++j) {
    c[static_cast<std::size_t>(j)] = (j == free_coord) ? value : fixed[k++];
  }
  return Point(std::move(c));
}

std::vector<Point> Line::points(const HammingParams& p) const {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(p.q));
  for (int v = 0; v < p.q; ++v) out.push_back(point_at(p, v));
  return out;
}

Line Line::through(const Point& x, int free_coord) {
  Line l;
  l.free_coord = free_coord;
  l.fixed.reserve(x.dim() - 1);
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (static_cast<int>(j) != free_coord) l.fixed.push_back(x[j]);
  }
  return l;
}

std::vector<Line> lines_through(const Point& x) {
  std::vector<Line> out;
  out.reserve(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    out.push_back(Line::through(x, static_cast<int>(j)));
  }
  return out;
}

bool collinear(const Point& x, const Point& y) {
  return hamming_distance(x, y) <= 1;
}

std::optional<Line> common_line(const Point& x, const Point& y) {
  if (hamming_distance(x, y) != 1) return std::nullopt;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x[j] != y[j]) return Line::through(x, static_cast<int>(j));
  }
  return std::nullopt;
}

bool Plane::contains(const Point& x) const {
  if (static_cast<int>(x.dim()) != dim()) return false;
  std::size_t k = 0;
  for (int j = 0; j < dim(); ++j) {
    if (j == free_lo || j == free_hi) continue;
    if (x[static_cast<std::size_t>(j)] != fixed[k++]) return false;
  }
  return true;
}

Point Plane::point_at(const HammingParams& p, int lo_value,
                      int hi_value) const {
  std::vector<int> c(static_cast<std::size_t>(p.d));
  std::size_t k = 0;
  for (int j = 0; j < p.d; ++j) {
    if (j == free_lo) {
      c[static_cast<std::size_t>(j)] = lo_value;
    } else if (j == free_hi) {
      c[static_cast<std::size_t>(j)] = hi_value;
    } else {
      c[static_cast<std::size_t>(j)] = fixed[k++];
    }
  }
  return Point(std::move(c));
}

ParseError::ParseError(int line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
      line(line_no) {}

PointSet::PointSet(const HammingParams& p, std::uint64_t cap) : params_(p) {
  universe_ = p.vertex_count(cap);
  words_.assign((universe_ + 63) / 64, 0);
}

PointSet PointSet::full(const HammingParams& p, std::uint64_t cap) {
  PointSet s(p, cap);
  for (std::uint64_t i = 0; i < s.universe_; ++i) s.set_index(i);
  return s;
}

PointSet PointSet::of(const HammingParams& p, const std::vector<Point>& pts,
                      std::uint64_t cap) {
  PointSet s(p, cap);
  for (const Point& x : pts) {
    std::uint64_t idx = x.encode(p);
    if (s.contains_index(idx)) {
      throw std::invalid_argument("duplicate point " + to_string(x));
    }
    s.set_index(idx);
  }
  return s;
}

PointSet PointSet::of_indices(const HammingParams& p,
                              const std::vector<std::uint64_t>& indices,
                              std::uint64_t cap) {
  PointSet s(p, cap);
  for (std::uint64_t idx : indices) {
    if (idx >= s.universe_) {
      throw std::invalid_argument("vertex index out of range");
    }
    if (s.contains_index(idx)) {
      throw std::invalid_argument("duplicate vertex index " +
                                  std::to_string(idx));
    }
    s.set_index(idx);
  }
  return s;
}

void PointSet::set_index(std::uint64_t index) {
  words_[index >> 6] |= std::uint64_t{1} << (index & 63);
  ++size_;
}

bool PointSet::contains_index(std::uint64_t index) const {
  if (index >= universe_) return false;
  return (words_[index >> 6] >> (index & 63)) & 1;
}

bool PointSet::contains(const Point& x) const {
  if (!x.valid_under(params_)) return false;
  return contains_index(x.encode(params_));
}

std::vector<std::uint64_t> PointSet::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(size_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back((static_cast<std::uint64_t>(w) << 6) + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(size_);
  for (std::uint64_t idx : indices()) out.push_back(Point::decode(params_, idx));
  return out;
}

PointSet PointSet::neighborhood(const Point& x) const {
  if (static_cast<int>(x.dim()) != params_.d) {
    throw std::invalid_argument("neighborhood: dimension mismatch");
  }
  PointSet out(params_);
  for (std::uint64_t idx : indices()) {
    Point y = Point::decode(params_, idx);
    if (hamming_distance(x, y) == params_.t) out.set_index(idx);
  }
  return out;
}

PointSet PointSet::slice(const Plane& plane) const {
  if (params_.d < 2) throw std::invalid_argument("slice needs d >= 2");
  if (plane.dim() != params_.d || plane.free_lo >= plane.free_hi ||
      plane.free_lo < 0 || plane.free_hi >= params_.d) {
    throw std::invalid_argument("slice: plane does not fit parameters");
  }
  HammingParams sp{2, params_.q, params_.t};
  PointSet out(sp);
  for (std::uint64_t idx : indices()) {
    Point y = Point::decode(params_, idx);
    if (!plane.contains(y)) continue;
    Point z({y[static_cast<std::size_t>(plane.free_lo)],
             y[static_cast<std::size_t>(plane.free_hi)]});
    out.set_index(z.encode(sp));
  }
  return out;
}

PointSet PointSet::restricted_to(const Line& line) const {
  if (line.dim() != params_.d) {
    throw std::invalid_argument("restricted_to: dimension mismatch");
  }
  PointSet out(params_);
  for (int v = 0; v < params_.q; ++v) {
    Point x = line.point_at(params_, v);
    std::uint64_t idx = x.encode(params_);
    if (contains_index(idx)) out.set_index(idx);
  }
  return out;
}

bool operator==(const PointSet& a, const PointSet& b) {
  return a.params_ == b.params_ && a.words_ == b.words_;
}

namespace {

bool significant(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return false;
    if (!isspace(static_cast<unsigned char>(ch))) return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::vector<long long> out;
  std::istringstream ss(line.substr(0, line.find('#')));
  std::string tok;
  while (ss >> tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError(line_no, "expected integer, got '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

PointSet parse_point_set(std::istream& in, std::uint64_t cap) {
  std::string line;
  int line_no = 0;
  std::optional<PointSet> set;
  std::unordered_map<std::uint64_t, int> first_seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!significant(line)) continue;
    std::vector<long long> vals = parse_ints(line, line_no);
    if (!set) {
      if (vals.size() != 3) {
        throw ParseError(line_no, "header must be 'd q t'");
      }
      HammingParams p{static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                      static_cast<int>(vals[2])};
      try {
        p.validate(cap);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      set.emplace(p, cap);
      continue;
    }
    if (vals.size() != static_cast<std::size_t>(set->params().d)) {
      throw ParseError(line_no, "expected " + std::to_string(set->params().d) +
                                    " coordinates, got " +
                                    std::to_string(vals.size()));
    }
    std::vector<int> raw(vals.begin(), vals.end());
    Point x = Point::reduced(set->params(), raw);
    std::uint64_t idx = x.encode(set->params());
    if (set->contains_index(idx)) {
      throw ParseError(line_no, "duplicate point " + to_string(x) +
                                    " (first seen at line " +
                                    std::to_string(first_seen[idx]) + ")");
    }
    set->set_index(idx);
    first_seen[idx] = line_no;
  }
  if (!set) throw ParseError(line_no, "missing 'd q t' header");
  return *std::move(set);
}

PointSet parse_point_set(const std::string& text, std::uint64_t cap) {
  std::istringstream ss(text);
  return parse_point_set(ss, cap);
}

std::string to_text(const PointSet& u, const std::string& header_comment) {
  std::string out;
  if (!header_comment.empty()) {
    out += "# " + header_comment + "\n";
  }
  const HammingParams& p = u.params();
  out += std::to_string(p.d) + " " + std::to_string(p.q) + " " +
         std::to_string(p.t) + "\n";
  for (const Point& x : u.points()) {
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (i) out += " ";
      out += std::to_string(x[i]);
    }
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::vector<bool>> induced_adjacency(const PointSet& u,
                                                 std::vector<Point>& pts) {
  pts = u.points();
  std::size_t n = pts.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool a = hamming_distance(pts[i], pts[j]) == u.params().t;
      adj[i][j] = adj[j][i] = a;
    }
  }
  return adj;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> connected_components(
    const PointSet& u) {
  std::vector<Point> pts;
  auto adj = induced_adjacency(u, pts);
  std::vector<std::uint64_t> idx = u.indices();
  std::size_t n = pts.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint64_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s};
    std::vector<std::uint64_t> comp;
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(idx[v]);
      for (std::size_t w = 0; w < n; ++w) {
        if (adj[v][w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> induced_degrees(const PointSet& u) {
  std::vector<Point> pts;
  auto adj = induced_adjacency(u, pts);
  std::size_t n = pts.size();
  std::vector<int> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) deg[i] += adj[i][j];
  }
  // t = 0 counts the loop at the vertex itself.
  if (u.params().t == 0) {
    for (auto& d : deg) d += 1;
  }
  return deg;
}

bool edge_free(const PointSet& u) {
  std::vector<Point> pts = u.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = (u.params().t == 0 ? i : i + 1); j < pts.size(); ++j) {
      if (hamming_distance(pts[i], pts[j]) == u.params().t) return false;
    }
  }
  return true;
}

}  // namespace hamvc
