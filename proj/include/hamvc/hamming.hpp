#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core geometry of generalized Hamming graphs H(d,q,t): vertices are d-tuples
// over Z_q, two vertices are adjacent when they differ in exactly t coordinates.
// t = 1 is the classical Hamming graph, t = 0 degenerates to a loop at every
// vertex, t > d yields an edge-free graph.

namespace hamvc {

inline constexpr std::uint64_t kDefaultVertexCap = std::uint64_t{1} << 24;

struct HammingParams {
  int d = 1;
  int q = 1;
  int t = 1;

  // q^d, guarded against overflow and against the vertex cap.
  std::uint64_t vertex_count(std::uint64_t cap = kDefaultVertexCap) const;
  void validate(std::uint64_t cap = kDefaultVertexCap) const;

  friend bool operator==(const HammingParams&, const HammingParams&) = default;
};

std::string to_string(const HammingParams& p);

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<int> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<int> coords) : coords_(coords) {}

  // Folds arbitrary integers into [0,q); negative values wrap (-1 -> q-1).
  static Point reduced(const HammingParams& p, const std::vector<int>& raw);

  const std::vector<int>& coords() const { return coords_; }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::size_t dim() const { return coords_.size(); }

  bool valid_under(const HammingParams& p) const;

  // Mixed-radix index with coordinate 0 most significant.
  std::uint64_t encode(const HammingParams& p) const;
  static Point decode(const HammingParams& p, std::uint64_t index);

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<int> coords_;
};

std::string to_string(const Point& x);

int hamming_distance(const Point& x, const Point& y);
bool adjacent(const Point& x, const Point& y, const HammingParams& p);

// Axis-parallel line: all q points obtained by varying free_coord while the
// other d-1 coordinates stay at the values in `fixed` (ascending coordinate
// order, skipping free_coord).
struct Line {
  int free_coord = 0;
  std::vector<int> fixed;

  int dim() const { return static_cast<int>(fixed.size()) + 1; }
  bool contains(const Point& x) const;
  std::vector<Point> points(const HammingParams& p) const;
  Point point_at(const HammingParams& p, int value) const;
  static Line through(const Point& x, int free_coord);

  friend bool operator==(const Line&, const Line&) = default;
};

std::vector<Line> lines_through(const Point& x);
bool collinear(const Point& x, const Point& y);
// The unique common line of two points at distance exactly 1; nullopt otherwise.
std::optional<Line> common_line(const Point& x, const Point& y);

// Axis-parallel plane: two free coordinates free_lo < free_hi, the remaining
// d-2 fixed (ascending coordinate order, skipping both).
struct Plane {
  int free_lo = 0;
  int free_hi = 1;
  std::vector<int> fixed;

  int dim() const { return static_cast<int>(fixed.size()) + 2; }
  bool contains(const Point& x) const;
  Point point_at(const HammingParams& p, int lo_value, int hi_value) const;

  friend bool operator==(const Plane&, const Plane&) = default;
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& message);
  int line;
};

// Immutable vertex subset of some H(d,q,t), bitset-backed, ordered by vertex
// index (which coincides with lexicographic coordinate order).
class PointSet {
 public:
  PointSet() : PointSet(HammingParams{}) {}
  explicit PointSet(const HammingParams& p,
                    std::uint64_t cap = kDefaultVertexCap);

  static PointSet full(const HammingParams& p,
                       std::uint64_t cap = kDefaultVertexCap);
  // Rejects duplicates and out-of-dimension points.
  static PointSet of(const HammingParams& p, const std::vector<Point>& pts,
                     std::uint64_t cap = kDefaultVertexCap);
  static PointSet of_indices(const HammingParams& p,
                             const std::vector<std::uint64_t>& indices,
                             std::uint64_t cap = kDefaultVertexCap);

  const HammingParams& params() const { return params_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::uint64_t universe_size() const { return universe_; }

  bool contains_index(std::uint64_t index) const;
  bool contains(const Point& x) const;

  std::vector<std::uint64_t> indices() const;  // ascending
  std::vector<Point> points() const;           // ascending index order

  // Members of this set at distance exactly t from x.
  PointSet neighborhood(const Point& x) const;

  // Members lying on the plane, re-indexed into H(2,q,t): plane.free_lo
  // becomes coordinate 0, plane.free_hi coordinate 1.
  PointSet slice(const Plane& plane) const;

  PointSet restricted_to(const Line& line) const;

  friend bool operator==(const PointSet& a, const PointSet& b);

 private:
  void set_index(std::uint64_t index);
  HammingParams params_;
  std::uint64_t universe_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;

  friend PointSet parse_point_set(std::istream& in, std::uint64_t cap);
};

// Text format: first significant line "d q t", then one point per line as d
// integers; '#' starts a comment, blank lines ignored. Coordinates are reduced
// mod q; duplicate points are rejected with the offending line number.
PointSet parse_point_set(std::istream& in,
                         std::uint64_t cap = kDefaultVertexCap);
PointSet parse_point_set(const std::string& text,
                         std::uint64_t cap = kDefaultVertexCap);
std::string to_text(const PointSet& u, const std::string& header_comment = {});

// Connected components of the graph induced on u (adjacency at params().t),
// each a vector of ascending vertex indices; components ordered by least index.
std::vector<std::vector<std::uint64_t>> connected_components(const PointSet& u);
// Degree of every member within the induced graph, ascending index order.
std::vector<int> induced_degrees(const PointSet& u);
bool edge_free(const PointSet& u);

}  // namespace hamvc
