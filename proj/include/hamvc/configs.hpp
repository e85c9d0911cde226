#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamvc/hamming.hpp"
#include "hamvc/shatter.hpp"

namespace hamvc {

enum class ConfigKind { LineTriple, Corner, Fist, Rectangle, Pluck, FourOnALine };

std::string_view config_kind_name(ConfigKind kind);
std::optional<ConfigKind> config_kind_from_name(std::string_view name);

// A detected geometric pattern. Roles are named points in a kind-specific
// order; everything needed to rebuild the incidences is in coordinates.
struct Configuration {
  ConfigKind kind = ConfigKind::LineTriple;
  std::vector<std::pair<std::string, Point>> roles;
  std::vector<Line> lines;
  std::optional<Point> hole;               // Corner: the absent fourth vertex
  std::optional<Plane> plane;              // Rectangle
  std::optional<std::string> orientation;  // Fist: vertical|horizontal, Pluck: row|column

  const Point* role(std::string_view name) const;
};

// Raised when a witness conversion cannot supply a required role point.
struct RoleError : std::runtime_error {
  RoleError(std::string role_name, const std::string& message);
  std::string role;
};

// Three collinear members x,y,z plus u0 off their line, with x,y chosen
// non-adjacent to u0. Lines scanned by free coordinate, then fixed values.
// Requires t = 1.
std::optional<Configuration> find_line_triple(const PointSet& u);

// Members (a,d),(b,c),(b,d) whose fourth rectangle vertex (a,c) is absent.
// Holes scanned in vertex order. Requires d = 2, t = 1.
std::optional<Configuration> find_corner(const PointSet& u);

// Four members x,y,z,u3 on a line, supports for x,y,z on their crossing
// lines, and u0 off all four lines. Vertical lines (columns) are scanned
// before horizontal. Requires d = 2, t = 1.
std::optional<Configuration> find_fist(const PointSet& u);

// Four members on the pairwise intersections of two parallel line pairs
// inside one plane. Found by hashing distance-2 pair signatures. Requires
// t = 1, d >= 2.
std::optional<Configuration> find_rectangle(const PointSet& u);

// First line (by free coordinate, then fixed values) carrying at least four
// members; the four least are reported. Requires t = 1.
std::optional<Configuration> find_four_on_line(const PointSet& u);

// Principal row (then column) with two pivots, a support in each pivot's
// column (row), and an unrelated member clear of all three lines. Requires
// d = 2, t = 2.
std::optional<Configuration> find_pluck(const PointSet& u);

// Converts a detected configuration into the explicit witness its pattern
// guarantees: size 2 for LineTriple/Corner/Pluck, size 3 for Fist. Corner
// additionally needs every line through the two W points to carry exactly
// two members; violations raise RoleError naming the unfillable role.
// Rectangle and FourOnALine have no witness mapping and are rejected.
ShatterWitness witness_from_config(const Configuration& c, const PointSet& u);

// First plane (free pair (d-2,d-1) first, then remaining pairs in lex order;
// fixed values in lex order per pair) whose restriction holds at least
// `threshold` members, together with that restriction as a 2D set.
// Requires d >= 3, t = 1.
std::optional<std::pair<Plane, PointSet>> pigeonhole_slice(const PointSet& u,
                                                           int threshold);

}  // namespace hamvc
