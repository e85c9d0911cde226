#include "hamvc/configs.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace hamvc {

namespace {

void require_ambient(const PointSet& u, int d, int t, const char* who) {
  const HammingParams& p = u.params();
  if (d > 0 && p.d != d) {
    throw std::invalid_argument(std::string(who) + ": needs d = " +
                                std::to_string(d) + ", got d = " +
                                std::to_string(p.d));
  }
  if (p.t != t) {
    throw std::invalid_argument(std::string(who) + ": needs t = " +
                                std::to_string(t) + ", got t = " +
                                std::to_string(p.t));
  }
}

// Members grouped by line, keyed by (free_coord, fixed values) so that map
// order equals the canonical line scan order. Member lists stay in vertex
// order because the outer iteration is.
using LineKey = std::pair<int, std::vector<int>>;

std::map<LineKey, std::vector<Point>> members_by_line(const PointSet& u) {
  std::map<LineKey, std::vector<Point>> by_line;
  const int d = u.params().d;
  for (const Point& x : u.points()) {
    for (int free = 0; free < d; ++free) {
      std::vector<int> fixed;
      fixed.reserve(static_cast<std::size_t>(d) - 1);
      for (int c = 0; c < d; ++c) {
        if (c != free) fixed.push_back(x[static_cast<std::size_t>(c)]);
      }
      by_line[{free, std::move(fixed)}].push_back(x);
    }
  }
  return by_line;
}

Point substitute(const Point& base, int coord, int value) {
  std::vector<int> c = base.coords();
  c[static_cast<std::size_t>(coord)] = value;
  return Point(std::move(c));
}

}  // namespace

std::string_view config_kind_name(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::LineTriple:
      return "LineTriple";
    case ConfigKind::Corner:
      return "Corner";
    case ConfigKind::Fist:
      return "Fist";
    case ConfigKind::Rectangle:
      return "Rectangle";
    case ConfigKind::Pluck:
      return "Pluck";
    case ConfigKind::FourOnALine:
      return "FourOnALine";
  }
  return "?";
}

std::optional<ConfigKind> config_kind_from_name(std::string_view name) {
  if (name == "LineTriple" || name == "line-triple") return ConfigKind::LineTriple;
  if (name == "Corner" || name == "corner") return ConfigKind::Corner;
  if (name == "Fist" || name == "fist") return ConfigKind::Fist;
  if (name == "Rectangle" || name == "rectangle") return ConfigKind::Rectangle;
  if (name == "Pluck" || name == "pluck") return ConfigKind::Pluck;
  if (name == "FourOnALine" || name == "four-on-line" ||
      name == "four-on-a-line") {
    return ConfigKind::FourOnALine;
  }
  return std::nullopt;
}

const Point* Configuration::role(std::string_view name) const {
  for (const auto& [n, p] : roles) {
    if (n == name) return &p;
  }
  return nullptr;
}

RoleError::RoleError(std::string role_name, const std::string& message)
    : std::runtime_error(message), role(std::move(role_name)) {}

std::optional<Configuration> find_line_triple(const PointSet& u) {
  require_ambient(u, 0, 1, "find_line_triple");
  auto by_line = members_by_line(u);
  std::vector<Point> all = u.points();
  for (const auto& [key, mem] : by_line) {
    if (mem.size() < 3) continue;
    Line line{key.first, key.second};
    const Point* u0 = nullptr;
    for (const Point& cand : all) {
      if (!line.contains(cand)) {
        u0 = &cand;
        break;
      }
    }
    if (!u0) continue;
    // u0 is collinear with at most one member of the line (it differs from
    // the line's fixed values somewhere, so only a free-coordinate match can
    // bring it to distance 1). Skip that member when naming x and y.
    std::vector<Point> clear, conflict;
    for (const Point& m : mem) {
      (collinear(m, *u0) ? conflict : clear).push_back(m);
    }
    Configuration c;
    c.kind = ConfigKind::LineTriple;
    const Point& x = clear[0];
    const Point& y = clear[1];
    const Point& z = clear.size() > 2 ? clear[2] : conflict[0];
    c.roles = {{"x", x}, {"y", y}, {"z", z}, {"u0", *u0}};
    c.lines = {line};
    return c;
  }
  return std::nullopt;
}

std::optional<Configuration> find_corner(const PointSet& u) {
  require_ambient(u, 2, 1, "find_corner");
  const int q = u.params().q;
  // rows_of[a]: coord1 values present in column a; cols_of[r]: coord0 values
  // present in row r. Both ascending.
  std::vector<std::vector<int>> rows_of(static_cast<std::size_t>(q));
  std::vector<std::vector<int>> cols_of(static_cast<std::size_t>(q));
  for (const Point& m : u.points()) {
    rows_of[static_cast<std::size_t>(m[0])].push_back(m[1]);
    cols_of[static_cast<std::size_t>(m[1])].push_back(m[0]);
  }
  for (int a = 0; a < q; ++a) {
    for (int cc = 0; cc < q; ++cc) {
      if (u.contains(Point{a, cc})) continue;
      for (int dd : rows_of[static_cast<std::size_t>(a)]) {
        if (dd == cc) continue;
        for (int b : cols_of[static_cast<std::size_t>(cc)]) {
          if (b == a) continue;
          if (!u.contains(Point{b, dd})) continue;
          Configuration c;
          c.kind = ConfigKind::Corner;
          c.roles = {{"x", Point{a, dd}}, {"y", Point{b, cc}}, {"xy", Point{b, dd}}};
          c.hole = Point{a, cc};
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// One fist orientation. The principal line fixes `fixed_coord`; supports sit
// on the crossing lines (varying `fixed_coord`) through x, y, z.
std::optional<Configuration> find_fist_oriented(const PointSet& u,
                                                int fixed_coord,
                                                const char* orientation) {
  const int q = u.params().q;
  const int cross_coord = 1 - fixed_coord;
  std::vector<Point> all = u.points();
  for (int c = 0; c < q; ++c) {
    std::vector<Point> mem;
    for (const Point& m : all) {
      if (m[static_cast<std::size_t>(fixed_coord)] == c) mem.push_back(m);
    }
    const std::size_t n = mem.size();
    if (n < 4) continue;
    auto support_for = [&](const Point& w) -> const Point* {
      for (const Point& s : all) {
        if (s[static_cast<std::size_t>(cross_coord)] ==
                w[static_cast<std::size_t>(cross_coord)] &&
            s[static_cast<std::size_t>(fixed_coord)] != c) {
          return &s;
        }
      }
      return nullptr;
    };
    for (std::size_t i = 0; i < n; ++i) {
      const Point* sx = support_for(mem[i]);
      if (!sx) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        const Point* sy = support_for(mem[j]);
        if (!sy) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          const Point* sz = support_for(mem[k]);
          if (!sz) continue;
          const Point* u3 = nullptr;
          for (std::size_t r = 0; r < n; ++r) {
            if (r != i && r != j && r != k) {
              u3 = &mem[r];
              break;
            }
          }
          const Point* u0 = nullptr;
          for (const Point& cand : all) {
            if (cand[static_cast<std::size_t>(fixed_coord)] == c) continue;
            int cv = cand[static_cast<std::size_t>(cross_coord)];
            if (cv == mem[i][static_cast<std::size_t>(cross_coord)] ||
                cv == mem[j][static_cast<std::size_t>(cross_coord)] ||
                cv == mem[k][static_cast<std::size_t>(cross_coord)]) {
              continue;
            }
            u0 = &cand;
            break;
          }
          if (!u0) continue;
          Configuration cfg;
          cfg.kind = ConfigKind::Fist;
          cfg.orientation = orientation;
          cfg.roles = {{"x", mem[i]},   {"y", mem[j]}, {"z", mem[k]},
                       {"u3", *u3},     {"u_x", *sx},  {"u_y", *sy},
                       {"u_z", *sz},    {"u0", *u0}};
          cfg.lines = {Line{cross_coord, {c}},
                       Line::through(mem[i], fixed_coord),
                       Line::through(mem[j], fixed_coord),
                       Line::through(mem[k], fixed_coord)};
          return cfg;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Configuration> find_fist(const PointSet& u) {
  require_ambient(u, 2, 1, "find_fist");
  // Vertical fist: principal line is a column (coord0 fixed).
  if (auto c = find_fist_oriented(u, 0, "vertical")) return c;
  return find_fist_oriented(u, 1, "horizontal");
}

std::optional<Configuration> find_rectangle(const PointSet& u) {
  const HammingParams& p = u.params();
  if (p.d < 2) throw std::invalid_argument("find_rectangle: needs d >= 2");
  require_ambient(u, 0, 1, "find_rectangle");
  std::vector<Point> all = u.points();
  // Signature of a distance-2 pair: free coordinate pair, the shared fixed
  // values, and the two value sets. The matching of values splits the pairs
  // with one signature into two diagonal orientations; seeing both closes a
  // rectangle.
  std::map<std::vector<int>, std::array<std::optional<std::pair<Point, Point>>, 2>>
      seen;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (hamming_distance(all[a], all[b]) != 2) continue;
      int lo = -1, hi = -1;
      for (int c = 0; c < p.d; ++c) {
        if (all[a][static_cast<std::size_t>(c)] !=
            all[b][static_cast<std::size_t>(c)]) {
          if (lo < 0) {
            lo = c;
          } else {
            hi = c;
          }
        }
      }
      std::vector<int> key{lo, hi};
      for (int c = 0; c < p.d; ++c) {
        if (c != lo && c != hi) key.push_back(all[a][static_cast<std::size_t>(c)]);
      }
      int alo = all[a][static_cast<std::size_t>(lo)];
      int blo = all[b][static_cast<std::size_t>(lo)];
      int ahi = all[a][static_cast<std::size_t>(hi)];
      int bhi = all[b][static_cast<std::size_t>(hi)];
      key.push_back(std::min(alo, blo));
      key.push_back(std::max(alo, blo));
      key.push_back(std::min(ahi, bhi));
      key.push_back(std::max(ahi, bhi));
      // ascending: the point with the smaller lo-value also has the smaller
      // hi-value.
      int orient = ((alo < blo) == (ahi < bhi)) ? 0 : 1;
      auto& slot = seen[key];
      if (slot[1 - orient]) {
        int lo0 = key[static_cast<std::size_t>(p.d)];
        int lo1 = key[static_cast<std::size_t>(p.d) + 1];
        int hi0 = key[static_cast<std::size_t>(p.d) + 2];
        int hi1 = key[static_cast<std::size_t>(p.d) + 3];
        Configuration cfg;
        cfg.kind = ConfigKind::Rectangle;
        Point base = all[a];
        auto corner = [&](int lv, int hv) {
          return substitute(substitute(base, lo, lv), hi, hv);
        };
        cfg.roles = {{"p00", corner(lo0, hi0)},
                     {"p01", corner(lo0, hi1)},
                     {"p10", corner(lo1, hi0)},
                     {"p11", corner(lo1, hi1)}};
        std::vector<int> fixed(key.begin() + 2, key.begin() + p.d);
        cfg.plane = Plane{lo, hi, std::move(fixed)};
        return cfg;
      }
      if (!slot[orient]) slot[orient] = std::make_pair(all[a], all[b]);
    }
  }
  return std::nullopt;
}

std::optional<Configuration> find_four_on_line(const PointSet& u) {
  require_ambient(u, 0, 1, "find_four_on_line");
  auto by_line = members_by_line(u);
  for (const auto& [key, mem] : by_line) {
    if (mem.size() < 4) continue;
    Configuration c;
    c.kind = ConfigKind::FourOnALine;
    c.roles = {{"p0", mem[0]}, {"p1", mem[1]}, {"p2", mem[2]}, {"p3", mem[3]}};
    c.lines = {Line{key.first, key.second}};
    return c;
  }
  return std::nullopt;
}

namespace {

// One pluck orientation. principal_coord is the coordinate the principal
// line fixes: 1 for a row-pluck (fixed row index), 0 for a column-pluck.
std::optional<Configuration> find_pluck_oriented(const PointSet& u,
                                                 int principal_coord,
                                                 const char* orientation) {
  const int q = u.params().q;
  const int along = 1 - principal_coord;
  std::vector<Point> all = u.points();
  for (int r = 0; r < q; ++r) {
    std::vector<Point> mem;
    for (const Point& m : all) {
      if (m[static_cast<std::size_t>(principal_coord)] == r) mem.push_back(m);
    }
    if (mem.size() < 2) continue;
    // Support for pivot w: second member of w's crossing line. It realizes
    // the opposite pivot at t = 2 (differs from it in both coordinates).
    auto support_for = [&](const Point& w) -> const Point* {
      for (const Point& s : all) {
        if (s[static_cast<std::size_t>(along)] ==
                w[static_cast<std::size_t>(along)] &&
            s[static_cast<std::size_t>(principal_coord)] != r) {
          return &s;
        }
      }
      return nullptr;
    };
    for (std::size_t i = 0; i < mem.size(); ++i) {
      const Point* uy = support_for(mem[i]);
      if (!uy) continue;
      for (std::size_t j = i + 1; j < mem.size(); ++j) {
        const Point* ux = support_for(mem[j]);
        if (!ux) continue;
        const Point* unrelated = nullptr;
        for (const Point& cand : all) {
          if (cand[static_cast<std::size_t>(principal_coord)] == r) continue;
          int av = cand[static_cast<std::size_t>(along)];
          if (av == mem[i][static_cast<std::size_t>(along)] ||
              av == mem[j][static_cast<std::size_t>(along)]) {
            continue;
          }
          unrelated = &cand;
          break;
        }
        if (!unrelated) continue;
        Configuration cfg;
        cfg.kind = ConfigKind::Pluck;
        cfg.orientation = orientation;
        cfg.roles = {{"x", mem[i]},
                     {"y", mem[j]},
                     {"u_x", *ux},
                     {"u_y", *uy},
                     {"u_xy", *unrelated}};
        cfg.lines = {Line{along, {r}}};
        return cfg;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Configuration> find_pluck(const PointSet& u) {
  require_ambient(u, 2, 2, "find_pluck");
  if (auto c = find_pluck_oriented(u, 1, "row")) return c;
  return find_pluck_oriented(u, 0, "column");
}

namespace {

const Point& need_role(const Configuration& c, std::string_view name) {
  const Point* p = c.role(name);
  if (!p) {
    throw std::invalid_argument("witness_from_config: configuration lacks role " +
                                std::string(name));
  }
  return *p;
}

ShatterWitness checked(ShatterWitness w, const PointSet& u) {
  std::string diag;
  if (!validate_witness(w, u, &diag)) {
    throw std::invalid_argument("witness_from_config: assembled witness fails: " +
                                diag);
  }
  return w;
}

ShatterWitness corner_witness(const Configuration& c, const PointSet& u) {
  const Point& x = need_role(c, "x");
  const Point& y = need_role(c, "y");
  const Point& xy = need_role(c, "xy");
  const int a = x[0], dd = x[1], b = y[0], cc = y[1];
  if (xy != Point{b, dd} || !c.hole || *c.hole != Point{a, cc}) {
    throw std::invalid_argument("witness_from_config: malformed corner roles");
  }
  // Exactly-two-per-line regime on the four lines through x and y. Under it
  // the five named points are the only members on those lines, so any sixth
  // member realizes the empty set.
  std::vector<Point> col_a, col_b, row_c, row_d;
  for (const Point& m : u.points()) {
    if (m[0] == a) col_a.push_back(m);
    if (m[0] == b) col_b.push_back(m);
    if (m[1] == cc) row_c.push_back(m);
    if (m[1] == dd) row_d.push_back(m);
  }
  if (col_a.size() != 2 || (col_a[0] != x && col_a[1] != x)) {
    throw RoleError("u_x", "corner witness needs column " + std::to_string(a) +
                              " to hold exactly x and one support");
  }
  const Point& ux = col_a[col_a[0] == x ? 1 : 0];
  if (row_c.size() != 2 || (row_c[0] != y && row_c[1] != y)) {
    throw RoleError("u_y", "corner witness needs row " + std::to_string(cc) +
                              " to hold exactly y and one support");
  }
  const Point& uy = row_c[row_c[0] == y ? 1 : 0];
  auto is_exactly = [](const std::vector<Point>& line_members, const Point& p1,
                       const Point& p2) {
    return line_members.size() == 2 &&
           ((line_members[0] == p1 && line_members[1] == p2) ||
            (line_members[0] == p2 && line_members[1] == p1));
  };
  if (!is_exactly(row_d, x, xy) || !is_exactly(col_b, y, xy)) {
    throw RoleError("u_xy", "corner witness needs the lines through the corner "
                            "point to hold exactly two members");
  }
  std::optional<Point> u_empty;
  for (const Point& m : u.points()) {
    if (m != x && m != y && m != xy && m != ux && m != uy) {
      u_empty = m;
      break;
    }
  }
  if (!u_empty) {
    throw RoleError("u_empty", "corner witness needs a sixth member off all "
                               "four lines");
  }
  ShatterWitness w;
  w.set = {x, y};
  w.assignments = {*u_empty, ux, uy, xy};
  return w;
}

}  // namespace

ShatterWitness witness_from_config(const Configuration& c, const PointSet& u) {
  switch (c.kind) {
    case ConfigKind::LineTriple: {
      const Point& x = need_role(c, "x");
      const Point& y = need_role(c, "y");
      const Point& z = need_role(c, "z");
      const Point& u0 = need_role(c, "u0");
      ShatterWitness w;
      w.set = {x, y};
      w.assignments = {u0, y, x, z};
      return checked(std::move(w), u);
    }
    case ConfigKind::Corner:
      return checked(corner_witness(c, u), u);
    case ConfigKind::Fist: {
      const Point& x = need_role(c, "x");
      const Point& y = need_role(c, "y");
      const Point& z = need_role(c, "z");
      ShatterWitness w;
      w.set = {x, y, z};
      w.assignments = {need_role(c, "u0"),
                       need_role(c, "u_x"),
                       need_role(c, "u_y"),
                       z,
                       need_role(c, "u_z"),
                       y,
                       x,
                       need_role(c, "u3")};
      return checked(std::move(w), u);
    }
    case ConfigKind::Pluck: {
      const Point& x = need_role(c, "x");
      const Point& y = need_role(c, "y");
      ShatterWitness w;
      w.set = {x, y};
      w.assignments = {x, need_role(c, "u_x"), need_role(c, "u_y"),
                       need_role(c, "u_xy")};
      return checked(std::move(w), u);
    }
    case ConfigKind::Rectangle:
    case ConfigKind::FourOnALine:
      throw std::invalid_argument(
          "witness_from_config: " + std::string(config_kind_name(c.kind)) +
          " certifies line occupancy, not a shattering; no witness mapping");
  }
  throw std::invalid_argument("witness_from_config: unknown kind");
}

std::optional<std::pair<Plane, PointSet>> pigeonhole_slice(const PointSet& u,
                                                           int threshold) {
  const HammingParams& p = u.params();
  if (p.d < 3) throw std::invalid_argument("pigeonhole_slice: needs d >= 3");
  if (p.t != 1) throw std::invalid_argument("pigeonhole_slice: needs t = 1");
  if (threshold < 1) throw std::invalid_argument("pigeonhole_slice: threshold must be >= 1");
  std::vector<std::pair<int, int>> pairs{{p.d - 2, p.d - 1}};
  for (int lo = 0; lo < p.d; ++lo) {
    for (int hi = lo + 1; hi < p.d; ++hi) {
      if (lo == p.d - 2 && hi == p.d - 1) continue;
      pairs.emplace_back(lo, hi);
    }
  }
  std::vector<Point> all = u.points();
  for (auto [lo, hi] : pairs) {
    std::map<std::vector<int>, int> occupancy;
    for (const Point& m : all) {
      std::vector<int> fixed;
      fixed.reserve(static_cast<std::size_t>(p.d) - 2);
      for (int c = 0; c < p.d; ++c) {
        if (c != lo && c != hi) fixed.push_back(m[static_cast<std::size_t>(c)]);
      }
      ++occupancy[std::move(fixed)];
    }
    for (const auto& [fixed, count] : occupancy) {
      if (count >= threshold) {
        Plane plane{lo, hi, fixed};
        return std::make_pair(plane, u.slice(plane));
      }
    }
  }
  return std::nullopt;
}

}  // namespace hamvc
