#include "hamvc/constructions.hpp"

#include <stdexcept>
#include <vector>

namespace hamvc {

namespace {

constexpr int kBlock[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

PointSet construct_u1(int q) {
  require(q >= 2, "u1: q must be >= 2");
  HammingParams p{2, q, 1};
  std::vector<Point> pts;
  int even = q - (q % 2);
  for (int i = 0; i < even / 2; ++i) {
    for (const auto& b : kBlock) {
      pts.push_back(Point{(2 * i + b[0]) % q, (2 * i + b[1]) % q});
    }
  }
  if (q % 2) pts.push_back(Point{q - 1, q - 1});
  return PointSet::of(p, pts);
}

PointSet construct_u2(int q) {
  require(q >= 3, "u2: q must be >= 3");
  HammingParams p{2, q, 1};
  std::vector<Point> pts;
  for (int r = 0; r < q; ++r) {
    for (int s = 0; s < 3; ++s) pts.push_back(Point{(r + s) % q, r});
  }
  return PointSet::of(p, pts);
}

PointSet construct_u3(int q) {
  require(q >= 4, "u3: q must be >= 4");
  require(q % 2 == 0, "u3: q must be even");
  HammingParams p{3, q, 1};
  std::vector<Point> pts;
  for (int layer = 0; layer < q / 2; ++layer) {
    for (int i = 0; i < q / 2; ++i) {
      int ax = (2 * (i + layer)) % q;
      int ay = 2 * i;
      for (const auto& b : kBlock) {
        pts.push_back(Point{(ax + b[0]) % q, (ay + b[1]) % q, 2 * layer});
      }
      pts.push_back(Point{ax, ay, 2 * layer + 1});
    }
  }
  return PointSet::of(p, pts);
}

namespace {

// Points of x[d-1] = eps + sum_{j<d-1} x[j] mod q, enumerated by prefix.
void diagonal_shift(std::vector<Point>& out, int d, int q, int eps) {
  std::vector<int> x(static_cast<std::size_t>(d), 0);
  while (true) {
    int s = eps;
    for (int j = 0; j < d - 1; ++j) s += x[j];
    x[d - 1] = s % q;
    out.push_back(Point(std::vector<int>(x)));
    int j = d - 2;
    while (j >= 0 && x[j] == q - 1) x[j--] = 0;
    if (j < 0) break;
    ++x[j];
  }
}

}  // namespace

PointSet construct_diag(int d, int q, std::uint64_t cap) {
  require(d >= 2, "diag: d must be >= 2");
  require(q >= 2, "diag: q must be >= 2");
  HammingParams p{d, q, 1};
  p.validate(cap);
  std::vector<Point> pts;
  diagonal_shift(pts, d, q, 0);
  return PointSet::of(p, pts, cap);
}

PointSet construct_band3(int d, int q, std::uint64_t cap,
                         std::string* warning) {
  require(d >= 3, "band3: d must be >= 3");
  require(q >= 4, "band3: q must be >= 4 (shifts -1, 0, 2 collide mod q)");
  if (q < 6 && warning) {
    *warning = "band3: q < 6 is generable but has no dimension-below-3 guarantee";
  }
  HammingParams p{d, q, 1};
  p.validate(cap);
  std::vector<Point> pts;
  for (int eps : {q - 1, 0, 2}) diagonal_shift(pts, d, q, eps);
  return PointSet::of(p, pts, cap);
}

PointSet construct_ustar(int q) {
  require(q >= 2, "ustar: q must be >= 2");
  HammingParams p{2, q, 2};
  std::vector<Point> pts;
  for (int a = 0; a < q; ++a) pts.push_back(Point{a, 0});
  for (int b = 1; b < q; ++b) pts.push_back(Point{0, b});
  return PointSet::of(p, pts);
}

PointSet construct(const ConstructionSpec& spec, std::uint64_t cap,
                   std::string* warning) {
  switch (spec.name) {
    case ConstructionName::U1:
      return construct_u1(spec.q);
    case ConstructionName::U2:
      return construct_u2(spec.q);
    case ConstructionName::U3:
      return construct_u3(spec.q);
    case ConstructionName::Diag:
      return construct_diag(spec.d, spec.q, cap);
    case ConstructionName::Band3:
      return construct_band3(spec.d, spec.q, cap, warning);
    case ConstructionName::UStar:
      return construct_ustar(spec.q);
  }
  throw std::invalid_argument("construct: unknown construction");
}

std::optional<ConstructionName> construction_from_name(std::string_view name) {
  if (name == "u1") return ConstructionName::U1;
  if (name == "u2") return ConstructionName::U2;
  if (name == "u3") return ConstructionName::U3;
  if (name == "diag") return ConstructionName::Diag;
  if (name == "band3") return ConstructionName::Band3;
  if (name == "ustar") return ConstructionName::UStar;
  return std::nullopt;
}

std::string_view construction_cli_name(ConstructionName name) {
  switch (name) {
    case ConstructionName::U1:
      return "u1";
    case ConstructionName::U2:
      return "u2";
    case ConstructionName::U3:
      return "u3";
    case ConstructionName::Diag:
      return "diag";
    case ConstructionName::Band3:
      return "band3";
    case ConstructionName::UStar:
      return "ustar";
  }
  return "?";
}

}  // namespace hamvc
