#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hamvc/hamming.hpp"

namespace hamvc {

enum class ConstructionName { U1, U2, U3, Diag, Band3, UStar };

// d is only consulted by Diag and Band3; the others fix their own ambient.
struct ConstructionSpec {
  ConstructionName name = ConstructionName::U1;
  int d = 2;
  int q = 2;
};

// Paired 2x2 blocks along the main diagonal of H(2,q,1); odd q appends the
// lone point (q-1,q-1). Size 2q for even q, 2q-1 for odd.
PointSet construct_u1(int q);

// Three consecutive columns per row of H(2,q,1): (c,r) with c = r, r+1, r+2
// mod q. Size 3q; every row and column carries exactly 3 points.
PointSet construct_u2(int q);

// Layered squares-with-apex in H(3,q,1), even q >= 4. Size 5q^2/4; the
// induced graph splits into q^2/4 five-vertex components.
PointSet construct_u3(int q);

// Diagonal hyperplane x[d-1] = sum of the other coordinates mod q, in
// H(d,q,1). Size q^(d-1); edge-free.
PointSet construct_diag(int d, int q, std::uint64_t cap = kDefaultVertexCap);

// Union of the diagonal hyperplanes shifted by eps in {q-1, 0, 2}, H(d,q,1),
// d >= 3. Size 3q^(d-1). Requires q >= 4 (distinct shifts); q in {4,5} is
// generable but outside the dimension guarantee, reported via *warning.
PointSet construct_band3(int d, int q, std::uint64_t cap = kDefaultVertexCap,
                         std::string* warning = nullptr);

// Axis cross {(a,0)} u {(0,b)} in H(2,q,2). Size 2q-1.
PointSet construct_ustar(int q);

PointSet construct(const ConstructionSpec& spec,
                   std::uint64_t cap = kDefaultVertexCap,
                   std::string* warning = nullptr);

// CLI-facing lowercase names: u1, u2, u3, diag, band3, ustar.
std::optional<ConstructionName> construction_from_name(std::string_view name);
std::string_view construction_cli_name(ConstructionName name);

}  // namespace hamvc
