#pragma once

#include <string>

#include "json.hpp"

#include "hamvc/configs.hpp"
#include "hamvc/hamming.hpp"
#include "hamvc/shatter.hpp"
#include "hamvc/verify.hpp"

// JSON renderings of every result type the tools emit. ordered_json keeps
// key order stable so equal inputs give byte-equal output.

namespace hamvc {

using json = nlohmann::ordered_json;

json to_json(const Point& x);
json to_json(const HammingParams& p);
json to_json(const Line& line);
json to_json(const Plane& plane);

// { "W": [[...],...], "assignments": [{ "S": [indices into W], "u": [...] },
// ...] } with assignments ordered by subset bitmask.
json to_json(const ShatterWitness& w);
ShatterWitness witness_from_json(const json& j);

json to_json(const VcResult& r);
json to_json(const Configuration& cfg);
json to_json(const ClaimSpec& c);
json to_json(const VerificationReport& r);
json to_json(const ThresholdResult& r);

Point point_from_json(const json& j);

}  // namespace hamvc
