#include "hamvc/json_io.hpp"

#include <bit>

#include "hamvc/constructions.hpp"

namespace hamvc {

json to_json(const Point& x) { return json(x.coords()); }

Point point_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("point must be an array");
  std::vector<int> coords;
  coords.reserve(j.size());
  for (const auto& c : j) coords.push_back(c.get<int>());
  return Point(std::move(coords));
}

json to_json(const HammingParams& p) {
  return json{{"d", p.d}, {"q", p.q}, {"t", p.t}};
}

json to_json(const Line& line) {
  return json{{"free_coord", line.free_coord}, {"fixed", line.fixed}};
}

json to_json(const Plane& plane) {
  return json{{"free_lo", plane.free_lo},
              {"free_hi", plane.free_hi},
              {"fixed", plane.fixed}};
}

json to_json(const ShatterWitness& w) {
  json set = json::array();
  for (const Point& x : w.set) set.push_back(to_json(x));
  json assignments = json::array();
  for (std::uint32_t mask = 0; mask < w.assignments.size(); ++mask) {
    json s = json::array();
    for (std::size_t i = 0; i < w.set.size(); ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    assignments.push_back(json{{"S", s}, {"u", to_json(w.assignments[mask])}});
  }
  return json{{"W", set}, {"assignments", assignments}};
}

ShatterWitness witness_from_json(const json& j) {
  ShatterWitness w;
  for (const auto& p : j.at("W")) w.set.push_back(point_from_json(p));
  const auto& assigned = j.at("assignments");
  if (!std::has_single_bit(assigned.size()) ||
      assigned.size() != (std::size_t{1} << w.set.size())) {
    throw std::invalid_argument("witness needs one assignment per subset");
  }
  w.assignments.resize(assigned.size());
  std::vector<bool> seen(assigned.size(), false);
  for (const auto& entry : assigned) {
    std::uint32_t mask = 0;
    for (const auto& idx : entry.at("S")) {
      auto i = idx.get<std::size_t>();
      if (i >= w.set.size()) {
        throw std::invalid_argument("subset index out of range");
      }
      mask |= 1u << i;
    }
    if (seen[mask]) throw std::invalid_argument("duplicate subset");
    seen[mask] = true;
    w.assignments[mask] = point_from_json(entry.at("u"));
  }
  return w;
}

json to_json(const VcResult& r) {
  json j{{"dimension", r.dimension}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  j["refuted_at"] = r.refuted_at ? json(*r.refuted_at) : json(nullptr);
  return j;
}

json to_json(const Configuration& cfg) {
  json roles = json::object();
  for (const auto& [name, point] : cfg.roles) roles[name] = to_json(point);
  json lines = json::array();
  for (const Line& line : cfg.lines) lines.push_back(to_json(line));
  json j{{"kind", config_kind_name(cfg.kind)},
         {"roles", roles},
         {"lines", lines}};
  if (cfg.hole) j["hole"] = to_json(*cfg.hole);
  if (cfg.plane) j["plane"] = to_json(*cfg.plane);
  if (cfg.orientation) j["orientation"] = *cfg.orientation;
  return j;
}

namespace {

std::string_view shape_name(ClaimShape s) {
  switch (s) {
    case ClaimShape::Universal:
      return "universal";
    case ClaimShape::Tightness:
      return "tightness";
    case ClaimShape::Property:
      return "property";
  }
  return "?";
}

std::string_view relation_name(VcRelation r) {
  switch (r) {
    case VcRelation::AtLeast:
      return "at_least";
    case VcRelation::Equal:
      return "equal";
    case VcRelation::AtMost:
      return "at_most";
  }
  return "?";
}

}  // namespace

json to_json(const ClaimSpec& c) {
  json j{{"id", claim_id_name(c.id)},
         {"shape", shape_name(c.shape)},
         {"params", to_json(c.params)},
         {"m", c.m},
         {"k", c.k},
         {"relation", relation_name(c.relation)}};
  if (c.construction) {
    j["construction"] = json{{"name", construction_cli_name(c.construction->name)},
                             {"d", c.construction->d},
                             {"q", c.construction->q}};
  }
  if (c.property_samples) j["property_samples"] = c.property_samples;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const VerificationReport& r) {
  json j{{"claim", claim_id_name(r.claim.id)},
         {"mode", run_mode_name(r.mode)},
         {"outcome", outcome_name(r.outcome)},
         {"work", r.work}};
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  if (r.samples) j["samples"] = r.samples;
  j["spec"] = to_json(r.claim);
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.annotation.empty()) j["annotation"] = r.annotation;
  if (r.counterexample) {
    json pts = json::array();
    for (const Point& x : r.counterexample->points()) pts.push_back(to_json(x));
    j["counterexample"] = pts;
    if (r.counterexample_vc) {
      j["counterexample_vc"] = to_json(*r.counterexample_vc);
    }
  }
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

json to_json(const ThresholdResult& r) {
  json pts = json::array();
  for (const Point& x : r.certificate.points()) pts.push_back(to_json(x));
  return json{{"m_star", r.m_star},
              {"certificate", pts},
              {"work", r.work},
              {"elapsed_seconds", r.elapsed_seconds}};
}

}  // namespace hamvc
