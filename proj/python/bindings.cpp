#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hamvc/configs.hpp"
#include "hamvc/constructions.hpp"
#include "hamvc/hamming.hpp"
#include "hamvc/json_io.hpp"
#include "hamvc/shatter.hpp"
#include "hamvc/verify.hpp"

namespace py = pybind11;
using namespace hamvc;
using namespace pybind11::literals;

// Structured results cross the boundary as JSON strings; the python package
// decodes them. Keeps the binding surface to the operations themselves.

namespace {

PointSet set_from_lists(int d, int q, int t,
                        const std::vector<std::vector<int>>& pts) {
  HammingParams p{d, q, t};
  std::vector<Point> v;
  v.reserve(pts.size());
  for (const auto& coords : pts) v.push_back(Point::reduced(p, coords));
  return PointSet::of(p, v);
}

std::optional<Configuration> run_detector(ConfigKind kind, const PointSet& u) {
  switch (kind) {
    case ConfigKind::LineTriple:
      return find_line_triple(u);
    case ConfigKind::Corner:
      return find_corner(u);
    case ConfigKind::Fist:
      return find_fist(u);
    case ConfigKind::Rectangle:
      return find_rectangle(u);
    case ConfigKind::Pluck:
      return find_pluck(u);
    case ConfigKind::FourOnALine:
      return find_four_on_line(u);
  }
  throw std::invalid_argument("unhandled configuration kind");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "neighborhood VC dimension of vertex subsets of H(d,q,t)";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ParseError>(m, "PointSetParseError",
                                     PyExc_ValueError);
  py::register_exception<RoleError>(m, "RoleError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError",
                                          PyExc_RuntimeError);

  py::class_<PointSet>(m, "PointSet")
      .def(py::init(&set_from_lists), "d"_a, "q"_a, "t"_a, "points"_a,
           "Subset of H(d,q,t) from coordinate lists; values reduce mod q.")
      .def_static(
          "full",
          [](int d, int q, int t) {
            return PointSet::full(HammingParams{d, q, t});
          },
          "d"_a, "q"_a, "t"_a = 1)
      .def("__len__", &PointSet::size)
      .def_property_readonly("d",
                             [](const PointSet& u) { return u.params().d; })
      .def_property_readonly("q",
                             [](const PointSet& u) { return u.params().q; })
      .def_property_readonly("t",
                             [](const PointSet& u) { return u.params().t; })
      .def("points",
           [](const PointSet& u) {
             std::vector<std::vector<int>> out;
             out.reserve(u.size());
             for (const Point& x : u.points()) out.push_back(x.coords());
             return out;
           })
      .def("__eq__", [](const PointSet& a, const PointSet& b) { return a == b; })
      .def("__repr__", [](const PointSet& u) {
        return "PointSet(d=" + std::to_string(u.params().d) +
               ", q=" + std::to_string(u.params().q) +
               ", t=" + std::to_string(u.params().t) +
               ", size=" + std::to_string(u.size()) + ")";
      });

  m.def(
      "parse_point_set",
      [](const std::string& text) { return parse_point_set(text); },
      "text"_a, "Parse the point-set text format (header line 'd q t').");
  m.def(
      "to_text",
      [](const PointSet& u, const std::string& header) {
        return to_text(u, header);
      },
      "u"_a, "header"_a = std::string{});

  m.def(
      "vc_dimension_json",
      [](const PointSet& u, std::optional<int> max_k) {
        return to_json(vc_dimension(u, max_k)).dump();
      },
      "u"_a, "max_k"_a = std::nullopt);

  m.def(
      "validate_witness_json",
      [](const std::string& witness, const PointSet& u) {
        std::string diagnostic;
        bool ok = validate_witness(witness_from_json(json::parse(witness)), u,
                                   &diagnostic);
        return py::make_tuple(ok, diagnostic);
      },
      "witness"_a, "u"_a);

  m.def(
      "construct",
      [](const std::string& name, int q, int d) {
        auto cname = construction_from_name(name);
        if (!cname) throw std::invalid_argument("unknown construction: " + name);
        std::string warning;
        PointSet u =
            construct(ConstructionSpec{*cname, d, q}, kDefaultVertexCap,
                      &warning);
        return py::make_tuple(u, warning);
      },
      "name"_a, "q"_a, "d"_a = 3);

  m.def(
      "detect_json",
      [](const std::string& kind_name, const PointSet& u,
         bool emit_witness) -> std::optional<std::string> {
        auto kind = config_kind_from_name(kind_name);
        if (!kind) {
          throw std::invalid_argument("unknown configuration kind: " +
                                      kind_name);
        }
        auto cfg = run_detector(*kind, u);
        if (!cfg) return std::nullopt;
        json j = to_json(*cfg);
        if (emit_witness) j["witness"] = to_json(witness_from_config(*cfg, u));
        return j.dump();
      },
      "kind"_a, "u"_a, "emit_witness"_a = false);

  m.def(
      "pigeonhole_slice_json",
      [](const PointSet& u, int threshold) -> std::optional<std::string> {
        auto hit = pigeonhole_slice(u, threshold);
        if (!hit) return std::nullopt;
        json j{{"plane", to_json(hit->first)},
               {"slice_vc", to_json(vc_dimension(hit->second))}};
        return j.dump();
      },
      "u"_a, "threshold"_a);

  m.def(
      "verify_json",
      [](const std::vector<std::string>& claim_names,
         const std::vector<int>& qs, std::optional<int> d,
         std::optional<std::uint64_t> seed, std::uint64_t samples,
         std::uint64_t work_cap, int jobs) {
        std::vector<ClaimId> ids;
        if (claim_names.size() == 1 && claim_names[0] == "all") {
          ids = all_claim_ids();
        } else {
          for (const std::string& name : claim_names) {
            auto id = claim_id_from_name(name);
            if (!id) throw std::invalid_argument("unknown claim id: " + name);
            ids.push_back(*id);
          }
        }
        std::vector<ClaimSpec> claims;
        for (int q : qs) {
          for (ClaimId id : ids) {
            for (ClaimSpec& c : expand_claim(id, q, d)) {
              claims.push_back(std::move(c));
            }
          }
        }
        Budget budget;
        budget.seed = seed;
        budget.samples = samples;
        budget.work_cap = work_cap;
        budget.jobs = jobs;
        std::vector<VerificationReport> reports = run_suite(claims, budget);
        json out = json::object();
        out["reports"] = json::array();
        for (const VerificationReport& r : reports) {
          out["reports"].push_back(to_json(r));
        }
        out["exit_code"] = suite_exit_code(reports);
        return out.dump();
      },
      "claims"_a, "q"_a, "d"_a = std::nullopt, "seed"_a = std::nullopt,
      "samples"_a = std::uint64_t{100'000},
      "work_cap"_a = std::uint64_t{10'000'000}, "jobs"_a = 1);

  m.def(
      "threshold_json",
      [](int d, int q, int t, int k, std::uint64_t work_cap) {
        Budget budget;
        budget.work_cap = work_cap;
        return to_json(threshold_search(HammingParams{d, q, t}, k, budget))
            .dump();
      },
      "d"_a, "q"_a, "t"_a, "k"_a,
      "work_cap"_a = std::uint64_t{10'000'000});
}
