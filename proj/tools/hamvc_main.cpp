#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hamvc/configs.hpp"
#include "hamvc/constructions.hpp"
#include "hamvc/hamming.hpp"
#include "hamvc/json_io.hpp"
#include "hamvc/shatter.hpp"
#include "hamvc/verify.hpp"

namespace {

using namespace hamvc;

// 0 success, 1 negative-but-valid outcome, 2 usage/parse/infeasible.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

PointSet read_point_set(const std::string& path) {
  if (path == "-") return parse_point_set(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_point_set(in);
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << body;
}

std::string render_witness_text(const ShatterWitness& w) {
  std::string out = "W =";
  for (const Point& x : w.set) out += " " + to_string(x);
  if (w.set.empty()) out += " {}";
  out += "\n";
  for (std::uint32_t mask = 0; mask < w.assignments.size(); ++mask) {
    out += "  S = {";
    bool first = true;
    for (std::size_t i = 0; i < w.set.size(); ++i) {
      if (mask & (1u << i)) {
        if (!first) out += ", ";
        out += to_string(w.set[i]);
        first = false;
      }
    }
    out += "}  u = " + to_string(w.assignments[mask]) + "\n";
  }
  return out;
}

std::string render_configuration_text(const Configuration& cfg) {
  std::string out = "kind = ";
  out += config_kind_name(cfg.kind);
  out += "\n";
  if (cfg.orientation) out += "orientation = " + *cfg.orientation + "\n";
  for (const auto& [name, point] : cfg.roles) {
    out += name + " = " + to_string(point) + "\n";
  }
  if (cfg.hole) out += "hole = " + to_string(*cfg.hole) + "\n";
  for (const Line& line : cfg.lines) {
    out += "line: free_coord " + std::to_string(line.free_coord) + ", fixed";
    for (int v : line.fixed) out += " " + std::to_string(v);
    out += "\n";
  }
  if (cfg.plane) {
    out += "plane: free " + std::to_string(cfg.plane->free_lo) + "," +
           std::to_string(cfg.plane->free_hi) + ", fixed";
    for (int v : cfg.plane->fixed) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

struct CommonFlags {
  std::string format = "text";
  bool progress = false;
};

void add_format_flag(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

std::function<void(std::uint64_t, std::uint64_t)> progress_to_stderr(
    bool enabled) {
  if (!enabled) return {};
  return [](std::uint64_t done, std::uint64_t total) {
    std::cerr << "progress: " << done;
    if (total > 0) std::cerr << " / " << total;
    std::cerr << "\n";
  };
}

int cmd_compute(const std::string& input, int max_k, const CommonFlags& flags) {
  PointSet u = read_point_set(input);
  VcResult r = vc_dimension(u, max_k);
  if (flags.format == "json") {
    std::cout << to_json(r).dump(2) << "\n";
    return kOk;
  }
  std::cout << "vc = " << r.dimension << "\n";
  if (r.witness) std::cout << render_witness_text(*r.witness);
  if (r.refuted_at) {
    std::cout << "no shattered set of size " << *r.refuted_at << "\n";
  }
  return kOk;
}

int cmd_construct(const std::string& name, int d, std::optional<int> q,
                  const std::string& output) {
  auto cname = construction_from_name(name);
  if (!cname) {
    std::cerr << "unknown construction: " << name << "\n";
    return kUsage;
  }
  if (!q) {
    std::cerr << "construct: --q is required\n";
    return kUsage;
  }
  ConstructionSpec spec{*cname, d, *q};
  std::string warning;
  PointSet u = construct(spec, kDefaultVertexCap, &warning);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  std::string header = std::string(construction_cli_name(*cname));
  if (cname == ConstructionName::Diag || cname == ConstructionName::Band3) {
    header += " d=" + std::to_string(d);
  }
  header += " q=" + std::to_string(*q) + ", " + std::to_string(u.size()) +
            " points";
  write_output(output, to_text(u, header));
  return kOk;
}

int cmd_detect(const std::string& kind_name, const std::string& input,
               bool emit_witness, const CommonFlags& flags) {
  auto kind = config_kind_from_name(kind_name);
  if (!kind) {
    std::cerr << "unknown configuration kind: " << kind_name << "\n";
    return kUsage;
  }
  PointSet u = read_point_set(input);
  std::optional<Configuration> cfg;
  switch (*kind) {
    case ConfigKind::LineTriple:
      cfg = find_line_triple(u);
      break;
    case ConfigKind::Corner:
      cfg = find_corner(u);
      break;
    case ConfigKind::Fist:
      cfg = find_fist(u);
      break;
    case ConfigKind::Rectangle:
      cfg = find_rectangle(u);
      break;
    case ConfigKind::Pluck:
      cfg = find_pluck(u);
      break;
    case ConfigKind::FourOnALine:
      cfg = find_four_on_line(u);
      break;
  }
  if (!cfg) {
    if (flags.format == "json") {
      std::cout << json{{"kind", config_kind_name(*kind)},
                        {"found", false}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "no " << config_kind_name(*kind) << " found\n";
    }
    return kNegative;
  }
  std::optional<ShatterWitness> witness;
  std::string witness_note;
  if (emit_witness) {
    try {
      witness = witness_from_config(*cfg, u);
    } catch (const RoleError& e) {
      witness_note = std::string("witness unavailable (role ") + e.role +
                     "): " + e.what();
    }
  }
  if (flags.format == "json") {
    json j = to_json(*cfg);
    j["found"] = true;
    if (witness) j["witness"] = to_json(*witness);
    if (!witness_note.empty()) j["witness_note"] = witness_note;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_configuration_text(*cfg);
    if (witness) {
      std::cout << "witness (validated):\n" << render_witness_text(*witness);
    }
    if (!witness_note.empty()) std::cout << witness_note << "\n";
  }
  return kOk;
}

int cmd_verify(const std::vector<std::string>& claim_names,
               const std::vector<int>& qs, std::optional<int> d,
               const std::string& mode_name, Budget budget,
               const std::string& output, const CommonFlags& flags) {
  std::vector<ClaimId> ids;
  if (claim_names.size() == 1 && claim_names[0] == "all") {
    ids = all_claim_ids();
  } else {
    for (const std::string& name : claim_names) {
      auto id = claim_id_from_name(name);
      if (!id) {
        std::cerr << "unknown claim id: " << name << "\n";
        return kUsage;
      }
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
  if (claims.empty()) {
    std::cerr << "no runnable claim instances for the given parameters\n";
    return kUsage;
  }

  std::vector<VerificationReport> reports;
  if (mode_name == "auto") {
    reports = run_suite(claims, budget);
  } else {
    const RunMode mode =
        mode_name == "exhaustive" ? RunMode::Exhaustive : RunMode::Sampled;
    for (const ClaimSpec& claim : claims) {
      switch (claim.shape) {
        case ClaimShape::Universal:
          reports.push_back(check_universal(claim, mode, budget));
          break;
        case ClaimShape::Tightness:
          reports.push_back(check_tightness(claim, budget));
          break;
        case ClaimShape::Property:
          reports.push_back(check_property(claim, budget));
          break;
      }
    }
  }

  json consolidated = json::object();
  consolidated["reports"] = json::array();
  for (const VerificationReport& r : reports) {
    consolidated["reports"].push_back(to_json(r));
  }
  const int code = suite_exit_code(reports);
  consolidated["exit_code"] = code;

  if (flags.format == "json" || !output.empty()) {
    write_output(output, consolidated.dump(2) + "\n");
  }
  if (flags.format == "text") {
    for (const VerificationReport& r : reports) {
      std::cout << claim_id_name(r.claim.id) << " q=" << r.claim.params.q
                << " d=" << r.claim.params.d << " ["
                << run_mode_name(r.mode) << "] " << outcome_name(r.outcome)
                << ", work " << r.work;
      if (!r.reason.empty()) std::cout << ": " << r.reason;
      if (!r.annotation.empty()) std::cout << " (" << r.annotation << ")";
      std::cout << "\n";
    }
  }
  return code;
}

int cmd_threshold(int d, int q, int t, int k, Budget budget,
                  const std::string& output, const CommonFlags& flags) {
  HammingParams params{d, q, t};
  ThresholdResult r = threshold_search(params, k, budget);
  if (flags.format == "json") {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "m* = " << r.m_star << " (certificate size "
              << r.certificate.size() << ", " << r.work
              << " subsets examined)\n";
  }
  if (!output.empty()) {
    write_output(output, to_text(r.certificate,
                                 "vc < " + std::to_string(k) +
                                     " certificate, m* = " +
                                     std::to_string(r.m_star)));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neighborhood VC dimension tools for Hamming graphs"};
  app.require_subcommand(1);

  CommonFlags flags;

  // compute
  auto* compute = app.add_subcommand("compute", "Dimension of a point set");
  std::string compute_input;
  int compute_max_k = kDefaultMaxK;
  compute->add_option("-i,--input", compute_input, "Point-set file, - for stdin")
      ->required();
  compute->add_option("--max-k", compute_max_k, "Search cutoff")
      ->capture_default_str();
  add_format_flag(compute, flags);

  // construct
  auto* construct = app.add_subcommand("construct", "Generate a named set");
  std::string construct_name;
  std::optional<int> construct_q;
  int construct_d = 3;
  std::string construct_out;
  construct->add_option("name", construct_name, "u1|u2|u3|diag|band3|ustar")
      ->required();
  construct->add_option("--q", construct_q, "Alphabet size");
  construct->add_option("--d", construct_d, "Dimension (diag, band3)")
      ->capture_default_str();
  construct->add_option("-o,--output", construct_out, "Output file, - for stdout");

  // detect
  auto* detect = app.add_subcommand("detect", "Search for a configuration");
  std::string detect_kind;
  std::string detect_input;
  bool detect_emit_witness = false;
  detect
      ->add_option("kind", detect_kind,
                   "line-triple|corner|fist|rectangle|pluck|four-on-a-line")
      ->required();
  detect->add_option("-i,--input", detect_input, "Point-set file, - for stdin")
      ->required();
  detect->add_flag("--emit-witness", detect_emit_witness,
                   "Convert the hit to a validated witness");
  add_format_flag(detect, flags);

  // verify
  auto* verify = app.add_subcommand("verify", "Check claims over subsets");
  std::vector<std::string> verify_claims;
  std::vector<int> verify_qs{3, 4};
  std::optional<int> verify_d;
  std::string verify_mode = "auto";
  std::optional<std::uint64_t> verify_seed;
  std::uint64_t verify_samples = 100'000;
  std::uint64_t verify_cap = 10'000'000;
  int verify_jobs = 1;
  std::string verify_out;
  verify->add_option("claims", verify_claims, "Claim ids, or 'all'")
      ->required();
  verify->add_option("--q", verify_qs, "Alphabet sizes")->capture_default_str();
  verify->add_option("--d", verify_d, "Override ambient dimension");
  verify->add_option("--mode", verify_mode, "Universal-claim strategy")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}))
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Seed for sampled runs");
  verify->add_option("--samples", verify_samples, "Sample count")
      ->capture_default_str();
  verify->add_option("--work-cap", verify_cap, "Subset-examination budget")
      ->capture_default_str();
  verify->add_option("--jobs", verify_jobs, "Worker threads")
      ->capture_default_str();
  verify->add_option("-o,--output", verify_out, "Write the JSON report here");
  verify->add_flag("--progress", flags.progress,
                   "Checkpoint counts on standard error");
  add_format_flag(verify, flags);

  // threshold
  auto* threshold = app.add_subcommand(
      "threshold", "Least m forcing dimension >= k, with certificate");
  int th_d = 2, th_q = 3, th_t = 1, th_k = 2;
  std::uint64_t th_cap = 10'000'000;
  std::string th_out;
  threshold->add_option("--d", th_d, "Dimension")->capture_default_str();
  threshold->add_option("--q", th_q, "Alphabet size")->capture_default_str();
  threshold->add_option("--t", th_t, "Adjacency distance")->capture_default_str();
  threshold->add_option("--k", th_k, "Target dimension")->capture_default_str();
  threshold->add_option("--work-cap", th_cap, "Subset-examination budget")
      ->capture_default_str();
  threshold->add_option("-o,--output", th_out, "Write the certificate here");
  threshold->add_flag("--progress", flags.progress,
                      "Checkpoint counts on standard error");
  add_format_flag(threshold, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(compute_input, compute_max_k, flags);
    if (*construct) {
      return cmd_construct(construct_name, construct_d, construct_q,
                           construct_out);
    }
    if (*detect) {
      return cmd_detect(detect_kind, detect_input, detect_emit_witness, flags);
    }
    if (*verify) {
      Budget budget;
      budget.work_cap = verify_cap;
      budget.samples = verify_samples;
      budget.seed = verify_seed;
      budget.jobs = verify_jobs;
      budget.progress = progress_to_stderr(flags.progress);
      return cmd_verify(verify_claims, verify_qs, verify_d, verify_mode,
                        budget, verify_out, flags);
    }
    if (*threshold) {
      Budget budget;
      budget.work_cap = th_cap;
      budget.progress = progress_to_stderr(flags.progress);
      return cmd_threshold(th_d, th_q, th_t, th_k, budget, th_out, flags);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";  // already prefixed with the line number
    return kUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
