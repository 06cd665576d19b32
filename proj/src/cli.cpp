#include "ginv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ginv/dsl.hpp"
#include "ginv/fuzz.hpp"
#include "ginv/invariants.hpp"
#include "ginv/json_io.hpp"
#include "ginv/numeric_oracle.hpp"

namespace ginv {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DecoratedGamma load(const std::string& path) {
  try {
    return parse_decorated(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ":" + e.what());
  }
}

json json_root() { return json{{"schema_version", kJsonSchemaVersion}}; }

/// Componentwise difference of two fingerprints: additive for degree and the
/// H values, multiplicative for conductor and root number.
struct FingerprintDelta {
  Rat degree;
  PowerProduct conductor;
  PhaseTwist omega;
  std::vector<GaussianRat> h;

  static FingerprintDelta between(const Fingerprint& from, const Fingerprint& to) {
    FingerprintDelta d;
    d.degree = to.degree - from.degree;
    d.conductor = to.conductor * from.conductor.inverse();
    d.omega = to.root_number.twist() * from.root_number.twist().inverse();
    for (std::size_t n = 0; n < from.h.size(); ++n) d.h.push_back(to.h[n] - from.h[n]);
    return d;
  }

  bool all_zero() const {
    if (!degree.is_zero() || !conductor.is_one() || !omega.is_identity()) return false;
    return std::all_of(h.begin(), h.end(), [](const GaussianRat& v) { return v.is_zero(); });
  }

  std::string str() const {
    if (all_zero()) return "d=0 q=1 omega=1 H*(0.." + std::to_string(h.size() - 1) + ")=0";
    std::string out;
    if (!degree.is_zero()) out += "d=" + degree.str() + " ";
    if (!conductor.is_one()) out += "q=" + conductor.str() + " ";
    if (!omega.is_identity()) out += "omega=" + omega.str() + " ";
    for (std::size_t n = 0; n < h.size(); ++n) {
      if (!h[n].is_zero()) out += "H*(" + std::to_string(n) + ")=" + h[n].str() + " ";
    }
    if (!out.empty()) out.pop_back();
    return out;
  }

  json to_json_value() const {
    json hh = json::array();
    for (const auto& v : h) hh.push_back(ginv::to_json(v));
    return json{{"degree", ginv::to_json(degree)},
                {"conductor", ginv::to_json(conductor)},
                {"omega_twist", ginv::to_json(omega)},
                {"h_star", std::move(hh)},
                {"all_zero", all_zero()}};
  }
};

void print_fingerprint_text(const Fingerprint& fp, std::ostream& out) {
  out << "degree      = " << fp.degree.str() << "\n";
  out << "conductor   = " << fp.conductor.str() << "\n";
  out << "root_number = " << fp.root_number.str() << "\n";
  for (std::size_t n = 0; n < fp.h.size(); ++n) {
    out << "H*(" << n << ")" << (n < 10 ? "       " : n < 100 ? "      " : "     ")
        << "= " << fp.h[n].str() << "\n";
  }
}

int cmd_invariants(const std::string& file, unsigned depth, bool as_json,
                   std::ostream& out) {
  const DecoratedGamma g = load(file);
  const Fingerprint fp = fingerprint(g, depth);
  if (as_json) {
    json j = json_root();
    j["fingerprint"] = to_json(fp);
    out << j.dump(2) << "\n";
  } else {
    print_fingerprint_text(fp, out);
  }
  return 0;
}

int cmd_transform(const std::string& file, const std::string& script, unsigned depth,
                  bool as_json, std::ostream& out) {
  const DecoratedGamma initial = load(file);
  const MoveTrace trace = parse_trace(script);

  DecoratedGamma current = initial;
  Fingerprint previous = fingerprint(current, depth);
  bool all_zero = true;
  json steps = json::array();
  std::ostringstream text;
  text << "initial: " << print_decorated(initial) << "\n";
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    current = apply_move(current, trace.moves[i]);
    const Fingerprint next = fingerprint(current, depth);
    const FingerprintDelta delta = FingerprintDelta::between(previous, next);
    all_zero = all_zero && delta.all_zero();
    if (as_json) {
      steps.push_back({{"move", print_move(trace.moves[i])},
                       {"delta", delta.to_json_value()},
                       {"Q", to_json(current.gamma.q)}});
    } else {
      text << "step " << (i + 1) << ": " << print_move(trace.moves[i])
           << "  Q=" << current.gamma.q.str() << "  delta: " << delta.str() << "\n";
    }
    previous = next;
  }
  if (as_json) {
    json j = json_root();
    j["steps"] = std::move(steps);
    j["result"] = to_json(current);
    j["all_zero"] = all_zero;
    out << j.dump(2) << "\n";
  } else {
    text << "result: " << print_decorated(current) << "\n";
    out << text.str();
  }
  return all_zero ? 0 : 2;
}

int cmd_reduce(const std::string& file, bool as_json, std::ostream& out) {
  const DecoratedGamma g = load(file);
  const ReduceResult reduced = reduce(g);
  if (as_json) {
    json j = json_root();
    j["result"] = to_json(reduced.value);
    j["trace"] = print_trace(reduced.trace);
    out << j.dump(2) << "\n";
  } else {
    out << "reduced: " << print_decorated(reduced.value) << "\n";
    out << "trace: " << (reduced.trace.empty() ? "(empty)" : print_trace(reduced.trace))
        << "\n";
  }
  return 0;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b, unsigned depth,
              bool as_json, std::ostream& out) {
  const DecoratedGamma a = load(file_a);
  const DecoratedGamma b = load(file_b);
  const Fingerprint fa = fingerprint(a, depth);
  const Fingerprint fb = fingerprint(b, depth);
  const std::string difference = first_fingerprint_difference(fa, fb);
  const bool equal = difference.empty();
  if (as_json) {
    json j = json_root();
    j["verdict"] = equal ? "fingerprint-equal" : "distinct";
    j["depth"] = depth;
    if (!equal) j["component"] = difference;
    out << j.dump(2) << "\n";
  } else if (equal) {
    out << "fingerprint-equal (depth " << depth << ")\n";
  } else {
    out << "distinct (" << difference << " differs)\n";
  }
  return equal ? 0 : 2;
}

int cmd_verify(const std::string& file_a, const std::string& file_b, double tol,
               bool as_json, std::ostream& out) {
  const DecoratedGamma a = load(file_a);
  const DecoratedGamma b = load(file_b);
  SamplePlan plan = SamplePlan::defaults();
  plan.tolerance = tol;
  const MoveReport report = verify_move(a, b, plan);
  const bool pass = report.max_rel_dev <= tol && report.omega_consistent;
  if (as_json) {
    json j = json_root();
    j["report"] = to_json(report);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << "c = " << report.c.real() << (report.c.imag() < 0 ? " - " : " + ")
        << std::abs(report.c.imag()) << "i\n";
    out << "max relative deviation = " << report.max_rel_dev << " (tolerance " << tol
        << ")\n";
    out << "omega consistent = " << (report.omega_consistent ? "yes" : "no") << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 2;
}

int cmd_fuzz(const FuzzConfig& cfg, bool as_json, std::ostream& out) {
  const SuiteSummary summary = run_suite(cfg);
  if (as_json) {
    json j = json_root();
    j["summary"] = to_json(summary);
    out << j.dump(2) << "\n";
  } else {
    out << "cases run        : " << summary.cases_run << "\n";
    out << "moves applied    : " << summary.moves.total() << " (expand "
        << summary.moves.expands << ", contract " << summary.moves.contracts
        << ", split " << summary.moves.splits << ", merge " << summary.moves.merges
        << ")\n";
    out << "exact failures   : " << summary.exact_failures << "\n";
    out << "numeric failures : " << summary.numeric_failures << "\n";
    for (const auto& f : summary.failures) {
      out << "-- case " << f.case_index << " [" << f.kind << "] " << f.message << "\n";
      out << "   data:  " << print_decorated(f.data) << "\n";
      out << "   trace: " << print_trace(f.trace) << "\n";
    }
  }
  return summary.ok() ? 0 : 2;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for gamma-factor data, rewriting moves and invariants"};
  app.name("gamma-invariants");
  app.require_subcommand(1);

  std::string file, file_b, script;
  unsigned depth = kDefaultFingerprintDepth;
  double tol = 1e-8;
  bool as_json = false;

  auto* inv = app.add_subcommand("invariants", "Fingerprint of a gamma-factor file");
  inv->add_option("file", file, "DSL file")->required();
  inv->add_option("--depth", depth, "H* depth (default 12, max 256)");
  inv->add_flag("--json", as_json, "machine-readable output");

  auto* tr = app.add_subcommand("transform", "Apply a move script, tracking deltas");
  tr->add_option("file", file, "DSL file")->required();
  tr->add_option("--script", script, "comma-separated moves")->required();
  tr->add_option("--depth", depth, "H* depth (default 12, max 256)");
  tr->add_flag("--json", as_json, "machine-readable output");

  auto* red = app.add_subcommand("reduce", "Expand until 0 <= Re(mu) < 1 throughout");
  red->add_option("file", file, "DSL file")->required();
  red->add_flag("--json", as_json, "machine-readable output");

  auto* eq = app.add_subcommand("equiv", "Compare fingerprints of two files");
  eq->add_option("fileA", file, "DSL file")->required();
  eq->add_option("fileB", file_b, "DSL file")->required();
  eq->add_option("--depth", depth, "H* depth (default 12, max 256)");
  eq->add_flag("--json", as_json, "machine-readable output");

  auto* ver = app.add_subcommand("verify", "Numeric constant-ratio check of two files");
  ver->add_option("fileA", file, "DSL file")->required();
  ver->add_option("fileB", file_b, "DSL file")->required();
  ver->add_option("--tol", tol, "relative tolerance (default 1e-8)");
  ver->add_flag("--json", as_json, "machine-readable output");

  FuzzConfig cfg;
  if (const char* env_seed = std::getenv("GAMMA_INVARIANTS_SEED")) {
    cfg.seed = std::strtoull(env_seed, nullptr, 10);
  }
  auto* fz = app.add_subcommand("fuzz", "Seeded random invariance suite");
  fz->add_option("--seed", cfg.seed, "RNG seed (env GAMMA_INVARIANTS_SEED)");
  fz->add_option("--cases", cfg.cases, "number of cases (default 1000)");
  fz->add_option("--max-r", cfg.max_r, "max factor count (default 4)");
  fz->add_option("--max-trace", cfg.max_trace, "max trace length (default 12)");
  fz->add_option("--max-m", cfg.max_m, "max multiplication order (default 6)");
  fz->add_option("--bound", cfg.component_bound, "component bound (default 20)");
  fz->add_option("--depth", cfg.depth, "fingerprint depth (default 12)");
  fz->add_option("--tol", cfg.numeric_tolerance, "numeric tolerance (default 1e-8)");
  fz->add_flag("--json", as_json, "machine-readable output");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(inv)) return cmd_invariants(file, depth, as_json, out);
    if (app.got_subcommand(tr)) return cmd_transform(file, script, depth, as_json, out);
    if (app.got_subcommand(red)) return cmd_reduce(file, as_json, out);
    if (app.got_subcommand(eq)) return cmd_equiv(file, file_b, depth, as_json, out);
    if (app.got_subcommand(ver)) return cmd_verify(file, file_b, tol, as_json, out);
    if (app.got_subcommand(fz)) return cmd_fuzz(cfg, as_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 1;
}

}  // namespace ginv
