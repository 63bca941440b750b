#pragma once

// Command-line front end. `run` never exits the process and writes only to
// the given streams, so it is testable in-process.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric_deform/altmann.hpp"
#include "toric_deform/errors.hpp"
#include "toric_deform/hulls.hpp"
#include "toric_deform/json_io.hpp"
#include "toric_deform/kmoduli.hpp"
#include "toric_deform/minkowski.hpp"
#include "toric_deform/polytope3.hpp"
#include "toric_deform/reference_examples.hpp"

#ifndef TORIC_DEFORM_VERSION
#define TORIC_DEFORM_VERSION "0.0.0"
#endif

namespace toric_deform::cli {

inline constexpr const char* kToolName = "toric-deform";
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Raised for argument values CLI11 cannot check by itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration cap, overridable through TORIC_DEFORM_CAP.
inline std::size_t enumeration_cap() {
  const char* env = std::getenv("TORIC_DEFORM_CAP");
  if (env == nullptr || *env == '\0') return geometry::kDefaultCopyCap;
  try {
    std::size_t pos = 0;
    const long v = std::stol(env, &pos);
    if (pos != std::string(env).size() || v < 1) throw UsageError("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("TORIC_DEFORM_CAP must be a positive integer, got '") + env + "'");
  }
}

inline BigInt parse_integer(const std::string& text, const std::string& what) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError(what + " must be an integer, got '" + text + "'");
  return v;
}

/// The smooth complete local ring of dimension t.
inline std::string smooth_hull(const BigInt& t) {
  static const char* names[] = {"C", "C[[x]]", "C[[x,y]]", "C[[x,y,z]]"};
  if (t >= 0 && t <= 3) return names[t.get_ui()];
  return "C[[x1..x" + to_string(t) + "]]";
}

inline io::Json envelope(io::Json input, io::Json result, const std::string& status) {
  io::Json j;
  j["tool"] = kToolName;
  j["version"] = TORIC_DEFORM_VERSION;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  j["status"] = status;
  return j;
}

inline void emit_json(std::ostream& out, const io::Json& j) { out << j.dump(2) << '\n'; }

inline std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  bool json = false;
  std::optional<unsigned> dmax;
  std::optional<std::size_t> drop;
  long aut_divisor = 4;
  std::string path;
  unsigned r = 0;
  unsigned newton_n = 0;
  std::uint32_t seed = 0;
  std::string n_text, q_text;
};

inline int cmd_analyze(const Options& o, std::ostream& out) {
  const auto f = io::polygon_from_file(o.path);
  hulls::require_unit_edge(f);
  std::optional<std::size_t> drop;
  if (o.drop) {
    if (*o.drop < 1 || *o.drop > f.size())
      throw UsageError("--drop must lie in 1.." + std::to_string(f.size()));
    drop = *o.drop - 1;
  }
  const auto report = hulls::hull_report(f, o.dmax, enumeration_cap());
  const auto pres = hulls::build_altmann_ideal(f, drop);
  if (o.json) {
    io::Json input;
    input["command"] = "analyze";
    input["path"] = o.path;
    input["polygon"] = io::polygon_to_json(f);
    input["dmax"] = report.hilbert.size() - 1;
    input["drop"] = pres.dropped + 1;
    io::Json result = io::to_json(report);
    result["presentation"] = io::to_json(pres);
    emit_json(out, envelope(input, result, "ok"));
    return kExitOk;
  }
  out << "polygon: " << f.to_string() << '\n';
  out << "edges: " << report.edge_count << '\n';
  out << "embedding dimension: " << report.embedding_dimension << '\n';
  out << "hilbert function: " << join(report.hilbert) << '\n';
  out << "classification: " << report.classification.to_string() << " (" << report.classification.algebra() << ")\n";
  out << "components: " << report.components.size() << '\n';
  for (const auto& c : report.components) {
    out << "  dimension " << c.dimension << ":";
    for (const auto& s : c.decomposition.summands) {
      out << " [";
      for (std::size_t i = 0; i < s.vertices.size(); ++i) out << (i ? "," : "") << s.vertices[i];
      out << ']';
    }
    out << '\n';
  }
  out << "artinian: " << yes_no(report.artinian) << '\n';
  out << "H(1) = m - 3: " << yes_no(report.h1_check) << '\n';
  if (report.h2_check) out << "H(2) = (m^2 - 5m + 2)/2: " << yes_no(*report.h2_check) << '\n';
  if (report.obstruction_check) out << "H(2) = (d^2 + d - 4)/2: " << yes_no(*report.obstruction_check) << '\n';
  out << "generators (edge " << pres.dropped + 1 << " dropped):\n";
  const auto ideal = pres.ideal();
  for (const auto& g : ideal.generators()) out << "  " << g.to_string() << '\n';
  return kExitOk;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  const auto f = io::polygon_from_file(o.path);
  const auto c = hulls::classify(f);
  if (o.json) {
    io::Json input;
    input["command"] = "classify";
    input["path"] = o.path;
    input["polygon"] = io::polygon_to_json(f);
    emit_json(out, envelope(input, io::to_json(c), "ok"));
  } else {
    out << c.to_string() << " (hull " << c.algebra() << ")\n";
  }
  return kExitOk;
}

inline int cmd_family(const Options& o, std::ostream& out) {
  const auto rep = fano::family_branch_report(o.r, BigInt(o.aut_divisor), enumeration_cap());
  if (o.json) {
    io::Json input;
    input["command"] = "family";
    input["r"] = o.r;
    input["aut_divisor"] = o.aut_divisor;
    emit_json(out, envelope(input, io::to_json(rep), rep.all_ok() ? "ok" : "failed"));
  } else {
    out << "r: " << rep.r << '\n';
    out << "vertices: " << rep.vertex_count << " (expected " << 6 * rep.r + 6 << ")\n";
    out << "unit edges: " << yes_no(rep.unit_edges) << '\n';
    out << "centrally symmetric: " << yes_no(rep.centrally_symmetric) << '\n';
    out << "decompositions: " << to_string(rep.bounds.decomposition_count) << " (at least " << to_string(rep.d_target)
        << ")\n";
    out << "stack branches >= " << to_string(rep.bounds.stack_lower) << " (at least " << to_string(rep.stack_target)
        << ")\n";
    out << "space branches >= " << to_string(rep.bounds.space_lower) << " (at least " << to_string(rep.space_target)
        << ", aut divisor " << to_string(rep.bounds.aut_divisor) << ")\n";
    out << "P_F fano: " << yes_no(rep.fano) << ", prism: " << yes_no(rep.prism)
        << ", reflexive: " << yes_no(rep.reflexive) << '\n';
    out << (rep.all_ok() ? "all checks pass" : "some checks FAIL") << '\n';
  }
  return rep.all_ok() ? kExitOk : kExitDomain;
}

inline int cmd_fano(const Options& o, std::ostream& out) {
  const auto f = io::polygon_from_file(o.path);
  const auto p = fano::build_P_F(f);
  const bool is_fano = fano::is_fano(p), reflexive = fano::is_reflexive(p);
  const bool symmetric = fano::is_centrally_symmetric(p), prism = fano::is_prism_over(p, f);
  if (o.json) {
    io::Json input;
    input["command"] = "fano";
    input["path"] = o.path;
    input["polygon"] = io::polygon_to_json(f);
    io::Json result;
    result["polytope"] = io::to_json(p);
    result["fano"] = is_fano;
    result["reflexive"] = reflexive;
    result["centrally_symmetric"] = symmetric;
    result["prism"] = prism;
    if (geometry::is_unit_edge(f)) result["branch_bounds"] = io::to_json(fano::kmoduli_branch_bounds(f, BigInt(o.aut_divisor), enumeration_cap()));
    emit_json(out, envelope(input, result, "ok"));
    return kExitOk;
  }
  out << "vertices: " << p.vertices().size() << ", facets: " << p.facets().size() << '\n';
  for (const auto& v : p.vertices()) out << "  " << v.to_string() << '\n';
  out << "fano: " << yes_no(is_fano) << '\n';
  out << "reflexive: " << yes_no(reflexive) << '\n';
  out << "centrally symmetric: " << yes_no(symmetric) << '\n';
  out << "prism over F: " << yes_no(prism) << '\n';
  if (geometry::is_unit_edge(f)) {
    const auto b = fano::kmoduli_branch_bounds(f, BigInt(o.aut_divisor), enumeration_cap());
    out << "decompositions: " << to_string(b.decomposition_count) << ", stack branches >= " << to_string(b.stack_lower)
        << ", space branches >= " << to_string(b.space_lower) << '\n';
  }
  return kExitOk;
}

/// Random rational coefficients with numerators and denominators bounded
/// by 10 in absolute value; checks the recurrence for k = n+1 .. n+4.
inline int cmd_newton(const Options& o, std::ostream& out) {
  std::mt19937 rng(o.seed);
  std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
  std::vector<BigRational> coeffs;
  for (unsigned i = 0; i < o.newton_n; ++i) coeffs.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  io::Json checks = io::Json::array();
  bool all = true;
  for (unsigned k = o.newton_n + 1; k <= o.newton_n + 4; ++k) {
    const bool ok = hulls::verify_newton_recurrence(coeffs, k);
    all &= ok;
    checks.push_back({{"k", k}, {"passed", ok}});
    if (!o.json) out << "k = " << k << ": " << (ok ? "pass" : "FAIL") << '\n';
  }
  if (o.json) {
    io::Json input;
    input["command"] = "newton-check";
    input["n"] = o.newton_n;
    input["seed"] = o.seed;
    io::Json coeff_text = io::Json::array();
    for (const auto& c : coeffs) coeff_text.push_back(c.to_string());
    io::Json result;
    result["coefficients"] = coeff_text;
    result["checks"] = checks;
    emit_json(out, envelope(input, result, all ? "ok" : "failed"));
  }
  return all ? kExitOk : kExitDomain;
}

inline int cmd_cyclic(const Options& o, std::ostream& out) {
  const BigInt n = parse_integer(o.n_text, "n"), q = parse_integer(o.q_text, "q");
  const BigInt t = hulls::cyclic_quotient_t1(n, q);
  if (o.json) {
    io::Json input;
    input["command"] = "cyclic-quotient";
    input["n"] = io::to_json(n);
    input["q"] = io::to_json(q);
    io::Json result;
    result["t1_dimension"] = io::to_json(t);
    result["hull"] = smooth_hull(t);
    result["classification"] = io::to_json(hulls::classify_cyclic_quotient(n, q));
    emit_json(out, envelope(input, result, "ok"));
  } else {
    out << to_string(t) << " (hull " << smooth_hull(t) << ")\n";
  }
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = reference::run_ledger();
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  const bool all = passed == results.size();
  if (o.json) {
    io::Json ledger = io::Json::array();
    for (const auto& r : results) {
      io::Json e;
      e["id"] = r.id;
      e["anchor"] = r.anchor;
      e["passed"] = r.passed;
      if (!r.error.empty()) e["error"] = r.error;
      ledger.push_back(e);
    }
    io::Json input;
    input["command"] = "verify-paper";
    emit_json(out, envelope(input, ledger, all ? "ok" : "failed"));
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.id << "  [" << r.anchor << "]";
      if (!r.error.empty()) out << "  error: " << r.error;
      out << '\n';
    }
    out << passed << "/" << results.size() << " reference examples pass\n";
  }
  return all ? kExitOk : kExitDomain;
}

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Deformations of isolated Gorenstein toric 3-fold singularities from lattice polygons", kToolName};
  app.set_version_flag("--version", std::string(TORIC_DEFORM_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--dmax", o.dmax, "Hilbert function depth")->check(CLI::Range(0u, 64u));
  app.add_option("--drop", o.drop, "Dropped edge, 1-based")->check(CLI::PositiveNumber);
  app.add_option("--aut-divisor", o.aut_divisor, "Automorphism divisor for space bounds")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Full deformation report for a polygon JSON file");
  analyze->add_option("path", o.path, "Polygon JSON")->required();
  auto* classify = app.add_subcommand("classify", "Isomorphism class of the hull");
  classify->add_option("path", o.path, "Polygon JSON")->required();
  auto* family = app.add_subcommand("family", "Branch bounds for the hexagon iterate family");
  family->add_option("--r", o.r, "Family index")->required()->check(CLI::Range(0u, 1000u));
  auto* fano_cmd = app.add_subcommand("fano", "The polytope P_F and its properties");
  fano_cmd->add_option("path", o.path, "Polygon JSON")->required();
  auto* newton = app.add_subcommand("newton-check", "Newton recurrence on random rational coefficients");
  newton->add_option("n", o.newton_n, "Number of variables")->required()->check(CLI::Range(1u, 8u));
  newton->add_option("seed", o.seed, "RNG seed")->required();
  auto* cyclic = app.add_subcommand("cyclic-quotient", "dim T^1 and hull of 1/n(1,q)");
  cyclic->add_option("n", o.n_text, "Order n")->required();
  cyclic->add_option("q", o.q_text, "Weight q")->required();
  auto* verify = app.add_subcommand("verify-paper", "Run the reference example ledger");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (family->parsed()) return cmd_family(o, out);
    if (fano_cmd->parsed()) return cmd_fano(o, out);
    if (newton->parsed()) return cmd_newton(o, out);
    if (cyclic->parsed()) return cmd_cyclic(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    if (o.json) {
      io::Json input;
      input["command"] = command;
      io::Json result;
      result["error"] = e.what();
      emit_json(out, envelope(input, result, "error"));
    }
    err << kToolName << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace toric_deform::cli
