// lct: log canonical thresholds of ideals generated by monomials and
// binomials, computed over exact rationals and cross-checkable three ways
// (ray minimization, pseudo-resolution, Howald's formula).

#include "binlct/gamma_fan.hpp"
#include "binlct/newton.hpp"
#include "binlct/parse.hpp"
#include "binlct/report.hpp"
#include "binlct/resolution.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace binlct;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GeneralBinomialIdeal load_ideal(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ideal(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

unsigned resolve_threads(unsigned flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("LCT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

IntVector parse_direction(const std::string& text, size_t n) {
  IntVector v;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) throw InputError("bad --at vector '" + text + "'");
    cur = cur.substr(a, b - a + 1);
    size_t pos = cur[0] == '-' ? 1 : 0;
    if (pos >= cur.size()) throw InputError("bad --at vector '" + text + "'");
    for (size_t i = pos; i < cur.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(cur[i])))
        throw InputError("bad --at vector '" + text + "'");
    Int x(cur.substr(pos));
    v.push_back(pos == 1 ? Int(-x) : x);
  }
  if (v.size() != n)
    throw InputError("--at vector has " + std::to_string(v.size()) + " entries, ideal has " +
                     std::to_string(n) + " variables");
  return v;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
  }
};

void print_timing(const Timer& t) { std::cerr << "# elapsed: " << t.ms() << " ms\n"; }

int run_compute(const std::string& path, bool json, unsigned threads, bool table, bool with_star,
                bool figure) {
  GeneralBinomialIdeal ideal = load_ideal(path);
  Timer timer;
  RayTable tab = global_lct(ideal, threads);
  RunReport report = make_report(ideal, tab, Method::rays);
  if (json) {
    std::cout << report_to_json(report);
  } else if (figure) {
    std::cout << render_figure_layout(report);
    std::cout << "lct = " << report.global.str() << "\n";
  } else {
    std::cout << render_report_summary(report);
    if (table) std::cout << render_report_table(report, with_star);
  }
  print_timing(timer);
  return kExitOk;
}

int run_eval(const std::string& path, const std::string& at, bool json) {
  GeneralBinomialIdeal ideal = load_ideal(path);
  IdealTriple triple = triple_of(ideal);
  IntVector v = parse_direction(at, triple.var_count());
  LctBreakdown b;
  try {
    b = evaluate(triple, v);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::cout << (json ? breakdown_to_json(b) : render_breakdown_text(b));
  return kExitOk;
}

int run_resolve(const std::string& path, bool json) {
  GeneralBinomialIdeal ideal = load_ideal(path);
  Timer timer;
  PseudoResolution res = pseudo_resolve(triple_of(ideal));
  if (json) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < res.trace.size(); ++i) {
      const BlowupRecord& r = res.trace[i];
      if (i) out << ",";
      out << "{\"step\":" << r.step << ",\"target\":\"" << r.target << "\""
          << ",\"center\":[\"" << vec_str(r.center_vi) << "\",\"" << vec_str(r.center_vj)
          << "\"],\"new\":\"" << vec_str(r.new_vertex) << "\",\"L\":\"" << r.before.l.str()
          << "\",\"Lp\":" << r.before.lp << "}";
    }
    out << "]";
    std::cout << out.str() << "\n";
  } else {
    for (const BlowupRecord& r : res.trace) {
      std::cout << "step " << r.step << ": target " << r.target << ", center "
                << vec_str(r.center_vi) << "+" << vec_str(r.center_vj) << " -> "
                << vec_str(r.new_vertex) << ", L=" << r.before.l.str() << " Lp=" << r.before.lp
                << "\n";
    }
    std::cout << "blow-ups: " << res.trace.size() << "\n";
    std::cout << "vertices: " << res.fan.vertices.size() << "\n";
    std::cout << "maximal cones: " << res.fan.cones.size() << "\n";
  }
  print_timing(timer);
  return kExitOk;
}

int run_verify(const std::string& path, unsigned threads) {
  GeneralBinomialIdeal ideal = load_ideal(path);
  IdealTriple triple = triple_of(ideal);
  Timer timer;

  RayTable tab = global_lct(triple, threads);
  std::cout << "rays:       lct = " << tab.global.str() << " over " << tab.rays.size()
            << " rays\n";

  PseudoResolution res = pseudo_resolve(triple);
  ExtendedRational by_resolution = ExtendedRational::infinity();
  for (const IntVector& v : res.fan.vertices) {
    ExtendedRational val = evaluate(triple, v).value;
    if (val < by_resolution) by_resolution = val;
  }
  std::cout << "resolution: lct = " << by_resolution.str() << " after " << res.trace.size()
            << " blow-ups, " << res.fan.vertices.size() << " vertices\n";

  bool monomial_only = true;
  for (const Rat& u : triple.u)
    if (u != 0) monomial_only = false;
  std::optional<ExtendedRational> by_howald;
  if (monomial_only) {
    bool has_zero_row = false;
    for (size_t i = 0; i < triple.gen_count(); ++i)
      if (is_zero(triple.mplus[i])) has_zero_row = true;
    if (!has_zero_row) {
      std::vector<IntVector> gens;
      for (size_t i = 0; i < triple.gen_count(); ++i) gens.push_back(triple.mplus[i]);
      by_howald = howald_lct(make_newton(std::move(gens)),
                             DivisorShift{IntVector(triple.var_count(), Int(0))});
      std::cout << "howald:     lct = " << by_howald->str() << "\n";
    } else {
      std::cout << "howald:     skipped (unit monomial generator)\n";
    }
  } else {
    std::cout << "howald:     not applicable (ideal has binomial generators)\n";
  }

  print_timing(timer);
  bool agree = tab.global == by_resolution && (!by_howald || *by_howald == tab.global);
  if (!agree) {
    std::cout << "DISAGREEMENT\n";
    return kExitDisagree;
  }
  std::cout << "agreement: ok\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"log canonical thresholds of monomial/binomial ideals"};
  app.require_subcommand(1);

  std::string path;
  std::string at;
  bool json = false;
  bool with_star = false;
  bool figure = false;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* cmd, bool wants_threads) {
    cmd->add_option("file", path, "ideal input file")->required();
    cmd->add_flag("--json", json, "structured one-record output");
    if (wants_threads)
      cmd->add_option("--threads", threads, "worker threads (default LCT_THREADS or 1)");
  };

  CLI::App* compute = app.add_subcommand("compute", "global lct over the candidate rays");
  add_common(compute, true);

  CLI::App* rays = app.add_subcommand("rays", "per-ray table of lct and lct*");
  add_common(rays, true);
  rays->add_flag("--star", with_star, "include the lct* column");
  rays->add_flag("--figure", figure, "two-column layout, finite lct* left");

  CLI::App* eval = app.add_subcommand("eval", "evaluate the lct function at one direction");
  add_common(eval, false);
  eval->add_option("--at", at, "comma-separated direction, e.g. 6,8,10,11")->required();

  CLI::App* resolve = app.add_subcommand("resolve", "emit the pseudo-resolution trace");
  add_common(resolve, false);

  CLI::App* verify = app.add_subcommand("verify", "cross-check all computation paths");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    unsigned t = resolve_threads(threads);
    if (compute->parsed()) return run_compute(path, json, t, false, false, false);
    if (rays->parsed()) return run_compute(path, json, t, true, with_star, figure);
    if (eval->parsed()) return run_eval(path, at, json);
    if (resolve->parsed()) return run_resolve(path, json);
    if (verify->parsed()) return run_verify(path, t);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kExitInput;
}
