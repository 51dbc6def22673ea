#pragma once

#include "binlct/gamma_fan.hpp"
#include "binlct/ideal.hpp"

#include <string>
#include <vector>

namespace binlct {

enum class Method { rays, resolution, howald_star };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct ReportRow {
  IntVector ray;
  ExtendedRational lct;
  ExtendedRational star;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Deterministic record of one run; decimal columns are derived at render
/// time, all stored values are exact.
struct RunReport {
  int version = 1;
  std::vector<std::string> vars;
  std::vector<std::string> generator_text;  // canonical rendering
  Method method = Method::rays;
  std::vector<ReportRow> rows;
  ExtendedRational global;
  std::vector<IntVector> argmin;
  size_t a_rows = 0;
  size_t ray_count = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_report(const GeneralBinomialIdeal& ideal, const RayTable& table, Method method);

/// Single self-describing JSON record, one line, key order fixed. Infinity
/// is encoded as den == 0.
std::string report_to_json(const RunReport& r);
RunReport report_from_json(const std::string& text);

std::string render_report_summary(const RunReport& r);
std::string render_report_table(const RunReport& r, bool with_star);

/// The two-block side-by-side layout: finite lct* rows left, infinite right.
std::string render_figure_layout(const RunReport& r);

std::string render_breakdown_text(const LctBreakdown& b);
std::string breakdown_to_json(const LctBreakdown& b);

}  // namespace binlct
