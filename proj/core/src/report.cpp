#include "binlct/report.hpp"

#include "binlct/parse.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace binlct {

using ordered_json = nlohmann::ordered_json;

std::string method_name(Method m) {
  switch (m) {
    case Method::rays: return "rays";
    case Method::resolution: return "resolution";
    case Method::howald_star: return "howald-star";
  }
  throw std::logic_error("method_name: bad method");
}

Method method_from_name(const std::string& name) {
  if (name == "rays") return Method::rays;
  if (name == "resolution") return Method::resolution;
  if (name == "howald-star") return Method::howald_star;
  throw std::invalid_argument("unknown method '" + name + "'");
}

RunReport make_report(const GeneralBinomialIdeal& ideal, const RayTable& table, Method method) {
  RunReport r;
  r.vars = ideal.vars;
  for (size_t i = 0; i < ideal.generators.size(); ++i)
    r.generator_text.push_back(render_generator(ideal, i));
  r.method = method;
  for (size_t i = 0; i < table.rays.size(); ++i)
    r.rows.push_back({table.rays[i], table.breakdowns[i].value, table.breakdowns[i].star});
  r.global = table.global;
  r.argmin = table.argmin;
  r.a_rows = table.hyperplane_count;
  r.ray_count = table.rays.size();
  return r;
}

namespace {

ordered_json value_json(const ExtendedRational& v) {
  return ordered_json{{"num", v.numerator().str()}, {"den", v.denominator().str()}};
}

ExtendedRational value_from_json(const ordered_json& j) {
  Int num(j.at("num").get<std::string>());
  Int den(j.at("den").get<std::string>());
  return ExtendedRational::ratio(num, den);
}

ordered_json vector_json(const IntVector& v) {
  ordered_json arr = ordered_json::array();
  for (const Int& x : v) arr.push_back(x.str());
  return arr;
}

IntVector vector_from_json(const ordered_json& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(Int(x.get<std::string>()));
  return v;
}

}  // namespace

std::string report_to_json(const RunReport& r) {
  ordered_json j;
  j["version"] = r.version;
  j["ideal"] = ordered_json{{"vars", r.vars}, {"generators", r.generator_text}};
  j["method"] = method_name(r.method);
  ordered_json rows = ordered_json::array();
  for (const ReportRow& row : r.rows) {
    rows.push_back(ordered_json{{"ray", vector_json(row.ray)},
                                {"lct", value_json(row.lct)},
                                {"star", value_json(row.star)}});
  }
  j["rows"] = std::move(rows);
  j["global"] = value_json(r.global);
  ordered_json arg = ordered_json::array();
  for (const IntVector& v : r.argmin) arg.push_back(vector_json(v));
  j["argmin"] = std::move(arg);
  j["counts"] = ordered_json{{"A_rows", r.a_rows}, {"rays", r.ray_count}};
  return j.dump() + "\n";
}

RunReport report_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  RunReport r;
  r.version = j.at("version").get<int>();
  r.vars = j.at("ideal").at("vars").get<std::vector<std::string>>();
  r.generator_text = j.at("ideal").at("generators").get<std::vector<std::string>>();
  r.method = method_from_name(j.at("method").get<std::string>());
  for (const auto& row : j.at("rows")) {
    r.rows.push_back({vector_from_json(row.at("ray")), value_from_json(row.at("lct")),
                      value_from_json(row.at("star"))});
  }
  r.global = value_from_json(j.at("global"));
  for (const auto& v : j.at("argmin")) r.argmin.push_back(vector_from_json(v));
  r.a_rows = j.at("counts").at("A_rows").get<size_t>();
  r.ray_count = j.at("counts").at("rays").get<size_t>();
  return r;
}

namespace {

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

struct TableCell {
  std::string ray, lct, lct_dec, star, star_dec;
};

TableCell cell_of(const ReportRow& row) {
  return {vec_str(row.ray), row.lct.str(), row.lct.decimal(), row.star.str(),
          row.star.decimal()};
}

std::string format_block(const std::vector<TableCell>& cells, bool with_star) {
  TableCell head{"ray", "lct", "", "lct*", ""};
  size_t w_ray = head.ray.size(), w_lct = head.lct.size(), w_dec = 6, w_star = head.star.size(),
         w_sdec = 6;
  for (const auto& c : cells) {
    w_ray = std::max(w_ray, c.ray.size());
    w_lct = std::max(w_lct, c.lct.size());
    w_dec = std::max(w_dec, c.lct_dec.size());
    w_star = std::max(w_star, c.star.size());
    w_sdec = std::max(w_sdec, c.star_dec.size());
  }
  std::string out = pad("ray", w_ray) + "  " + pad("lct", w_lct + 2 + w_dec);
  if (with_star) out += "  " + pad("lct*", w_star + 2 + w_sdec);
  out += "\n";
  for (const auto& c : cells) {
    out += pad(c.ray, w_ray) + "  " + pad(c.lct, w_lct) + "  " + pad(c.lct_dec, w_dec);
    if (with_star) out += "  " + pad(c.star, w_star) + "  " + pad(c.star_dec, w_sdec);
    out += "\n";
  }
  return out;
}

}  // namespace

std::string render_report_summary(const RunReport& r) {
  std::ostringstream out;
  out << "vars:";
  for (const auto& v : r.vars) out << " " << v;
  out << "\ngenerators:\n";
  for (const auto& g : r.generator_text) out << "  " << g << "\n";
  out << "method: " << method_name(r.method) << "\n";
  out << "A rows: " << r.a_rows << "\n";
  out << "rays: " << r.ray_count << "\n";
  out << "lct = " << r.global.str();
  if (r.global.finite()) out << " (" << r.global.decimal() << ")";
  out << "\nargmin:";
  for (const auto& v : r.argmin) out << " " << vec_str(v);
  out << "\n";
  return out.str();
}

std::string render_report_table(const RunReport& r, bool with_star) {
  std::vector<TableCell> cells;
  cells.reserve(r.rows.size());
  for (const auto& row : r.rows) cells.push_back(cell_of(row));
  return format_block(cells, with_star);
}

std::string render_figure_layout(const RunReport& r) {
  std::vector<TableCell> finite, infinite;
  for (const auto& row : r.rows) {
    if (row.star.finite())
      finite.push_back(cell_of(row));
    else
      infinite.push_back(cell_of(row));
  }
  std::string left = format_block(finite, true);
  std::string right = format_block(infinite, true);

  std::vector<std::string> lls, rls;
  std::istringstream ls(left), rs(right);
  std::string line;
  size_t lw = 0;
  while (std::getline(ls, line)) {
    lw = std::max(lw, line.size());
    lls.push_back(line);
  }
  while (std::getline(rs, line)) rls.push_back(line);

  std::string out;
  for (size_t i = 0; i < std::max(lls.size(), rls.size()); ++i) {
    std::string l = i < lls.size() ? lls[i] : "";
    std::string rr = i < rls.size() ? rls[i] : "";
    if (rr.empty()) {
      out += l + "\n";
    } else {
      out += pad(l, lw + 4) + rr + "\n";
    }
  }
  return out;
}

std::string render_breakdown_text(const LctBreakdown& b) {
  std::ostringstream out;
  Int total = 0;
  for (const Int& x : b.v) total += x;
  auto int_list = [](const std::vector<Int>& xs) {
    std::string s = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ",";
      s += xs[i].str();
    }
    return s + ")";
  };
  auto index_list = [](const std::vector<size_t>& xs, size_t shift) {
    std::string s = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(xs[i] + shift);
    }
    return s + ")";
  };
  out << "v = " << vec_str(b.v) << "\n";
  out << "|v| = " << total.str() << "\n";
  out << "alpha = " << int_list(b.alpha) << "\n";
  out << "beta = " << int_list(b.beta) << "\n";
  out << "epsilon = " << index_list(b.epsilon, 1) << "\n";
  out << "r0 = " << b.r0 << "\n";
  out << "rank M = " << b.s_rank << "\n";
  out << "tilde_s = " << b.tilde_s.str() << "\n";
  out << "n_seq = " << index_list(b.n_seq, 0) << "\n";
  out << "s0 = " << b.s0 << "\n";
  out << "s_v = " << b.s_v << "\n";
  out << "candidates:";
  for (const auto& c : b.candidates) out << " " << c.str();
  out << "\n";
  out << "lct = " << b.value.str();
  if (b.value.finite()) out << " (" << b.value.decimal() << ")";
  out << "\n";
  out << "lct* = " << b.star.str();
  if (b.star.finite()) out << " (" << b.star.decimal() << ")";
  out << "\n";
  return out.str();
}

std::string breakdown_to_json(const LctBreakdown& b) {
  ordered_json j;
  j["v"] = vector_json(b.v);
  ordered_json alpha = ordered_json::array(), beta = ordered_json::array();
  for (const Int& x : b.alpha) alpha.push_back(x.str());
  for (const Int& x : b.beta) beta.push_back(x.str());
  j["alpha"] = std::move(alpha);
  j["beta"] = std::move(beta);
  ordered_json eps = ordered_json::array();
  for (size_t e : b.epsilon) eps.push_back(e + 1);
  j["epsilon"] = std::move(eps);
  j["r0"] = b.r0;
  j["rank"] = b.s_rank;
  j["tilde_s"] = value_json(b.tilde_s);
  j["n_seq"] = b.n_seq;
  j["s0"] = b.s0;
  j["s_v"] = b.s_v;
  ordered_json cands = ordered_json::array();
  for (const auto& c : b.candidates) cands.push_back(value_json(c));
  j["candidates"] = std::move(cands);
  j["value"] = value_json(b.value);
  j["star"] = value_json(b.star);
  return j.dump() + "\n";
}

}  // namespace binlct
