#include "cwidth/emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace cwidth {

using nlohmann::json;

std::string format_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_sig12(x).c_str(), nullptr);
}

const char* volume_method_name(VolumeMethod method) {
  switch (method) {
    case VolumeMethod::quadrature: return "quadrature";
    case VolumeMethod::mc_rejection: return "mc_rejection";
    case VolumeMethod::mc_radial: return "mc_radial";
  }
  return "unknown";
}

std::string radius_table_csv(const RadiusTable& table) {
  std::ostringstream out;
  out << "n,r_exact,r_schramm_lower,r_eq4_upper\n";
  for (const RadiusRow& row : table.rows) {
    out << row.n << ',' << format_sig12(row.r_exact) << ','
        << format_sig12(row.r_lower_schramm) << ',' << format_sig12(row.r_upper_eq4)
        << '\n';
  }
  return out.str();
}

json radius_table_json(const RadiusTable& table) {
  json rows = json::array();
  for (const RadiusRow& row : table.rows) {
    rows.push_back({{"n", row.n},
                    {"r_exact", json_number(row.r_exact)},
                    {"r_schramm_lower", json_number(row.r_lower_schramm)},
                    {"r_eq4_upper", json_number(row.r_upper_eq4)}});
  }
  json j{{"rows", rows}};
  if (table.first_n_below_0p9) {
    j["first_n_below_0p9"] = *table.first_n_below_0p9;
  } else {
    j["first_n_below_0p9"] = nullptr;
  }
  return j;
}

namespace {

// Linear-domain volume only while exp() is trustworthy; past n = 300 the
// log field is the deliverable.
double linear_volume(const VolumeResult& r) {
  if (r.n > 300) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(r.log_volume);
}

std::string csv_opt(double x) {
  return std::isfinite(x) ? format_sig12(x) : std::string();
}

}  // namespace

std::string volume_result_csv(const VolumeResult& r) {
  std::ostringstream out;
  out << "n,method,volume,log_volume,effective_radius,ci_low,ci_high,log_ci_low,"
         "log_ci_high,samples,seed\n";
  const double lo = r.log_ci_low.value_or(std::numeric_limits<double>::quiet_NaN());
  const double hi = r.log_ci_high.value_or(std::numeric_limits<double>::quiet_NaN());
  out << r.n << ',' << volume_method_name(r.method) << ',' << csv_opt(linear_volume(r))
      << ',' << format_sig12(r.log_volume) << ',' << format_sig12(r.effective_radius)
      << ',' << (r.n <= 300 ? csv_opt(std::exp(lo)) : std::string()) << ','
      << (r.n <= 300 ? csv_opt(std::exp(hi)) : std::string()) << ',' << csv_opt(lo)
      << ',' << csv_opt(hi) << ','
      << (r.samples ? std::to_string(*r.samples) : std::string()) << ','
      << (r.seed ? std::to_string(*r.seed) : std::string()) << '\n';
  return out.str();
}

json volume_result_json(const VolumeResult& r) {
  json j{{"n", r.n},
         {"method", volume_method_name(r.method)},
         {"volume", json_number(linear_volume(r))},
         {"log_volume", json_number(r.log_volume)},
         {"effective_radius", json_number(r.effective_radius)}};
  j["log_ci_low"] = r.log_ci_low ? json_number(*r.log_ci_low) : json(nullptr);
  j["log_ci_high"] = r.log_ci_high ? json_number(*r.log_ci_high) : json(nullptr);
  j["ci_low"] =
      (r.log_ci_low && r.n <= 300) ? json_number(std::exp(*r.log_ci_low)) : json(nullptr);
  j["ci_high"] =
      (r.log_ci_high && r.n <= 300) ? json_number(std::exp(*r.log_ci_high)) : json(nullptr);
  j["samples"] = r.samples ? json(*r.samples) : json(nullptr);
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  return j;
}

std::string width_check_csv(const WidthCheckReport& rep) {
  std::ostringstream out;
  out << "n,samples,seed,max_abs_width_minus_2,pass\n";
  out << rep.n << ',' << rep.samples << ',' << rep.seed << ','
      << format_sig12(rep.max_abs_deviation) << ',' << (rep.pass ? "true" : "false")
      << '\n';
  return out.str();
}

json width_check_json(const WidthCheckReport& rep) {
  return {{"n", rep.n},
          {"samples", rep.samples},
          {"seed", rep.seed},
          {"max_abs_width_minus_2", json_number(rep.max_abs_deviation)},
          {"pass", rep.pass}};
}

std::string s_optimum_csv(const SOptimum& opt) {
  std::ostringstream out;
  out << "key,value\n";
  out << "s," << format_sig12(opt.s) << '\n';
  out << "x_star," << format_sig12(opt.x_star) << '\n';
  out << "alpha_star," << format_sig12(opt.alpha_star) << '\n';
  out << "beta_star," << format_sig12(opt.beta_star) << '\n';
  out << "residual," << format_sig12(opt.residual) << '\n';
  out << "s_less_than_1.8," << (opt.s < 1.8 ? "true" : "false") << '\n';
  return out.str();
}

json s_optimum_json(const SOptimum& opt) {
  return {{"s", json_number(opt.s)},
          {"x_star", json_number(opt.x_star)},
          {"alpha_star", json_number(opt.alpha_star)},
          {"beta_star", json_number(opt.beta_star)},
          {"residual", json_number(opt.residual)},
          {"s_less_than_1.8", opt.s < 1.8}};
}

std::string triangle_bound_csv(const TriangleBound& tb) {
  std::ostringstream out;
  out << "alpha,beta,s_candidate,feasible\n";
  out << format_sig12(tb.alpha) << ',' << format_sig12(tb.beta) << ','
      << format_sig12(tb.s_candidate) << ',' << (tb.feasible ? "true" : "false") << '\n';
  return out.str();
}

json triangle_bound_json(const TriangleBound& tb) {
  return {{"alpha", json_number(tb.alpha)},
          {"beta", json_number(tb.beta)},
          {"s_candidate", json_number(tb.s_candidate)},
          {"feasible", tb.feasible}};
}

std::string check_results_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const CheckResult& c : results) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

json check_results_json(const std::vector<CheckResult>& results) {
  json checks = json::array();
  bool all = true;
  for (const CheckResult& c : results) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
  return {{"checks", checks}, {"all_pass", all}};
}

std::string polyline_csv(const BoundaryPolyline2D& poly) {
  std::ostringstream out;
  out << "x,y,arc\n";
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    out << format_sig12(poly.vertices[i].x()) << ',' << format_sig12(poly.vertices[i].y())
        << ',' << arc_tag_name(poly.arc_tags[i]) << '\n';
  }
  return out.str();
}

json polyline_json(const BoundaryPolyline2D& poly) {
  json vertices = json::array();
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    vertices.push_back({{"x", json_number(poly.vertices[i].x())},
                        {"y", json_number(poly.vertices[i].y())},
                        {"arc", arc_tag_name(poly.arc_tags[i])}});
  }
  return {{"vertices", vertices}};
}

std::string points_csv(const std::vector<Eigen::Vector2d>& points) {
  std::ostringstream out;
  out << "x,y\n";
  for (const auto& p : points) {
    out << format_sig12(p.x()) << ',' << format_sig12(p.y()) << '\n';
  }
  return out.str();
}

json points_json(const std::vector<Eigen::Vector2d>& points) {
  json arr = json::array();
  for (const auto& p : points) {
    arr.push_back({json_number(p.x()), json_number(p.y())});
  }
  return arr;
}

}  // namespace cwidth
