// Command-line front end: tables, verification suites, and geometry exports
// with deterministic, scriptable output. Exit codes: 0 success, 1 check
// failure, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cwidth/body.hpp"
#include "cwidth/bounds.hpp"
#include "cwidth/checks.hpp"
#include "cwidth/emit.hpp"
#include "cwidth/lowdim.hpp"
#include "cwidth/volume.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

// Output destination; CWIDTH_OUT_DIR prefixes relative paths.
std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path p(out);
  if (const char* dir = std::getenv("CWIDTH_OUT_DIR"); dir && p.is_relative()) {
    return std::filesystem::path(dir) / p;
  }
  return p;
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  const auto path = resolve_out(out);
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("failed to write " + path.string());
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct CommonOpts {
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out,-o", opts.out, "Output path (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-width body toolkit: volumes, bounds, and exports"};
  app.require_subcommand(1);

  // radius-table
  CommonOpts rt_opts;
  int rt_from = 2, rt_to = 10, rt_step = 1;
  auto* rt = app.add_subcommand("radius-table",
                                "Effective radius vs. the lower/upper bounds per dimension");
  rt->add_option("--from", rt_from, "First dimension")->capture_default_str();
  rt->add_option("--to", rt_to, "Last dimension")->capture_default_str();
  rt->add_option("--step", rt_step, "Dimension step")->capture_default_str();
  add_common(rt, rt_opts);

  // volume
  CommonOpts vol_opts;
  int vol_n = 3;
  std::string vol_method = "exact";
  long long vol_samples = 1000000;
  std::uint64_t vol_seed = 0;
  auto* vol = app.add_subcommand("volume", "Volume and effective radius for one dimension");
  vol->add_option("-n,--n", vol_n, "Dimension")->required();
  vol->add_option("--method", vol_method, "exact (quadrature), mc, or mc-radial")
      ->check(CLI::IsMember({"exact", "mc", "mc-radial"}))
      ->capture_default_str();
  vol->add_option("--samples", vol_samples, "Monte Carlo sample count")->capture_default_str();
  vol->add_option("--seed", vol_seed, "Monte Carlo seed")->capture_default_str();
  add_common(vol, vol_opts);

  // width-check
  CommonOpts wc_opts;
  int wc_n = 10;
  long long wc_samples = 1000000;
  std::uint64_t wc_seed = 0;
  auto* wc = app.add_subcommand("width-check", "Random-direction width sweep");
  wc->add_option("-n,--n", wc_n, "Dimension")->required();
  wc->add_option("--samples", wc_samples, "Direction count")->capture_default_str();
  wc->add_option("--seed", wc_seed, "Seed")->capture_default_str();
  add_common(wc, wc_opts);

  // bounds
  CommonOpts bd_opts;
  bool bd_solve_s = false;
  double bd_alpha = 0.0, bd_beta = 0.0;
  int bd_n = 0;
  auto* bd = app.add_subcommand("bounds", "Triangle feasibility and the minimal s");
  bd->add_flag("--solve-s", bd_solve_s, "Solve the constrained minimum s (default action)");
  auto* bd_alpha_opt = bd->add_option("--alpha", bd_alpha, "Triangle a-intercept");
  bd->add_option("--beta", bd_beta, "Triangle b-intercept")->needs(bd_alpha_opt);
  bd->add_option("-n,--n", bd_n, "Also evaluate the dimension-n radius bound");
  add_common(bd, bd_opts);

  // verify
  CommonOpts vf_opts;
  long long vf_samples = 1000000;
  std::uint64_t vf_seed = 0;
  auto* vf = app.add_subcommand("verify", "Run the built-in verification checklist");
  vf->add_option("--samples", vf_samples, "Sample budget per check")->capture_default_str();
  vf->add_option("--seed", vf_seed, "Seed")->capture_default_str();
  add_common(vf, vf_opts);

  // mesh
  std::string mesh_out;
  int mesh_level = 6;
  bool mesh_colorize = false;
  auto* ms = app.add_subcommand("mesh", "Export the n=3 boundary as Wavefront OBJ");
  ms->add_option("--level", mesh_level, "Octahedral subdivision level (1 = octahedron)")
      ->capture_default_str();
  ms->add_flag("--colorize", mesh_colorize, "Group faces into 8 octant materials");
  ms->add_option("--out,-o", mesh_out, "Output path (default: standard output)");

  // boundary2d
  CommonOpts b2_opts;
  int b2_points = 256;
  auto* b2 = app.add_subcommand("boundary2d", "Four-arc boundary polyline of the n=2 body");
  b2->add_option("--points-per-arc", b2_points, "Vertices per arc")->capture_default_str();
  add_common(b2, b2_opts);

  // plot-data
  CommonOpts pd_opts;
  std::string pd_what;
  double pd_alpha = 1.5;
  double pd_beta = 0.7 * std::numbers::sqrt2;
  int pd_points = 256;
  auto* pd = app.add_subcommand("plot-data", "Point lists for the region A and triangle plots");
  pd->add_option("--what", pd_what, "A or triangle")
      ->required()
      ->check(CLI::IsMember({"A", "triangle"}));
  pd->add_option("--alpha", pd_alpha, "Triangle a-intercept")->capture_default_str();
  pd->add_option("--beta", pd_beta, "Triangle b-intercept")->capture_default_str();
  pd->add_option("--points", pd_points, "Arc sample count")->capture_default_str();
  add_common(pd, pd_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rt->parsed()) {
      const cwidth::RadiusTable table = cwidth::radius_table(rt_from, rt_to, rt_step);
      if (rt_opts.format == "csv") {
        write_output(rt_opts.out, cwidth::radius_table_csv(table));
        if (table.first_n_below_0p9) {
          std::cerr << "first n with r_n < 0.9 in range: " << *table.first_n_below_0p9
                    << "\n";
        }
      } else {
        write_output(rt_opts.out, dump(cwidth::radius_table_json(table)));
      }
      return kExitSuccess;
    }

    if (vol->parsed()) {
      cwidth::VolumeResult result;
      if (vol_method == "exact") {
        result = cwidth::exact_volume(vol_n);
      } else if (vol_method == "mc") {
        if (vol_n > 25) {
          std::cerr << "note: rejection sampling is statistically useless past n ~ 25; "
                       "consider --method mc-radial\n";
        }
        result = cwidth::mc_volume(vol_n, vol_samples, vol_seed);
      } else {
        result = cwidth::mc_volume_radial(vol_n, vol_samples, vol_seed);
      }
      write_output(vol_opts.out, vol_opts.format == "csv"
                                     ? cwidth::volume_result_csv(result)
                                     : dump(cwidth::volume_result_json(result)));
      return kExitSuccess;
    }

    if (wc->parsed()) {
      const cwidth::WidthCheckReport rep = cwidth::width_check(wc_n, wc_samples, wc_seed);
      write_output(wc_opts.out, wc_opts.format == "csv"
                                    ? cwidth::width_check_csv(rep)
                                    : dump(cwidth::width_check_json(rep)));
      return rep.pass ? kExitSuccess : kExitCheckFailure;
    }

    if (bd->parsed()) {
      if (bd_alpha_opt->count() > 0) {
        const cwidth::TriangleBound tb = cwidth::triangle_feasible(bd_alpha, bd_beta);
        nlohmann::json j = cwidth::triangle_bound_json(tb);
        std::string csv = cwidth::triangle_bound_csv(tb);
        if (bd_n > 0 && tb.feasible) {
          const double bound = cwidth::eq3_upper_bound(bd_n, bd_alpha, bd_beta);
          j["r_upper_eq3"] = cwidth::json_number(bound);
          csv += "r_upper_eq3," + cwidth::format_sig12(bound) + "\n";
        }
        write_output(bd_opts.out, bd_opts.format == "csv" ? csv : dump(j));
        return kExitSuccess;
      }
      const cwidth::SOptimum opt = cwidth::minimize_s();  // default action: --solve-s
      write_output(bd_opts.out, bd_opts.format == "csv" ? cwidth::s_optimum_csv(opt)
                                                        : dump(cwidth::s_optimum_json(opt)));
      return kExitSuccess;
    }

    if (vf->parsed()) {
      const std::vector<cwidth::CheckResult> results =
          cwidth::run_verification(vf_samples, vf_seed);
      bool all = true;
      for (const auto& c : results) all = all && c.pass;
      if (vf_opts.format == "json") {
        write_output(vf_opts.out, dump(cwidth::check_results_json(results)));
      } else {
        write_output(vf_opts.out, cwidth::check_results_text(results));
      }
      return all ? kExitSuccess : kExitCheckFailure;
    }

    if (ms->parsed()) {
      const cwidth::TriangleMesh3D mesh = cwidth::mesh_3d(mesh_level);
      std::ostringstream obj;
      cwidth::export_obj(mesh, obj, mesh_colorize);
      write_output(mesh_out, obj.str());
      return kExitSuccess;
    }

    if (b2->parsed()) {
      const cwidth::BoundaryPolyline2D poly = cwidth::boundary_polyline_2d(b2_points);
      write_output(b2_opts.out, b2_opts.format == "csv"
                                    ? cwidth::polyline_csv(poly)
                                    : dump(cwidth::polyline_json(poly)));
      return kExitSuccess;
    }

    if (pd->parsed()) {
      const std::vector<Eigen::Vector2d> pts =
          pd_what == "A" ? cwidth::region_a_outline(pd_points)
                         : cwidth::triangle_outline(pd_alpha, pd_beta);
      write_output(pd_opts.out, pd_opts.format == "csv" ? cwidth::points_csv(pts)
                                                        : dump(cwidth::points_json(pts)));
      return kExitSuccess;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
