#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cwidth/bounds.hpp"
#include "cwidth/checks.hpp"
#include "cwidth/lowdim.hpp"
#include "cwidth/volume.hpp"

namespace cwidth {

/// Numbers are rendered with 12 significant digits everywhere so identical
/// runs give byte-identical output.
std::string format_sig12(double x);

/// JSON value carrying at most 12 significant digits; null for non-finite.
nlohmann::json json_number(double x);

const char* volume_method_name(VolumeMethod method);

std::string radius_table_csv(const RadiusTable& table);
nlohmann::json radius_table_json(const RadiusTable& table);

std::string volume_result_csv(const VolumeResult& result);
nlohmann::json volume_result_json(const VolumeResult& result);

std::string width_check_csv(const WidthCheckReport& report);
nlohmann::json width_check_json(const WidthCheckReport& report);

std::string s_optimum_csv(const SOptimum& opt);
nlohmann::json s_optimum_json(const SOptimum& opt);

std::string triangle_bound_csv(const TriangleBound& tb);
nlohmann::json triangle_bound_json(const TriangleBound& tb);

std::string check_results_text(const std::vector<CheckResult>& results);
nlohmann::json check_results_json(const std::vector<CheckResult>& results);

std::string polyline_csv(const BoundaryPolyline2D& poly);
nlohmann::json polyline_json(const BoundaryPolyline2D& poly);

std::string points_csv(const std::vector<Eigen::Vector2d>& points);
nlohmann::json points_json(const std::vector<Eigen::Vector2d>& points);

}  // namespace cwidth
