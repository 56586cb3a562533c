#pragma once

#include <string>

#include "vlr/core.hpp"
#include "vlr/fields.hpp"
#include "vlr/resolvent.hpp"
#include "vlr/volterra.hpp"

namespace vlr {

inline constexpr int schema_version = 1;

// One batch scenario: background constants, datum, grids and the numerical
// knobs shared by the subcommands. Parsed from JSON, validated eagerly.
struct ScenarioConfig {
  PhysicalParams params;
  InitialDatum datum;

  double kappa_min = 1e-4;
  double kappa_max = 6.0;
  int panels_per_decade = 8;
  int gl_order = 12;
  double nu0 = 0.7;

  double dt = 0.01;
  double t_max = 200.0;

  int ell = 4;
  ContourSpec contour;
  double eps_disc = 0.3;
  double delta_prime = 0.05;
  double lambda_scale = 0.1;

  int threads = 1;
  std::string out_dir = ".";

  RadialGrid make_grid() const;
  TimeGrid make_time_grid() const { return TimeGrid::to(t_max, dt); }
  void validate() const;

  static ScenarioConfig from_json_text(const std::string& text);
  static ScenarioConfig from_file(const std::string& path);
  std::string to_json_text() const;
};

} // namespace vlr
