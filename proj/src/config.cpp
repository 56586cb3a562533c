#include "vlr/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace vlr {

namespace {

using njson = nlohmann::ordered_json;

void check_keys(const njson& j, const char* where, std::set<std::string> allowed) {
  for (const auto& it : j.items())
    if (!allowed.count(it.key()))
      fail(error_kind::config, std::string("config: unknown key '") + it.key() + "' in " + where);
}

double num(const njson& j, const char* key, double def) {
  if (!j.contains(key)) return def;
  if (!j[key].is_number()) fail(error_kind::config, std::string("config: '") + key + "' must be a number");
  return j[key].get<double>();
}

int integer(const njson& j, const char* key, int def) {
  if (!j.contains(key)) return def;
  if (!j[key].is_number_integer())
    fail(error_kind::config, std::string("config: '") + key + "' must be an integer");
  return j[key].get<int>();
}

} // namespace

RadialGrid ScenarioConfig::make_grid() const {
  return RadialGrid::geometric_panels(kappa_min, kappa_max, panels_per_decade, gl_order, nu0);
}

void ScenarioConfig::validate() const {
  params.validate();
  datum.validate();
  contour.validate();
  if (!(kappa_min > 0.0) || !(kappa_max > kappa_min))
    fail(error_kind::config, "config: need 0 < grid.kappa_min < grid.kappa_max");
  if (panels_per_decade < 1 || gl_order < 2)
    fail(error_kind::config, "config: grid.panels_per_decade >= 1, grid.gl_order >= 2");
  if (!(nu0 > kappa_min) || !(nu0 < kappa_max))
    fail(error_kind::config, "config: grid.nu0 must lie inside the kappa range");
  if (!(dt > 0.0) || !(t_max > dt)) fail(error_kind::config, "config: bad time.dt / time.t_max");
  TimeGrid::to(t_max, dt);
  if (ell < 1 || ell > 5) fail(error_kind::config, "config: expansion.ell must be in [1, 5]");
  if (!(eps_disc > 0.0) || !(delta_prime > 0.0) || !(lambda_scale > 0.0))
    fail(error_kind::config, "config: margins must be positive");
  if (threads < 1 || threads > 256) fail(error_kind::config, "config: threads must be in [1, 256]");
  if (out_dir.empty()) fail(error_kind::config, "config: out_dir must not be empty");
}

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
  njson j;
  try {
    j = njson::parse(text);
  } catch (const std::exception& e) {
    fail(error_kind::config, std::string("config: JSON parse failure: ") + e.what());
  }
  check_keys(j, "top level",
             {"schema_version", "params", "datum", "grid", "time", "expansion", "contour",
              "margins", "threads", "out_dir"});
  ScenarioConfig c;
  if (j.contains("schema_version") && j["schema_version"].get<int>() != schema_version)
    fail(error_kind::config, "config: unsupported schema_version");

  if (j.contains("params")) {
    const auto& s = j["params"];
    check_keys(s, "params", {"n0", "T", "me", "w0"});
    c.params.n0 = num(s, "n0", c.params.n0);
    c.params.T = num(s, "T", c.params.T);
    c.params.me = num(s, "me", c.params.me);
    c.params.w0 = num(s, "w0", c.params.w0);
  }
  if (j.contains("datum")) {
    const auto& s = j["datum"];
    check_keys(s, "datum", {"kind", "amplitude", "kappa_width", "s_width"});
    if (s.contains("kind")) {
      const std::string k = s["kind"].get<std::string>();
      if (k == "gaussian_ring")
        c.datum.kind = DatumKind::gaussian_ring;
      else if (k == "gaussian_dipole")
        c.datum.kind = DatumKind::gaussian_dipole;
      else
        fail(error_kind::config, "config: datum.kind must be gaussian_ring or gaussian_dipole");
    }
    c.datum.amplitude = num(s, "amplitude", c.datum.amplitude);
    c.datum.kappa_width = num(s, "kappa_width", c.datum.kappa_width);
    c.datum.s_width = num(s, "s_width", c.datum.s_width);
  }
  if (j.contains("grid")) {
    const auto& s = j["grid"];
    check_keys(s, "grid", {"kappa_min", "kappa_max", "panels_per_decade", "gl_order", "nu0"});
    c.kappa_min = num(s, "kappa_min", c.kappa_min);
    c.kappa_max = num(s, "kappa_max", c.kappa_max);
    c.panels_per_decade = integer(s, "panels_per_decade", c.panels_per_decade);
    c.gl_order = integer(s, "gl_order", c.gl_order);
    c.nu0 = num(s, "nu0", c.nu0);
  }
  if (j.contains("time")) {
    const auto& s = j["time"];
    check_keys(s, "time", {"dt", "t_max"});
    c.dt = num(s, "dt", c.dt);
    c.t_max = num(s, "t_max", c.t_max);
  }
  if (j.contains("expansion")) {
    const auto& s = j["expansion"];
    check_keys(s, "expansion", {"ell"});
    c.ell = integer(s, "ell", c.ell);
  }
  if (j.contains("contour")) {
    const auto& s = j["contour"];
    check_keys(s, "contour",
               {"delta", "R", "gamma_prime_scale", "gl_order", "corner_frac", "growth",
                "leg_factor", "leg_min", "collision_tol"});
    c.contour.delta = num(s, "delta", c.contour.delta);
    c.contour.R = num(s, "R", c.contour.R);
    c.contour.gamma_prime_scale = num(s, "gamma_prime_scale", c.contour.gamma_prime_scale);
    c.contour.gl_order = integer(s, "gl_order", c.contour.gl_order);
    c.contour.corner_frac = num(s, "corner_frac", c.contour.corner_frac);
    c.contour.growth = num(s, "growth", c.contour.growth);
    c.contour.leg_factor = num(s, "leg_factor", c.contour.leg_factor);
    c.contour.leg_min = num(s, "leg_min", c.contour.leg_min);
    c.contour.collision_tol = num(s, "collision_tol", c.contour.collision_tol);
  }
  if (j.contains("margins")) {
    const auto& s = j["margins"];
    check_keys(s, "margins", {"eps_disc", "delta_prime", "lambda_scale"});
    c.eps_disc = num(s, "eps_disc", c.eps_disc);
    c.delta_prime = num(s, "delta_prime", c.delta_prime);
    c.lambda_scale = num(s, "lambda_scale", c.lambda_scale);
  }
  c.threads = integer(j, "threads", c.threads);
  if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();

  c.validate();
  return c;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(error_kind::config, "config: cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return from_json_text(ss.str());
}

std::string ScenarioConfig::to_json_text() const {
  njson j;
  j["schema_version"] = schema_version;
  j["params"] = {{"n0", params.n0}, {"T", params.T}, {"me", params.me}, {"w0", params.w0}};
  j["datum"] = {
      {"kind", datum.kind == DatumKind::gaussian_ring ? "gaussian_ring" : "gaussian_dipole"},
      {"amplitude", datum.amplitude},
      {"kappa_width", datum.kappa_width},
      {"s_width", datum.s_width}};
  j["grid"] = {{"kappa_min", kappa_min},
               {"kappa_max", kappa_max},
               {"panels_per_decade", panels_per_decade},
               {"gl_order", gl_order},
               {"nu0", nu0}};
  j["time"] = {{"dt", dt}, {"t_max", t_max}};
  j["expansion"] = {{"ell", ell}};
  j["contour"] = {{"delta", contour.delta},
                  {"R", contour.R},
                  {"gamma_prime_scale", contour.gamma_prime_scale},
                  {"gl_order", contour.gl_order},
                  {"corner_frac", contour.corner_frac},
                  {"growth", contour.growth},
                  {"leg_factor", contour.leg_factor},
                  {"leg_min", contour.leg_min},
                  {"collision_tol", contour.collision_tol}};
  j["margins"] = {{"eps_disc", eps_disc}, {"delta_prime", delta_prime}, {"lambda_scale", lambda_scale}};
  j["threads"] = threads;
  j["out_dir"] = out_dir;
  return j.dump(2) + "\n";
}

} // namespace vlr
