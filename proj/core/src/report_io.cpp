#include "burgeon/report_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace burgeon {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json report_json(const ResidualReport& r) {
  ordered_json j;
  j["check"] = r.check_name;
  j["max_abs"] = r.max_abs;
  j["l2"] = r.l2;
  j["n_points"] = r.n_points;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["worst_point"] = {r.worst_x, r.worst_t};
  return j;
}

ordered_json classification_json(const ClassificationResult& c) {
  ordered_json j;
  j["kind"] = c.kind_name();
  j["fit_residual"] = c.fit_residual;
  j["affine_residual"] = c.affine_residual;
  j["cone_residual"] = c.cone_residual;
  if (c.kind == SolutionKind::Affine) {
    j["a"] = c.a;
    j["b"] = c.b;
    j["gamma"] = c.gamma;
    j["implied_h"] = c.implied_h;
  } else if (c.kind == SolutionKind::Cone) {
    j["x0"] = c.x0;
    j["t0"] = c.t0;
    j["c"] = c.c;
    j["sign"] = c.sign;
  }
  return j;
}

ordered_json singular_json(const SingularSetEstimate& s) {
  ordered_json j;
  j["n_points"] = s.points.size();
  ordered_json pm = ordered_json::array();
  for (const auto& [eps, val] : s.premeasure) pm.push_back({eps, val});
  j["premeasure"] = pm;
  j["h1_estimate"] = s.h1_estimate;
  j["proj_x_measure"] = s.proj_x_measure;
  j["threshold_factor"] = s.threshold_factor;
  return j;
}

ordered_json backshift_json(const BackshiftReport& b) {
  ordered_json j;
  j["u0"] = b.u0_name;
  j["E"] = b.E;
  ordered_json rows = ordered_json::array();
  for (const auto& r : b.rows) {
    ordered_json row;
    row["shift"] = r.shift;
    row["max_slope"] = r.max_slope;
    row["bound"] = r.bound;
    row["passed"] = r.passed;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["passed"] = b.passed;
  return j;
}

} // namespace

std::string RunManifest::to_json() const {
  ordered_json j;
  j["command"] = command;
  ordered_json cfg;
  for (const auto& [k, v] : config) cfg[k] = v;
  j["config"] = cfg;
  ordered_json reps = ordered_json::array();
  for (const auto& r : reports) reps.push_back(report_json(r));
  j["reports"] = reps;
  j["classification"] = classification ? classification_json(*classification)
                                       : ordered_json(nullptr);
  j["singular_estimate"] =
      singular_estimate ? singular_json(*singular_estimate) : ordered_json(nullptr);
  if (backshift) j["backshift"] = backshift_json(*backshift);
  if (!extra.empty()) {
    ordered_json e;
    for (const auto& [k, v] : extra) e[k] = v;
    j["extra"] = e;
  }
  j["passed"] = passed;
  return j.dump(2) + "\n";
}

void atomic_write_text(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("atomic_write_text: cannot open " + tmp.string());
    os << content;
    if (!os) throw Error("atomic_write_text: write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

ManifestSummary read_manifest(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("read_manifest: cannot open " + path);
  ordered_json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw Error("read_manifest: " + path + ": " + e.what());
  }

  ManifestSummary m;
  m.file = path;
  m.command = j.value("command", "");
  if (m.command.empty()) throw Error("read_manifest: " + path + ": missing command");
  m.passed = j.value("passed", false);
  if (j.contains("config") && j["config"].is_object()) {
    const auto& cfg = j["config"];
    if (cfg.contains("field")) m.target = cfg["field"].get<std::string>();
    else if (cfg.contains("ivp")) m.target = cfg["ivp"].get<std::string>();
    if (cfg.contains("dx")) m.dx = std::stod(cfg["dx"].get<std::string>());
  }
  if (j.contains("reports") && j["reports"].is_array()) {
    double worst_ratio = -1.0;
    for (const auto& r : j["reports"]) {
      ++m.n_checks;
      const double max_abs = r.value("max_abs", 0.0);
      const double tol = r.value("tolerance", 0.0);
      const double ratio = max_abs / std::max(tol, 1e-300);
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        m.worst_check = r.value("check", "");
        m.worst_max_abs = max_abs;
      }
      if (r.value("check", "") == "eikonal_residual_fd" ||
          r.value("check", "") == "eikonal_residual")
        m.eikonal_max_abs = max_abs;
    }
  }
  if (j.contains("singular_estimate") && j["singular_estimate"].is_object()) {
    for (const auto& row : j["singular_estimate"]["premeasure"])
      m.premeasure.emplace_back(row[0].get<double>(), row[1].get<double>());
  }
  return m;
}

double fitted_log_slope(const std::vector<std::pair<double, double>>& dx_err) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [dx, err] : dx_err)
    if (dx > 0.0 && err > 0.0) logs.emplace_back(std::log(dx), std::log(err));
  if (logs.size() < 2) throw Error("fitted_log_slope: need at least 2 positive points");
  double mx = 0, my = 0;
  for (const auto& [x, y] : logs) {
    mx += x;
    my += y;
  }
  mx /= logs.size();
  my /= logs.size();
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : logs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) throw Error("fitted_log_slope: degenerate abscissae");
  return sxy / sxx;
}

} // namespace burgeon
