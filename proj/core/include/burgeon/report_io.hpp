#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burgeon/classify.hpp"
#include "burgeon/godunov.hpp"
#include "burgeon/singular.hpp"
#include "burgeon/verify.hpp"

namespace burgeon {

/// Key/value pairs echoed into a manifest's `config` object, in insertion
/// order (manifests must be byte-stable for a fixed config).
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// Everything one CLI run wants to persist. Serialized as a single JSON
/// document with schema {command, config, reports:[...], classification,
/// singular_estimate, backshift, passed}.
struct RunManifest {
  std::string command; // "verify" or "entropy"
  ConfigEcho config;
  std::vector<ResidualReport> reports;
  std::optional<ClassificationResult> classification;
  std::optional<SingularSetEstimate> singular_estimate;
  std::optional<BackshiftReport> backshift;
  std::vector<std::pair<std::string, std::string>> extra; // free-form scalars
  bool passed = false;

  std::string to_json() const; // deterministic, 2-space indent
};

/// Writes content via a temp file + rename so partial runs never leave a
/// corrupt manifest behind.
void atomic_write_text(const std::string& path, const std::string& content);

/// Flattened view of a stored manifest, for the report aggregator.
struct ManifestSummary {
  std::string file;
  std::string command;
  std::string target; // field or ivp spec
  bool passed = false;
  long n_checks = 0;
  std::string worst_check;
  double worst_max_abs = 0.0;
  double dx = 0.0; // grid spacing, for convergence grouping (0 if absent)
  double eikonal_max_abs = -1.0;
  std::vector<std::pair<double, double>> premeasure;
};

/// Parses one manifest file; throws Error on malformed JSON or schema.
ManifestSummary read_manifest(const std::string& path);

/// Least-squares slope of log(err) vs log(dx); needs >= 2 points.
double fitted_log_slope(const std::vector<std::pair<double, double>>& dx_err);

} // namespace burgeon
