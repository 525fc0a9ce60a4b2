#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "burgeon/report_io.hpp"

using namespace burgeon;
namespace fs = std::filesystem;

namespace {

RunManifest sample_manifest() {
  RunManifest m;
  m.command = "verify";
  m.config = {{"field", "constant:c=3"}, {"dx", "0.025"}};
  ResidualReport r;
  r.check_name = "eikonal_residual_fd";
  r.max_abs = 1.5e-9;
  r.l2 = 1e-10;
  r.n_points = 100;
  r.finish(1e-6);
  m.reports.push_back(r);
  SingularSetEstimate est;
  est.premeasure = {{0.5, 2.0}, {0.25, 1.9}};
  est.h1_estimate = 1.9;
  m.singular_estimate = est;
  m.passed = true;
  return m;
}

} // namespace

TEST_CASE("manifest json round trip through read_manifest") {
  const fs::path dir = fs::temp_directory_path() / "burgeon_test_io";
  fs::create_directories(dir);
  const std::string path = (dir / "verify_x.manifest.json").string();
  atomic_write_text(path, sample_manifest().to_json());

  const ManifestSummary s = read_manifest(path);
  CHECK(s.command == "verify");
  CHECK(s.target == "constant:c=3");
  CHECK(s.passed);
  CHECK(s.n_checks == 1);
  CHECK(s.worst_check == "eikonal_residual_fd");
  CHECK(s.dx == doctest::Approx(0.025));
  CHECK(s.eikonal_max_abs == doctest::Approx(1.5e-9));
  REQUIRE(s.premeasure.size() == 2);
  CHECK(s.premeasure[1].second == doctest::Approx(1.9));
  fs::remove_all(dir);
}

TEST_CASE("manifest serialization is byte-stable") {
  const RunManifest m = sample_manifest();
  CHECK(m.to_json() == m.to_json());
}

TEST_CASE("atomic_write_text leaves no temp file and overwrites cleanly") {
  const fs::path dir = fs::temp_directory_path() / "burgeon_test_atomic";
  fs::create_directories(dir);
  const std::string path = (dir / "a.txt").string();
  atomic_write_text(path, "one");
  atomic_write_text(path, "two");
  std::ifstream is(path);
  std::string content((std::istreambuf_iterator<char>(is)),
                      std::istreambuf_iterator<char>());
  CHECK(content == "two");
  CHECK_FALSE(fs::exists(path + ".tmp"));
  fs::remove_all(dir);
}

TEST_CASE("read_manifest rejects junk") {
  const fs::path dir = fs::temp_directory_path() / "burgeon_test_junk";
  fs::create_directories(dir);
  const std::string path = (dir / "bad.manifest.json").string();
  atomic_write_text(path, "{not json");
  CHECK_THROWS_AS(read_manifest(path), Error);
  CHECK_THROWS_AS(read_manifest((dir / "missing.json").string()), Error);
  fs::remove_all(dir);
}

TEST_CASE("fitted slope recovers a known convergence order") {
  std::vector<std::pair<double, double>> pts;
  for (double dx : {0.1, 0.05, 0.025, 0.0125}) pts.emplace_back(dx, 3.0 * dx * dx);
  CHECK(fitted_log_slope(pts) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK_THROWS_AS(fitted_log_slope({{0.1, 1.0}}), Error);
}
