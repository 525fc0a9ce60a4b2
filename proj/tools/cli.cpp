#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "burgeon/catalog.hpp"
#include "burgeon/characteristics.hpp"
#include "burgeon/classify.hpp"
#include "burgeon/godunov.hpp"
#include "burgeon/report_io.hpp"
#include "burgeon/singular.hpp"
#include "burgeon/transform.hpp"
#include "burgeon/verify.hpp"

namespace fs = std::filesystem;

namespace burgeon::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string slugify(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else if (c == '-')
      out += 'm'; // keep negatives distinguishable
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("bad " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty " + what + " list");
  return out;
}

struct CommonOpts {
  std::string domain_str;
  std::string grid_str;
  double tol_quad = 1e-10;
  double tol_fd = 1e-4;
  double oleinik_e = 1.05;
  double singular_factor = 5.0;
  std::string out_dir = "out";
  unsigned seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--domain", domain_str, "window as xmin,xmax,tmin,tmax");
    cmd->add_option("--grid", grid_str, "samples as nx,nt");
    cmd->add_option("--tol-quad", tol_quad, "quadrature tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--tol-fd", tol_fd, "finite-difference matching tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--oleinik-e", oleinik_e, "one-sided Lipschitz constant E")->check(CLI::PositiveNumber);
    cmd->add_option("--singular-factor", singular_factor, "jump detection factor")->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed, "seed for multistart ordering");
  }

  Domain resolve_domain(const Domain& natural) const {
    double xmin = natural.x_min, xmax = natural.x_max;
    double tmin = natural.t_min, tmax = natural.t_max;
    int nx = natural.nx, nt = natural.nt;
    if (!domain_str.empty()) {
      auto v = parse_list(domain_str, "--domain");
      if (v.size() != 4) throw UsageError("--domain needs xmin,xmax,tmin,tmax");
      xmin = v[0], xmax = v[1], tmin = v[2], tmax = v[3];
    }
    if (!grid_str.empty()) {
      auto v = parse_list(grid_str, "--grid");
      if (v.size() != 2) throw UsageError("--grid needs nx,nt");
      nx = static_cast<int>(v[0]);
      nt = static_cast<int>(v[1]);
    }
    try {
      return Domain(xmin, xmax, tmin, tmax, nx, nt);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
};

// ---------------------------------------------------------------------- verify

struct GraphsPreset {
  bool multistrip = false;
  GraphCurve simple_graph;
  double base_lo = 0.0, base_hi = 1.0;
  StripDecomposition strips;
};

GraphsPreset graphs_preset(const std::string& name) {
  GraphsPreset p;
  if (name == "sine1" || name.empty()) {
    p.simple_graph = GraphCurve::sine(0.5, 0.1, 1.0, 1, "p1");
    return p;
  }
  if (name == "flat") {
    p.simple_graph = GraphCurve::flat(0.5, 1, "p1");
    return p;
  }
  if (name == "sine3") {
    p.multistrip = true;
    p.strips.graphs = {GraphCurve::sine(-1.0, 0.1, 1.0, -1, "p-1"),
                       GraphCurve::sine(0.0, 0.1, 1.0, 1, "p1"),
                       GraphCurve::sine(1.0, 0.1, 1.0, 2, "p2")};
    p.strips.separators = {GraphCurve::sine(-1.5, 0.1, 1.0, 0, "a-1"),
                           GraphCurve::sine(-0.5, 0.1, 1.0, 0, "a0"),
                           GraphCurve::sine(0.5, 0.1, 1.0, 0, "a1"),
                           GraphCurve::sine(1.5, 0.1, 1.0, 0, "a2")};
    return p;
  }
  throw UsageError("unknown graphs preset '" + name + "' (known: sine1, flat, sine3)");
}

ResidualReport error_report(const std::string& check, const std::string& note) {
  ResidualReport rep;
  rep.check_name = check + " [" + note + "]";
  rep.max_abs = std::numeric_limits<double>::max(); // aborted: no finite residual
  rep.tolerance = 0.0;
  rep.passed = false;
  return rep;
}

int cmd_verify(const CommonOpts& common, const std::string& field_spec,
               const std::string& graphs_name, bool emit_grids) {
  const SolutionField field = field_from_spec(field_spec); // UsageError on bad spec
  const Domain domain = common.resolve_domain(field.domain);
  const GraphsPreset preset = graphs_preset(graphs_name);

  const double pitch = std::max(domain.dx(), domain.dt());
  const double tol_pipeline = std::max(10.0 * common.tol_quad, 25.0 * pitch * pitch);

  RunManifest man;
  man.command = "verify";
  man.config = {{"field", field_spec},
                {"graphs", graphs_name.empty() ? "sine1" : graphs_name},
                {"domain", fmt(domain.x_min) + "," + fmt(domain.x_max) + "," +
                               fmt(domain.t_min) + "," + fmt(domain.t_max)},
                {"grid", std::to_string(domain.nx) + "," + std::to_string(domain.nt)},
                {"dx", fmt(pitch)},
                {"tol_quad", fmt(common.tol_quad)},
                {"tol_fd", fmt(common.tol_fd)},
                {"tol_pipeline", fmt(tol_pipeline)},
                {"oleinik_e", fmt(common.oleinik_e)},
                {"singular_factor", fmt(common.singular_factor)},
                {"seed", std::to_string(common.seed)}};

  const std::string slug = slugify(field_spec) + "_" +
                           slugify(graphs_name.empty() ? "sine1" : graphs_name) + "_g" +
                           std::to_string(domain.nx) + "x" + std::to_string(domain.nt);
  const fs::path outdir(common.out_dir);

  man.reports.push_back(
      burgers_residual(field, domain, /*use_exact=*/true,
                       field.has_exact_partials() ? 1e-10 : tol_pipeline));

  bool transform_ok = false;
  try {
    const EikonalField u = preset.multistrip
                               ? transform_multistrip(field, preset.strips, common.tol_quad)
                               : transform_simple(field, preset.simple_graph, preset.base_lo,
                                                  preset.base_hi, common.tol_quad);
    const GridField ugrid = sample_eikonal(u, domain);
    transform_ok = true;

    man.reports.push_back(eikonal_residual(u, domain, /*use_exact=*/false, tol_pipeline));
    auto [gx, gt] = check_gradient_identities(u, domain, tol_pipeline);
    man.reports.push_back(gx);
    man.reports.push_back(gt);

    // Delta constancy, one report and one profile file per graph
    const auto& graphs = u.strips()->graphs;
    std::vector<double> xs(200);
    for (int k = 0; k < 200; ++k)
      xs[k] = domain.x_min + k * (domain.x_max - domain.x_min) / 199.0;
    for (const auto& g : graphs) {
      ResidualReport rep;
      rep.check_name = "delta_constancy_" + (g.name.empty() ? std::to_string(g.label) : g.name);
      try {
        const std::vector<double> deltas = delta_profile(u, g.label, xs);
        const auto [lo, hi] = std::minmax_element(deltas.begin(), deltas.end());
        rep.max_abs = *hi - *lo;
        rep.l2 = 0.0;
        rep.n_points = static_cast<long>(deltas.size());
        rep.worst_x = xs[std::distance(deltas.begin(), hi)];
        rep.worst_t = g.p(rep.worst_x);
        rep.finish(1e-8);
        std::ostringstream csv;
        write_delta_csv(xs, deltas, csv);
        atomic_write_text((outdir / ("delta_p" + std::to_string(g.label) + "_" + slug + ".csv")).string(),
                          csv.str());
      } catch (const Error& e) {
        rep = error_report(rep.check_name, e.what());
      }
      man.reports.push_back(rep);
    }

    // classification on a decimated grid keeps the multistart cheap
    const int cnx = std::min(domain.nx, 61), cnt = std::min(domain.nt, 61);
    const Domain coarse(domain.x_min, domain.x_max, domain.t_min, domain.t_max, cnx, cnt);
    ClassifyOptions copts;
    copts.seed = common.seed;
    const ClassificationResult cls = classify(u, coarse, copts);
    man.classification = cls;
    ResidualReport crep;
    crep.check_name = "classification_affine";
    crep.max_abs = cls.fit_residual;
    crep.n_points = static_cast<long>(cnx) * cnt;
    crep.tolerance = 0.0;
    crep.passed = cls.kind == SolutionKind::Affine;
    man.reports.push_back(crep);

    if (emit_grids) {
      std::ostringstream ucsv;
      write_eikonal_csv(u, domain, ucsv);
      atomic_write_text((outdir / ("u_" + slug + ".csv")).string(), ucsv.str());
      auto write_grad = [&](const GridField& grad, const std::string& name) {
        std::ostringstream os;
        os << "x,t,value,valid,piece\n";
        os.precision(17);
        for (int j = 0; j < domain.nt; ++j)
          for (int i = 0; i < domain.nx; ++i) {
            const double x = domain.x(i), t = domain.t(j);
            os << x << ',' << t << ',';
            if (grad.valid(i, j))
              os << grad.value(i, j) << ",1," << u.piece_name(x, t) << '\n';
            else
              os << "nan,0,-\n";
          }
        atomic_write_text((outdir / (name + "_" + slug + ".csv")).string(), os.str());
      };
      write_grad(diff_x(ugrid), "ux");
      write_grad(diff_t(ugrid), "ut");
      std::ostringstream hcsv;
      write_csv(sample(field, domain), hcsv);
      atomic_write_text((outdir / ("h_" + slug + ".csv")).string(), hcsv.str());
    }
  } catch (const SingularPointError& e) {
    man.reports.push_back(error_report("transform", e.what()));
  } catch (const QuadratureError& e) {
    man.reports.push_back(error_report("transform", e.what()));
  } catch (const Error& e) {
    man.reports.push_back(error_report("transform", e.what()));
  }

  const SingularSetEstimate est = detect_singular(field, domain, common.singular_factor);
  man.singular_estimate = est;
  {
    ResidualReport srep;
    srep.check_name = "no_singular_points";
    srep.max_abs = est.h1_estimate;
    srep.n_points = static_cast<long>(est.points.size());
    srep.tolerance = 0.0;
    srep.passed = est.points.empty();
    man.reports.push_back(srep);

    std::ostringstream pcsv;
    pcsv << "x,t\n";
    pcsv.precision(17);
    for (const auto& [px, pt] : est.points) pcsv << px << ',' << pt << '\n';
    const std::string pname = "singular_" + slug + ".csv";
    atomic_write_text((outdir / pname).string(), pcsv.str());
    man.extra.emplace_back("singular_points_csv", pname);
  }

  man.passed = transform_ok;
  for (const auto& r : man.reports) man.passed = man.passed && r.passed;

  const std::string mpath = (outdir / ("verify_" + slug + ".manifest.json")).string();
  atomic_write_text(mpath, man.to_json());
  std::cout << (man.passed ? "PASS " : "FAIL ") << field_spec << " -> " << mpath << "\n";
  return man.passed ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------------------------- entropy

int cmd_entropy(const CommonOpts& common, const std::string& ivp_spec,
                double t_end, int n_cells, const std::string& snapshots_str,
                const std::string& backshift_str) {
  auto [u0, u0_name] = initial_data_from_spec(ivp_spec);

  double x_lo = -5.0, x_hi = 5.0;
  if (!common.domain_str.empty()) {
    auto v = parse_list(common.domain_str, "--domain");
    if (v.size() != 4 && v.size() != 2)
      throw UsageError("--domain needs xmin,xmax[,tmin,tmax]");
    x_lo = v[0];
    x_hi = v[1];
  }
  if (!(t_end > 0.0)) throw UsageError("--t must be positive");
  if (n_cells < 16) throw UsageError("--cells must be at least 16");

  IVPConfig cfg;
  cfg.u0 = u0;
  cfg.u0_name = u0_name;
  cfg.x_lo = x_lo;
  cfg.x_hi = x_hi;
  cfg.n_cells = n_cells;
  cfg.t_end = t_end;
  if (!snapshots_str.empty()) cfg.snapshot_times = parse_list(snapshots_str, "--snapshots");

  RunManifest man;
  man.command = "entropy";
  man.config = {{"ivp", ivp_spec},
                {"window", fmt(x_lo) + "," + fmt(x_hi)},
                {"cells", std::to_string(n_cells)},
                {"t_end", fmt(t_end)},
                {"snapshots", snapshots_str.empty() ? fmt(t_end) : snapshots_str},
                {"oleinik_e", fmt(common.oleinik_e)},
                {"dx", fmt((x_hi - x_lo) / n_cells)}};

  const std::string slug = slugify(ivp_spec) + "_c" + std::to_string(n_cells);
  const fs::path outdir(common.out_dir);

  Trajectory traj;
  try {
    traj = solve_ivp(cfg);
  } catch (const Error& e) {
    man.reports.push_back(error_report("solve_ivp", e.what()));
    man.passed = false;
    const std::string mpath = (outdir / ("entropy_" + slug + ".manifest.json")).string();
    atomic_write_text(mpath, man.to_json());
    std::cerr << "entropy: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  OleinikParams op;
  op.E = common.oleinik_e;
  int snap_index = 0;
  std::ostringstream times_list;
  for (const Snapshot& snap : traj.snapshots) {
    ResidualReport rep = check_oleinik_profile(snap.xs, snap.us, snap.time, op);
    rep.check_name = "oleinik_t" + fmt(snap.time);
    man.reports.push_back(rep);

    std::ostringstream csv;
    csv << "x,u\n";
    csv.precision(17);
    for (std::size_t i = 0; i < snap.xs.size(); ++i)
      csv << snap.xs[i] << ',' << snap.us[i] << '\n';
    const std::string sname = "snapshot_" + slug + "_" + std::to_string(snap_index++) + ".csv";
    atomic_write_text((outdir / sname).string(), csv.str());
    if (times_list.tellp() > 0) times_list << ",";
    times_list << fmt(snap.time) << ":" << sname;
  }
  man.extra.emplace_back("snapshot_files", times_list.str());

  {
    ResidualReport rep;
    rep.check_name = "conservation";
    rep.max_abs = traj.conservation_defect();
    rep.n_points = traj.n_steps;
    const double scale = (x_hi - x_lo) * std::max(1.0, traj.final_state.data_max -
                                                           traj.final_state.data_min);
    rep.finish(1e-10 * scale);
    man.reports.push_back(rep);
  }

  man.extra.emplace_back(
      "sup_norm_M", fmt(std::max(std::abs(traj.final_state.data_min),
                                 std::abs(traj.final_state.data_max))));
  const double shock = shock_position(traj.snapshots.back());
  if (std::isfinite(shock)) man.extra.emplace_back("shock_position", fmt(shock));

  if (!backshift_str.empty()) {
    const std::vector<double> shifts = parse_list(backshift_str, "--backshift");
    BackshiftReport rep =
        backshift_experiment(u0, u0_name, shifts, common.oleinik_e, n_cells, x_lo, x_hi);
    man.backshift = rep;
    if (!rep.passed) man.reports.push_back(error_report("backshift", "slope bound missed"));
  }

  man.passed = true;
  for (const auto& r : man.reports) man.passed = man.passed && r.passed;
  if (man.backshift) man.passed = man.passed && man.backshift->passed;

  const std::string mpath = (outdir / ("entropy_" + slug + ".manifest.json")).string();
  atomic_write_text(mpath, man.to_json());
  std::cout << (man.passed ? "PASS " : "FAIL ") << ivp_spec << " -> " << mpath << "\n";
  return man.passed ? kExitPass : kExitCheckFailed;
}

// Replaces `--config FILE` with the file's flat key=value pairs, inserted
// right after the subcommand so explicit flags (parsed later) win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::vector<std::string> injected;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file path");
      std::ifstream is(args[++i]);
      if (!is) throw UsageError("cannot open config file " + args[i]);
      std::string line;
      while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
          throw UsageError("config file: expected key=value, got '" + line + "'");
        const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "emit-grids") { // the only flag-valued key
          if (value == "true" || value == "1") injected.push_back("--" + key);
        } else {
          injected.push_back("--" + key);
          injected.push_back(value);
        }
      }
      continue;
    }
    out.push_back(args[i]);
  }
  if (!injected.empty()) {
    // insert after the subcommand token
    std::size_t pos = 0;
    while (pos < out.size() && out[pos] != "verify" && out[pos] != "entropy" &&
           out[pos] != "report")
      ++pos;
    if (pos == out.size()) throw UsageError("--config requires a subcommand");
    out.insert(out.begin() + pos + 1, injected.begin(), injected.end());
  }
  return out;
}

// ---------------------------------------------------------------------- report

int cmd_report(const CommonOpts& common) {
  const fs::path outdir(common.out_dir);
  std::vector<std::string> files;
  if (fs::is_directory(outdir)) {
    for (const auto& entry : fs::directory_iterator(outdir)) {
      const std::string name = entry.path().filename().string();
      if (name.size() > 14 && name.substr(name.size() - 14) == ".manifest.json")
        files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "report: no manifests found in " << outdir << "\n";
    return kExitUsage;
  }

  std::vector<ManifestSummary> rows;
  for (const auto& f : files) rows.push_back(read_manifest(f));

  std::ostringstream txt, csv;
  txt << "manifest                                         command  target                        passed  checks  worst_check\n";
  csv << "manifest,command,target,passed,n_checks,worst_check,worst_max_abs\n";
  csv.precision(17);
  for (const auto& r : rows) {
    const std::string base = fs::path(r.file).filename().string();
    txt << base;
    for (std::size_t k = base.size(); k < 49; ++k) txt << ' ';
    txt << r.command;
    for (std::size_t k = r.command.size(); k < 9; ++k) txt << ' ';
    txt << r.target;
    for (std::size_t k = r.target.size(); k < 30; ++k) txt << ' ';
    txt << (r.passed ? "yes" : "NO ") << "     " << r.n_checks << "       "
        << r.worst_check << "\n";
    csv << base << ',' << r.command << ',' << r.target << ',' << (r.passed ? 1 : 0)
        << ',' << r.n_checks << ',' << r.worst_check << ',' << r.worst_max_abs << '\n';
  }

  std::vector<std::string> plot_sections;

  // premeasure curves
  for (const auto& r : rows) {
    if (r.premeasure.empty()) continue;
    const std::string base = fs::path(r.file).filename().stem().stem().string();
    std::ostringstream dat;
    dat << "# eps  N(eps)*eps  (" << r.target << ")\n";
    dat.precision(17);
    for (const auto& [eps, val] : r.premeasure) dat << eps << ' ' << val << '\n';
    const std::string dname = "premeasure_" + slugify(base) + ".dat";
    atomic_write_text((outdir / dname).string(), dat.str());
    plot_sections.push_back(dname);
  }

  // residual vs resolution for verify sweeps over the same target
  std::map<std::string, std::vector<std::pair<double, double>>> sweeps;
  for (const auto& r : rows)
    if (r.command == "verify" && r.dx > 0.0 && r.eikonal_max_abs >= 0.0)
      sweeps[r.target].emplace_back(r.dx, r.eikonal_max_abs);
  for (auto& [target, pts] : sweeps) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) continue;
    std::ostringstream dat;
    dat.precision(17);
    dat << "# dx  eikonal_residual  (" << target << ")\n";
    bool sloped = true;
    try {
      dat << "# fitted slope: " << fitted_log_slope(pts) << "\n";
    } catch (const Error&) {
      sloped = false;
    }
    for (const auto& [dx, err] : pts) dat << dx << ' ' << err << '\n';
    const std::string dname = "convergence_" + slugify(target) + ".dat";
    atomic_write_text((outdir / dname).string(), dat.str());
    if (sloped) plot_sections.push_back(dname);
  }

  // a gnuplot script covering whatever data files exist
  std::ostringstream gp;
  gp << "# gnuplot script generated by `burgeon report`\n"
     << "set terminal pngcairo size 900,600\n";
  int fig = 0;
  for (const auto& dname : plot_sections) {
    gp << "set output 'plot_" << fig++ << ".png'\n"
       << "set logscale xy\n"
       << "plot '" << dname << "' using 1:2 with linespoints title '" << dname << "'\n";
  }
  std::vector<std::string> delta_files;
  for (const auto& entry : fs::directory_iterator(outdir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("delta_", 0) == 0 && name.size() > 4 &&
        name.substr(name.size() - 4) == ".csv")
      delta_files.push_back(name);
  }
  std::sort(delta_files.begin(), delta_files.end());
  for (const auto& name : delta_files) {
    gp << "set output 'plot_" << fig++ << ".png'\n"
       << "unset logscale\n"
       << "set datafile separator ','\n"
       << "plot '" << name << "' using 1:2 with lines title '" << name << "'\n"
       << "set datafile separator\n";
  }
  atomic_write_text((outdir / "plot.gp").string(), gp.str());

  atomic_write_text((outdir / "summary.txt").string(), txt.str());
  atomic_write_text((outdir / "summary.csv").string(), csv.str());
  std::cout << txt.str();
  return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"burgeon: a numerical laboratory for Burgers/eikonal rigidity checks"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  CommonOpts common;

  auto* verify = app.add_subcommand("verify", "transform a catalog field and run the checker pipeline");
  std::string field_spec;
  std::string graphs_name = "sine1";
  bool emit_grids = false;
  verify->add_option("--field", field_spec, "field spec, e.g. constant:c=3")->required();
  verify->add_option("--graphs", graphs_name, "graph preset: sine1, flat, sine3");
  verify->add_flag("--emit-grids", emit_grids, "also write u, u_x, u_t and h grid CSVs");
  std::string config_sink;
  verify->add_option("--config", config_sink, "flat key=value config file (expanded before parsing)");
  common.attach(verify);

  auto* entropy = app.add_subcommand("entropy", "Godunov evolution with Oleinik checks");
  std::string ivp_spec;
  double t_end = 1.0;
  int n_cells = 800;
  std::string snapshots_str, backshift_str;
  entropy->add_option("--ivp", ivp_spec, "initial data spec, e.g. riemann:ul=1,ur=0")->required();
  entropy->add_option("--t", t_end, "end time");
  entropy->add_option("--cells", n_cells, "cells across the window (default 800)");
  entropy->add_option("--snapshots", snapshots_str, "comma list of snapshot times");
  entropy->add_option("--backshift", backshift_str, "comma list of time shifts");
  entropy->add_option("--config", config_sink, "flat key=value config file (expanded before parsing)");
  common.attach(entropy);

  auto* report = app.add_subcommand("report", "aggregate manifests into summaries and plot data");
  common.attach(report);

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(common, field_spec, graphs_name, emit_grids);
    if (entropy->parsed())
      return cmd_entropy(common, ivp_spec, t_end, n_cells, snapshots_str, backshift_str);
    return cmd_report(common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

} // namespace burgeon::cli
