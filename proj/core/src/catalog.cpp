#include "burgeon/catalog.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace burgeon {

namespace {

double parse_double(const std::map<std::string, std::string>& kv,
                    const std::string& key, double fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(it->second, &pos);
  } catch (const std::exception&) {
    throw UsageError("field spec: bad numeric value '" + it->second + "' for key '" + key + "'");
  }
  if (pos != it->second.size())
    throw UsageError("field spec: trailing junk in value '" + it->second + "' for key '" + key + "'");
  return v;
}

void reject_unknown_keys(const std::map<std::string, std::string>& kv,
                         const std::set<std::string>& known,
                         const std::string& name) {
  for (const auto& [k, v] : kv)
    if (!known.count(k))
      throw UsageError("field spec '" + name + "': unknown key '" + k + "'");
}

} // namespace

SolutionField constant_solution(double c) {
  if (!std::isfinite(c)) throw Error("constant_solution: c must be finite");
  SolutionField f;
  f.rule = [c](double, double) { return c; };
  f.h_x = [](double, double) { return 0.0; };
  f.h_t = [](double, double) { return 0.0; };
  f.domain = Domain::desk_scale();
  std::ostringstream os;
  os << "constant:c=" << c;
  f.name = os.str();
  return f;
}

SolutionField cone_induced_solution(ConeInducedParams p) {
  const double x0 = p.x0, t0 = p.t0;
  SolutionField f;
  f.rule = [x0, t0](double x, double t) { return (x - x0) / (t - t0); };
  f.h_x = [t0](double, double t) { return 1.0 / (t - t0); };
  f.h_t = [x0, t0](double x, double t) {
    const double d = t - t0;
    return -(x - x0) / (d * d);
  };
  f.singular_mask = [t0](double, double t) { return t == t0; };
  f.domain = Domain::desk_scale();
  std::ostringstream os;
  os << "cone:x0=" << x0 << ",t0=" << t0;
  f.name = os.str();
  return f;
}

SolutionField rarefaction_solution(double t_floor) {
  if (!(t_floor > 0.0)) throw Error("rarefaction_solution: t_floor must be positive");
  SolutionField f;
  f.rule = [](double x, double t) { return x / t; };
  f.h_x = [](double, double t) { return 1.0 / t; };
  f.h_t = [](double x, double t) { return -x / (t * t); };
  f.singular_mask = [t_floor](double, double t) { return t < t_floor; };
  f.domain = Domain(-5.0, 5.0, t_floor, 5.0, 401, 401);
  std::ostringstream os;
  os << "rarefaction:tfloor=" << t_floor;
  f.name = os.str();
  return f;
}

SolutionField riemann_entropy_solution(RiemannData d) {
  const double ul = d.u_left, ur = d.u_right;
  if (!std::isfinite(ul) || !std::isfinite(ur))
    throw Error("riemann_entropy_solution: states must be finite");
  std::ostringstream os;
  os << "riemann:ul=" << ul << ",ur=" << ur;
  if (ul == ur) {
    SolutionField f = constant_solution(ul);
    f.name = os.str();
    return f;
  }
  SolutionField f;
  f.name = os.str();
  if (ul > ur) {
    const double s = 0.5 * (ul + ur); // Rankine-Hugoniot for flux u^2/2
    f.rule = [ul, ur, s](double x, double t) {
      if (x < s * t) return ul;
      if (x > s * t) return ur;
      return 0.5 * (ul + ur);
    };
    f.h_x = [](double, double) { return 0.0; };
    f.h_t = [](double, double) { return 0.0; };
    f.singular_mask = [s](double x, double t) { return t <= 0.0 || x == s * t; };
  } else {
    f.rule = [ul, ur](double x, double t) {
      if (x <= ul * t) return ul;
      if (x >= ur * t) return ur;
      return x / t;
    };
    f.h_x = [ul, ur](double x, double t) {
      if (x <= ul * t || x >= ur * t) return 0.0;
      return 1.0 / t;
    };
    f.h_t = [ul, ur](double x, double t) {
      if (x <= ul * t || x >= ur * t) return 0.0;
      return -x / (t * t);
    };
    f.singular_mask = [](double, double t) { return t <= 0.0; };
  }
  f.domain = Domain(-5.0, 5.0, 0.05, 5.0, 401, 401);
  return f;
}

SolutionField expansion_jump_solution(RiemannData d) {
  const double ul = d.u_left, ur = d.u_right;
  if (!(ul < ur))
    throw Error("expansion_jump_solution: needs ul < ur (an expansive jump)");
  SolutionField f;
  f.rule = [ul, ur](double x, double) { return x < 0.0 ? ul : ur; };
  f.h_x = [](double, double) { return 0.0; };
  f.h_t = [](double, double) { return 0.0; };
  f.domain = Domain::desk_scale();
  std::ostringstream os;
  os << "expansion:ul=" << ul << ",ur=" << ur;
  f.name = os.str();
  return f;
}

SolutionField log_fan_solution() {
  SolutionField f;
  f.rule = [](double x, double t) { return std::log(x / t); };
  f.h_x = [](double x, double) { return 1.0 / x; };
  f.h_t = [](double, double t) { return -1.0 / t; };
  f.singular_mask = [](double x, double t) { return x <= 0.0 || t <= 0.0; };
  f.domain = Domain(0.05, 5.0, 0.05, 5.0, 401, 401);
  f.name = "logfan";
  return f;
}

SolutionField lift_flux(const SolutionField& v_field, const FluxSpec& flux) {
  if (!flux.c || !flux.c_prime) throw Error("lift_flux: flux needs c and c_prime");
  // sampled precondition: c' must not vanish on the range of v
  const Domain& d = v_field.domain;
  const int n = 33;
  for (int j = 0; j < n; ++j) {
    const double t = d.t_min + j * (d.t_max - d.t_min) / (n - 1);
    for (int i = 0; i < n; ++i) {
      const double x = d.x_min + i * (d.x_max - d.x_min) / (n - 1);
      if (v_field.is_singular(x, t)) continue;
      const double v = v_field.rule(x, t);
      const double cp = flux.c_prime(v);
      if (!std::isfinite(cp) || cp == 0.0) {
        std::ostringstream os;
        os.precision(17);
        os << "lift_flux: c' vanishes at v=" << v << " (sampled at x=" << x
           << ", t=" << t << ")";
        throw Error(os.str());
      }
    }
  }

  SolutionField out;
  auto rule = v_field.rule;
  auto c = flux.c;
  out.rule = [rule, c](double x, double t) { return c(rule(x, t)); };
  if (v_field.has_exact_partials()) {
    auto cp = flux.c_prime;
    auto vx = v_field.h_x;
    auto vt = v_field.h_t;
    out.h_x = [rule, cp, vx](double x, double t) { return cp(rule(x, t)) * vx(x, t); };
    out.h_t = [rule, cp, vt](double x, double t) { return cp(rule(x, t)) * vt(x, t); };
  }
  out.singular_mask = v_field.singular_mask;
  out.domain = v_field.domain;
  out.name = "lifted(" + flux.name + "," + v_field.name + ")";
  return out;
}

FluxSpec flux_by_name(const std::string& name) {
  FluxSpec f;
  f.name = name;
  if (name == "identity") {
    f.c = [](double v) { return v; };
    f.c_prime = [](double) { return 1.0; };
    f.C = [](double v) { return 0.5 * v * v; };
  } else if (name == "exp") {
    f.c = [](double v) { return std::exp(v); };
    f.c_prime = [](double v) { return std::exp(v); };
    f.C = [](double v) { return std::exp(v); };
  } else if (name == "square") {
    f.c = [](double v) { return v * v; };
    f.c_prime = [](double v) { return 2.0 * v; };
    f.C = [](double v) { return v * v * v / 3.0; };
  } else {
    throw UsageError("unknown flux '" + name + "' (known: identity, exp, square)");
  }
  return f;
}

std::pair<std::string, std::map<std::string, std::string>>
parse_spec_string(const std::string& spec) {
  if (spec.empty()) throw UsageError("empty field spec");
  std::string name = spec;
  std::map<std::string, std::string> kv;
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::istringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw UsageError("field spec '" + spec + "': expected key=value, got '" + item + "'");
      kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  if (name.empty()) throw UsageError("field spec '" + spec + "': empty name");
  return {name, kv};
}

SolutionField field_from_spec(const std::string& spec) {
  auto [name, kv] = parse_spec_string(spec);
  if (name == "constant") {
    reject_unknown_keys(kv, {"c"}, name);
    return constant_solution(parse_double(kv, "c", 0.0));
  }
  if (name == "cone") {
    reject_unknown_keys(kv, {"x0", "t0"}, name);
    return cone_induced_solution({parse_double(kv, "x0", 0.0), parse_double(kv, "t0", 0.0)});
  }
  if (name == "rarefaction") {
    reject_unknown_keys(kv, {"tfloor"}, name);
    return rarefaction_solution(parse_double(kv, "tfloor", 0.5));
  }
  if (name == "riemann") {
    reject_unknown_keys(kv, {"ul", "ur"}, name);
    return riemann_entropy_solution({parse_double(kv, "ul", 1.0), parse_double(kv, "ur", 0.0)});
  }
  if (name == "expansion") {
    reject_unknown_keys(kv, {"ul", "ur"}, name);
    return expansion_jump_solution({parse_double(kv, "ul", -1.0), parse_double(kv, "ur", 1.0)});
  }
  if (name == "logfan") {
    reject_unknown_keys(kv, {}, name);
    return log_fan_solution();
  }
  if (name == "lifted") {
    auto flux_it = kv.find("flux");
    auto base_it = kv.find("base");
    if (flux_it == kv.end() || base_it == kv.end())
      throw UsageError("field spec 'lifted' needs flux=... and base=...");
    FluxSpec flux = flux_by_name(flux_it->second);
    // remaining keys parametrize the base field
    std::string base_spec = base_it->second;
    std::string sep = ":";
    for (const auto& [k, v] : kv) {
      if (k == "flux" || k == "base") continue;
      base_spec += sep + k + "=" + v;
      sep = ",";
    }
    return lift_flux(field_from_spec(base_spec), flux);
  }
  throw UsageError("unknown field '" + name +
                   "' (known: constant, cone, rarefaction, riemann, expansion, logfan, lifted)");
}

} // namespace burgeon
