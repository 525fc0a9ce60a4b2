#include "burgeon/fields.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace burgeon {

namespace {

std::string point_str(double x, double t) {
  std::ostringstream os;
  os.precision(17);
  os << "(x=" << x << ", t=" << t << ")";
  return os.str();
}

} // namespace

Domain::Domain(double x_min, double x_max, double t_min, double t_max, int nx, int nt)
    : x_min(x_min), x_max(x_max), t_min(t_min), t_max(t_max), nx(nx), nt(nt) {
  if (!(x_min < x_max) || !(t_min < t_max))
    throw Error("Domain: extents must satisfy x_min < x_max and t_min < t_max");
  if (nx < 3 || nt < 3)
    throw Error("Domain: need at least 3 samples per direction");
  if (!(dx() > 0.0) || !(dt() > 0.0))
    throw Error("Domain: degenerate grid spacing");
}

double Domain::diameter() const {
  return std::hypot(x_max - x_min, t_max - t_min);
}

bool Domain::contains(double x, double t) const {
  return x >= x_min && x <= x_max && t >= t_min && t <= t_max;
}

bool Domain::contains(const Domain& other) const {
  const double slack = 1e-12 * diameter();
  return other.x_min >= x_min - slack && other.x_max <= x_max + slack &&
         other.t_min >= t_min - slack && other.t_max <= t_max + slack;
}

Domain Domain::desk_scale() { return Domain(-5.0, 5.0, -5.0, 5.0, 401, 401); }

GridField::GridField(Domain domain, double fill, bool valid)
    : dom_(domain),
      values_(static_cast<std::size_t>(domain.nx) * domain.nt, fill),
      validity_(static_cast<std::size_t>(domain.nx) * domain.nt, valid ? 1 : 0) {}

long GridField::valid_count() const {
  long n = 0;
  for (auto v : validity_) n += v;
  return n;
}

GridField sample(const SolutionField& field, const Domain& domain) {
  if (!field.rule) throw Error("sample: field has no rule");
  GridField out(domain);
  for (int j = 0; j < domain.nt; ++j) {
    const double t = domain.t(j);
    for (int i = 0; i < domain.nx; ++i) {
      const double x = domain.x(i);
      if (field.is_singular(x, t)) {
        out.invalidate(i, j);
        continue;
      }
      const double v = field.rule(x, t);
      if (!std::isfinite(v))
        throw Error("sample: non-finite value of '" + field.name + "' at valid point " +
                    point_str(x, t));
      out.set(i, j, v);
    }
  }
  return out;
}

namespace {

// Second-order stencils along one grid direction. step(i,k) walks k nodes in
// the differentiated direction from node index i.
GridField diff_dir(const GridField& grid, bool along_x) {
  const Domain& d = grid.domain();
  const double h = along_x ? d.dx() : d.dt();
  GridField out(d);
  const int ni = along_x ? d.nx : d.nt;
  const int nj = along_x ? d.nt : d.nx;
  auto val = [&](int i, int j) { return along_x ? grid.value(i, j) : grid.value(j, i); };
  auto ok = [&](int i, int j) { return along_x ? grid.valid(i, j) : grid.valid(j, i); };
  auto put = [&](int i, int j, double v, bool o) {
    if (along_x)
      out.set(i, j, v, o);
    else
      out.set(j, i, v, o);
  };

  for (int j = 0; j < nj; ++j) {
    for (int i = 0; i < ni; ++i) {
      if (!ok(i, j)) {
        put(i, j, 0.0, false);
        continue;
      }
      const bool prev = i - 1 >= 0 && ok(i - 1, j);
      const bool next = i + 1 < ni && ok(i + 1, j);
      if (prev && next) {
        put(i, j, (val(i + 1, j) - val(i - 1, j)) / (2.0 * h), true);
      } else if (next && i + 2 < ni && ok(i + 2, j)) {
        put(i, j, (-3.0 * val(i, j) + 4.0 * val(i + 1, j) - val(i + 2, j)) / (2.0 * h), true);
      } else if (prev && i - 2 >= 0 && ok(i - 2, j)) {
        put(i, j, (3.0 * val(i, j) - 4.0 * val(i - 1, j) + val(i - 2, j)) / (2.0 * h), true);
      } else {
        put(i, j, 0.0, false);
      }
    }
  }
  return out;
}

} // namespace

GridField diff_x(const GridField& grid) { return diff_dir(grid, true); }
GridField diff_t(const GridField& grid) { return diff_dir(grid, false); }

void write_csv(const GridField& grid, std::ostream& os) {
  const Domain& d = grid.domain();
  os << "x,t,value,valid\n";
  os.precision(17);
  for (int j = 0; j < d.nt; ++j) {
    for (int i = 0; i < d.nx; ++i) {
      os << d.x(i) << ',' << d.t(j) << ',';
      if (grid.valid(i, j))
        os << grid.value(i, j) << ",1\n";
      else
        os << "nan,0\n";
    }
  }
}

} // namespace burgeon
