#include "gchlab/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gchlab {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "t,dt,energy,mass,m_l1,ux_inf,twisted_min\n";
  for (const auto& r : rows)
    out << format_double(r.t) << ',' << format_double(r.dt) << ','
        << format_double(r.energy) << ',' << format_double(r.mass) << ','
        << format_double(r.m_l1) << ',' << format_double(r.ux_inf) << ','
        << format_double(r.twisted_min) << '\n';
}

void write_field_csv(const std::string& path, const Field& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "x,u\n";
  for (int i = 0; i < f.size(); ++i)
    out << format_double(f.grid.node(i)) << ','
        << format_double(f[static_cast<std::size_t>(i)]) << '\n';
}

Field read_field_csv(const std::string& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open field file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,u", 0) != 0)
    throw std::invalid_argument(path + ": expected header \"x,u\"");

  Field f(grid);
  int i = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (i >= grid.n)
      throw std::invalid_argument(path + ": more rows than grid points");
    double x = 0.0, u = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf", &x, &u) != 2)
      throw std::invalid_argument(path + ": malformed row \"" + line + "\"");
    if (std::abs(x - grid.node(i)) > 1e-12 * std::max(1.0, grid.half_width))
      throw std::invalid_argument(path + ": x column does not match grid node " +
                                  std::to_string(i));
    f[static_cast<std::size_t>(i)] = u;
    ++i;
  }
  if (i != grid.n)
    throw std::invalid_argument(path + ": expected " + std::to_string(grid.n) +
                                " rows, got " + std::to_string(i));
  return f;
}

} // namespace gchlab
