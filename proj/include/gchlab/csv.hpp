/// \file csv.hpp
/// CSV emission with fixed 17-significant-digit formatting, so identical
/// runs produce byte-identical files.

#pragma once

#include <string>
#include <vector>

#include "gchlab/dynamics.hpp"

namespace gchlab {

/// "%.17g" rendering of a double.
std::string format_double(double v);

/// Header: t,dt,energy,mass,m_l1,ux_inf,twisted_min
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows);

/// Header: x,u
void write_field_csv(const std::string& path, const Field& f);

/// Reads a two-column x,u file; the x column must match the grid nodes to
/// 1e-12. Throws std::invalid_argument on mismatch.
Field read_field_csv(const std::string& path, const Grid& grid);

} // namespace gchlab
