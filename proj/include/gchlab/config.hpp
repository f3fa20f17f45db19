/// \file config.hpp
/// JSON run configuration: schema validation, defaults, serialization.
/// Unknown keys are rejected so that typos fail loudly instead of being
/// silently ignored.

#pragma once

#include <optional>
#include <string>

#include "gchlab/dynamics.hpp"

namespace gchlab {

/// Schema violation; the message names the offending key.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InitialSpec {
  enum class Kind { Gaussian, SechMomentum, DpPeakonPullback, FromFile };
  Kind kind = Kind::Gaussian;
  double a = 1.0;     // gaussian / sech_momentum amplitude
  double x0 = 0.0;    // center (gaussian, sech_momentum, dp_peakon_pullback)
  double sigma = 1.0; // gaussian width
  double c = 1.0;     // dp_peakon_pullback amplitude
  std::string path;   // from_file
  std::optional<int> mollify_n;
};

const char* to_string(InitialSpec::Kind k);

struct RunConfig {
  double grid_half_width = 30.0;
  int grid_n = 1024;
  BackendKind backend = BackendKind::Spectral;

  double t_end = 1.0;
  double cfl = 0.3;
  double dt_min = 1e-10;
  double blow_factor = 50.0;
  int snapshot_stride = 1;
  bool dealias = true;

  InitialSpec initial;

  std::string output_dir = "out";
  bool write_snapshots = false;

  Grid make_grid() const { return Grid::make(grid_half_width, grid_n); }
  SolverConfig solver() const;
};

/// Parses and validates a config file. Throws config_error with a key
/// diagnostic on schema violations.
RunConfig parse_config(const std::string& path);

/// Same, from JSON text (exposed for tests).
RunConfig parse_config_text(const std::string& text);

/// Serializes the fully resolved configuration.
std::string config_to_json(const RunConfig& cfg);

} // namespace gchlab
