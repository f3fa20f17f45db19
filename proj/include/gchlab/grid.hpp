/// \file grid.hpp
/// Uniform periodic grid on [-L, L) and real-valued grid functions.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gchlab {

/// Thrown when a state or an operator input stops being finite.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BackendKind { Spectral, Fd2 };

const char* to_string(BackendKind b);

/// Uniform periodic mesh x_i = -L + i*h, i = 0..N-1, h = 2L/N.
struct Grid {
  double half_width = 0.0; // L
  int n = 0;               // N
  double spacing = 0.0;    // h

  /// Validates L > 0, N >= 8, N even.
  static Grid make(double half_width, int n);

  double node(int i) const { return -half_width + spacing * i; }
  double length() const { return 2.0 * half_width; }

  bool operator==(const Grid&) const = default;
};

/// Real grid function. Entries are expected to stay finite; operations check
/// their inputs and throw numerical_error otherwise.
struct Field {
  Grid grid;
  std::vector<double> values;

  Field() = default;
  Field(const Grid& g, double value = 0.0)
      : grid(g), values(static_cast<std::size_t>(g.n), value) {}
  Field(const Grid& g, std::vector<double> v);

  int size() const { return grid.n; }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::span<double> span() { return values; }
  std::span<const double> span() const { return values; }
};

/// Samples fn(x_i) over the grid.
template <class Fn>
Field sample(const Grid& g, Fn&& fn) {
  Field f(g);
  for (int i = 0; i < g.n; ++i)
    f.values[static_cast<std::size_t>(i)] = fn(g.node(i));
  return f;
}

/// Throws numerical_error when f has a NaN or Inf entry.
void ensure_finite(const Field& f, const char* context);

/// Throws std::invalid_argument when the two fields live on different grids.
void ensure_same_grid(const Field& a, const Field& b, const char* context);

} // namespace gchlab
