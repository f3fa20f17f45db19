/// \file operators.hpp
/// Discrete differential and nonlocal operators on periodic grid functions.
///
/// Two interchangeable backends:
///  - Spectral: exact differentiation of the trigonometric interpolant,
///    wavenumbers k = pi*j/L. The unpaired Nyquist mode is zeroed for odd
///    derivatives and kept for even ones, so (1 - dxx) and (2 - dx) have
///    exact discrete inverses.
///  - Fd2: second-order central differences; the nonlocal inverses solve the
///    corresponding cyclic tridiagonal systems exactly.

#pragma once

#include "gchlab/grid.hpp"

namespace gchlab {

enum class NormKind { L1, L2, Linf, H1, H2 };

/// d/dx per backend (spectral Nyquist derivative set to zero).
Field derivative(const Field& f, BackendKind backend);

/// d2/dx2 per backend (spectral symbol -k^2 on every mode incl. Nyquist,
/// fd2 the (1,-2,1)/h^2 stencil). This is the discrete operator inverted by
/// helmholtz_inverse.
Field second_derivative(const Field& f, BackendKind backend);

/// G * f = (1 - dxx)^(-1) f, the exact inverse of the backend's (1 - dxx).
Field helmholtz_inverse(const Field& f, BackendKind backend);

/// G_x * f = d/dx (G * f); inversion first, then differentiation.
Field green_derivative_convolve(const Field& f, BackendKind backend);

/// Solves (2 - dx) g = f for g with the backend's first derivative.
Field invert_shifted_derivative(const Field& f, BackendKind backend);

/// 2/3-rule de-aliasing: zeroes modes |j| > N/3 (spectral grids only).
Field dealias_23(const Field& f);

/// Discrete norms; H1/H2 use the backend's derivatives.
double norm(const Field& f, NormKind kind, BackendKind backend);

/// Total-variation surrogate for an absolutely continuous measure with
/// density f: reduces to the L1 norm. Genuinely singular data must be
/// mollified before calling this.
double measure_norm(const Field& f);

/// Mean value h * sum(f) / (2L), i.e. integral / length.
double mean(const Field& f);

/// Integral h * sum(f).
double integral(const Field& f);

/// Solves the cyclic tridiagonal Toeplitz system
///   sub*x[i-1] + diag*x[i] + super*x[i+1] = rhs[i]  (indices mod n)
/// by rank-one corrected elimination.
std::vector<double> solve_cyclic_tridiagonal(double sub, double diag,
                                             double super,
                                             std::span<const double> rhs);

} // namespace gchlab
