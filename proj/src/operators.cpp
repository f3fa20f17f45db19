#include "gchlab/operators.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "gchlab/dft.hpp"
#include "gchlab/kernels.hpp"

namespace gchlab {

namespace {

using cplx = std::complex<double>;

double wavenumber(const Grid& g, int j) {
  return std::numbers::pi * j / g.half_width;
}

// Applies a per-mode spectral symbol and transforms back.
template <class Symbol>
Field apply_spectral(const Field& f, Symbol&& symbol) {
  auto& dft = dft_for(f.grid.n);
  const auto m = static_cast<std::size_t>(dft.spectrum_size());
  std::vector<cplx> spec(m), sym(m);
  for (std::size_t j = 0; j < m; ++j) sym[j] = symbol(static_cast<int>(j));
  dft.forward(f.span(), spec);
  kernels::apply_symbol(std::span<cplx>(spec), std::span<const cplx>(sym));
  Field out(f.grid);
  dft.inverse(spec, out.span());
  return out;
}

} // namespace

Field derivative(const Field& f, BackendKind backend) {
  ensure_finite(f, "derivative");
  if (backend == BackendKind::Spectral) {
    const int nyquist = f.grid.n / 2;
    return apply_spectral(f, [&](int j) {
      if (j == nyquist) return cplx(0.0, 0.0);
      return cplx(0.0, wavenumber(f.grid, j));
    });
  }
  Field out(f.grid);
  kernels::diff_central(out.span(), f.span(), 1.0 / (2.0 * f.grid.spacing));
  return out;
}

Field second_derivative(const Field& f, BackendKind backend) {
  ensure_finite(f, "second_derivative");
  if (backend == BackendKind::Spectral) {
    return apply_spectral(f, [&](int j) {
      const double k = wavenumber(f.grid, j);
      return cplx(-k * k, 0.0);
    });
  }
  Field out(f.grid);
  kernels::diff_second(out.span(), f.span(),
                       1.0 / (f.grid.spacing * f.grid.spacing));
  return out;
}

Field helmholtz_inverse(const Field& f, BackendKind backend) {
  ensure_finite(f, "helmholtz_inverse");
  if (backend == BackendKind::Spectral) {
    return apply_spectral(f, [&](int j) {
      const double k = wavenumber(f.grid, j);
      return cplx(1.0 / (1.0 + k * k), 0.0);
    });
  }
  // (I - D2) g = f, D2 the periodic second-difference stencil.
  const double a = -1.0 / (f.grid.spacing * f.grid.spacing);
  Field out(f.grid,
            solve_cyclic_tridiagonal(a, 1.0 - 2.0 * a, a, f.span()));
  return out;
}

Field green_derivative_convolve(const Field& f, BackendKind backend) {
  return derivative(helmholtz_inverse(f, backend), backend);
}

Field invert_shifted_derivative(const Field& f, BackendKind backend) {
  ensure_finite(f, "invert_shifted_derivative");
  if (backend == BackendKind::Spectral) {
    const int nyquist = f.grid.n / 2;
    return apply_spectral(f, [&](int j) {
      if (j == nyquist) return cplx(0.5, 0.0); // derivative zeroed there
      return 1.0 / cplx(2.0, -wavenumber(f.grid, j));
    });
  }
  // (2I - D1) g = f, D1 the periodic central difference.
  const double c = 1.0 / (2.0 * f.grid.spacing);
  Field out(f.grid, solve_cyclic_tridiagonal(c, 2.0, -c, f.span()));
  return out;
}

Field dealias_23(const Field& f) {
  ensure_finite(f, "dealias_23");
  const int cutoff = f.grid.n / 3;
  return apply_spectral(
      f, [&](int j) { return j > cutoff ? cplx(0.0, 0.0) : cplx(1.0, 0.0); });
}

double norm(const Field& f, NormKind kind, BackendKind backend) {
  ensure_finite(f, "norm");
  const double h = f.grid.spacing;
  switch (kind) {
    case NormKind::L1:
      return h * kernels::sum_abs(f.span());
    case NormKind::L2:
      return std::sqrt(h * kernels::sum_sq(f.span()));
    case NormKind::Linf:
      return kernels::max_abs(f.span());
    case NormKind::H1: {
      const Field fx = derivative(f, backend);
      return std::sqrt(h * (kernels::sum_sq(f.span()) +
                            kernels::sum_sq(fx.span())));
    }
    case NormKind::H2: {
      const Field fx = derivative(f, backend);
      const Field fxx = second_derivative(f, backend);
      return std::sqrt(h * (kernels::sum_sq(f.span()) +
                            kernels::sum_sq(fx.span()) +
                            kernels::sum_sq(fxx.span())));
    }
  }
  return 0.0;
}

double measure_norm(const Field& f) {
  ensure_finite(f, "measure_norm");
  return f.grid.spacing * kernels::sum_abs(f.span());
}

double mean(const Field& f) { return kernels::sum(f.span()) / f.grid.n; }

double integral(const Field& f) {
  return f.grid.spacing * kernels::sum(f.span());
}

std::vector<double> solve_cyclic_tridiagonal(double sub, double diag,
                                             double super,
                                             std::span<const double> rhs) {
  const std::size_t n = rhs.size();
  if (n < 3) throw std::invalid_argument("cyclic solve needs n >= 3");

  // Sherman-Morrison: fold the two corner entries into a rank-one update
  // A = T + u v^T with u = (gamma, 0, .., 0, sub)^T, v = (1, 0, .., super/gamma)^T.
  const double gamma = -diag;
  std::vector<double> d(n, diag);
  d[0] = diag - gamma;
  d[n - 1] = diag - sub * super / gamma;

  auto solve_tri = [&](std::span<const double> b) {
    // Thomas elimination with constant off-diagonals and modified diagonal.
    std::vector<double> c(n), x(n);
    c[0] = super / d[0];
    x[0] = b[0] / d[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double m = 1.0 / (d[i] - sub * c[i - 1]);
      c[i] = super * m;
      x[i] = (b[i] - sub * x[i - 1]) * m;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
  };

  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = sub;

  const std::vector<double> y = solve_tri(rhs);
  const std::vector<double> z = solve_tri(u);

  const double vy = y[0] + (super / gamma) * y[n - 1];
  const double vz = z[0] + (super / gamma) * z[n - 1];
  const double factor = vy / (1.0 + vz);

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = y[i] - factor * z[i];
  return x;
}

} // namespace gchlab
