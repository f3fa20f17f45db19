#include "gchlab/initial.hpp"

#include <cmath>

#include "gchlab/csv.hpp"
#include "gchlab/dp.hpp"
#include "gchlab/mollify.hpp"
#include "gchlab/operators.hpp"

namespace gchlab {

Field make_initial(const InitialSpec& spec, const Grid& grid,
                   BackendKind backend) {
  Field u0;
  switch (spec.kind) {
    case InitialSpec::Kind::Gaussian: {
      const double a = spec.a, x0 = spec.x0, s = spec.sigma;
      u0 = sample(grid, [&](double x) {
        const double r = (x - x0) / s;
        return a * std::exp(-r * r);
      });
      break;
    }
    case InitialSpec::Kind::SechMomentum: {
      const double a = spec.a, x0 = spec.x0;
      const Field m0 =
          sample(grid, [&](double x) { return a / std::cosh(x - x0); });
      u0 = helmholtz_inverse(m0, backend);
      break;
    }
    case InitialSpec::Kind::DpPeakonPullback:
      u0 = from_dp(dp_peakon(spec.c, spec.x0, grid), backend);
      break;
    case InitialSpec::Kind::FromFile:
      u0 = read_field_csv(spec.path, grid);
      ensure_finite(u0, "make_initial from_file");
      break;
  }
  if (spec.mollify_n) u0 = mollify(u0, *spec.mollify_n);
  return u0;
}

} // namespace gchlab
