/// \file initial.hpp
/// Builds initial data fields from an InitialSpec.

#pragma once

#include "gchlab/config.hpp"

namespace gchlab {

/// gaussian:            a * exp(-(x-x0)^2 / sigma^2)
/// sech_momentum:       G * (a * sech(x-x0))
/// dp_peakon_pullback:  from_dp(c * exp(-|x-x0|))
/// from_file:           x,u CSV matching the grid
/// Mollified with rho_n afterwards when spec.mollify_n is set.
Field make_initial(const InitialSpec& spec, const Grid& grid,
                   BackendKind backend);

} // namespace gchlab
