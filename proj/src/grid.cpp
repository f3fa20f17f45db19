#include "gchlab/grid.hpp"

#include "gchlab/kernels.hpp"

namespace gchlab {

const char* to_string(BackendKind b) {
  return b == BackendKind::Spectral ? "spectral" : "fd2";
}

Grid Grid::make(double half_width, int n) {
  if (!(half_width > 0.0))
    throw std::invalid_argument("grid half-width L must be positive");
  if (n < 8) throw std::invalid_argument("N must be at least 8");
  if (n % 2 != 0) throw std::invalid_argument("N must be even");
  Grid g;
  g.half_width = half_width;
  g.n = n;
  g.spacing = 2.0 * half_width / n;
  return g;
}

Field::Field(const Grid& g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("field length does not match grid");
}

void ensure_finite(const Field& f, const char* context) {
  if (!kernels::all_finite(f.span()))
    throw numerical_error(std::string(context) +
                          ": field has non-finite entries");
}

void ensure_same_grid(const Field& a, const Field& b, const char* context) {
  if (!(a.grid == b.grid))
    throw std::invalid_argument(std::string(context) +
                                ": fields live on different grids");
}

} // namespace gchlab
