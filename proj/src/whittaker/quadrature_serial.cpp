#include <stdexcept>

#include "slice.hpp"

namespace gcrys::wh {

KernelSums trapezoid_serial(const LogIntegrand& f, const LogGrid& g, double shift, Precision p) {
  detail::check_grid(g);
  if (f.dim() != g.dim()) throw std::invalid_argument("integrand and grid dimensions differ");
  std::vector<detail::SliceSums> slices(g.points[0]);
  for (int i = 0; i < g.points[0]; ++i)
    slices[i] = p == Precision::extended ? detail::slice_sum<long double>(f, g, i, shift)
                                         : detail::slice_sum<double>(f, g, i, shift);
  return detail::reduce(slices);
}

}  // namespace gcrys::wh
