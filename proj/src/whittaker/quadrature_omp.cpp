#include <stdexcept>

#include "slice.hpp"

namespace gcrys::wh {

KernelSums trapezoid_omp(const LogIntegrand& f, const LogGrid& g, double shift, Precision p) {
  detail::check_grid(g);
  if (f.dim() != g.dim()) throw std::invalid_argument("integrand and grid dimensions differ");
  const int n0 = g.points[0];
  std::vector<detail::SliceSums> slices(n0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n0; ++i)
    slices[i] = p == Precision::extended ? detail::slice_sum<long double>(f, g, i, shift)
                                         : detail::slice_sum<double>(f, g, i, shift);
  return detail::reduce(slices);
}

}  // namespace gcrys::wh
