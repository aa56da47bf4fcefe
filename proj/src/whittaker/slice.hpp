#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "gcrys/whittaker/whittaker.hpp"

namespace gcrys::wh::detail {

template <class T>
struct Neumaier {
  T sum = 0, comp = 0;
  void add(T x) {
    T t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  T value() const { return sum + comp; }
};

struct SliceSums {
  long double fine = 0, coarse = 0;
  double boundary_max = -1e300;
  std::uint64_t nodes = 0;
};

// all nodes whose first index is i0
template <class T>
SliceSums slice_sum(const LogIntegrand& f, const LogGrid& g, int i0, double shift) {
  const int d = g.dim();
  std::vector<int> idx(d, 0);
  std::vector<double> u(d);
  idx[0] = i0;
  u[0] = g.node(0, i0);
  for (int k = 1; k < d; ++k) u[k] = g.lo[k];
  Neumaier<T> fine, coarse;
  SliceSums out;
  const bool edge0 = i0 == 0 || i0 == g.points[0] - 1;
  for (;;) {
    double l = f.log_value(u.data()) - shift;
    T e = static_cast<T>(std::exp(l));
    fine.add(e);
    bool even = true, edge = edge0;
    for (int k = 0; k < d; ++k) {
      even = even && idx[k] % 2 == 0;
      edge = edge || idx[k] == 0 || idx[k] == g.points[k] - 1;
    }
    if (even) coarse.add(e);
    if (edge) out.boundary_max = std::max(out.boundary_max, l);
    ++out.nodes;
    int k = d - 1;
    while (k >= 1 && idx[k] == g.points[k] - 1) {
      idx[k] = 0;
      u[k] = g.lo[k];
      --k;
    }
    if (k < 1) break;
    ++idx[k];
    u[k] = g.node(k, idx[k]);
  }
  out.fine = fine.value();
  out.coarse = coarse.value();
  return out;
}

// ordered reduction so that serial and parallel kernels agree bitwise
inline KernelSums reduce(const std::vector<SliceSums>& slices) {
  Neumaier<long double> fine, coarse;
  KernelSums out;
  for (const auto& s : slices) {
    fine.add(s.fine);
    coarse.add(s.coarse);
    out.boundary_max = std::max(out.boundary_max, s.boundary_max);
    out.nodes += s.nodes;
  }
  out.fine = static_cast<double>(fine.value());
  out.coarse = static_cast<double>(coarse.value());
  return out;
}

inline void check_grid(const LogGrid& g) {
  if (g.dim() < 1) throw std::invalid_argument("grid needs at least one dimension");
  if (g.hi.size() != g.lo.size() || g.points.size() != g.lo.size()) throw std::invalid_argument("inconsistent grid");
  for (int k = 0; k < g.dim(); ++k) {
    if (g.points[k] < 3 || g.points[k] % 2 == 0) throw std::invalid_argument("grid needs an odd number (>= 3) of points");
    if (!(g.hi[k] > g.lo[k])) throw std::invalid_argument("empty grid interval");
  }
}

}  // namespace gcrys::wh::detail
