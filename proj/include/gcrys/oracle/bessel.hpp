#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace gcrys::oracle {

using Ext = boost::multiprecision::cpp_bin_float_50;

// K_nu(x) = int_0^inf exp(-x cosh s) cosh(nu s) ds, by exp-sinh quadrature in 50 digits
Ext bessel_k_ext(const Ext& nu, const Ext& x);
double bessel_k(double nu, double x);

// (t1 t2)^{(mu1+mu2)/2} 2 K_{mu1-mu2}(2 sqrt(t2/t1))
double gl2_whittaker(double mu1, double mu2, double t1, double t2);

}  // namespace gcrys::oracle
