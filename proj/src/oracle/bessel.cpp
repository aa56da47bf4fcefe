#include "gcrys/oracle/bessel.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <stdexcept>

namespace gcrys::oracle {

Ext bessel_k_ext(const Ext& nu, const Ext& x) {
  if (!(x > 0)) throw std::domain_error("Bessel K needs x > 0");
  boost::math::quadrature::exp_sinh<Ext> integrator;
  auto f = [&](const Ext& s) -> Ext {
    Ext c = cosh(s);
    Ext e = -x * c;
    if (e < -11000) return Ext(0);
    return exp(e) * cosh(nu * s);
  };
  Ext tol = boost::math::tools::root_epsilon<Ext>();
  return integrator.integrate(f, tol);
}

double bessel_k(double nu, double x) { return static_cast<double>(bessel_k_ext(Ext(nu), Ext(x))); }

double gl2_whittaker(double mu1, double mu2, double t1, double t2) {
  Ext a(t1), b(t2);
  Ext pre = pow(a * b, Ext(mu1 + mu2) / 2);
  return static_cast<double>(pre * 2 * bessel_k_ext(Ext(mu1 - mu2), 2 * sqrt(b / a)));
}

}  // namespace gcrys::oracle
