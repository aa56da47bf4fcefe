#include <cmath>
#include <map>
#include <stdexcept>

#include "gcrys/toda/toda.hpp"

namespace gcrys::toda {

namespace {

double binom(unsigned m, unsigned j) {
  double r = 1;
  for (unsigned k = 1; k <= j; ++k) r = r * (m - j + k) / k;
  return r;
}

class Sampler {
 public:
  Sampler(const std::function<double(const std::vector<double>&)>& f, const std::vector<double>& t, double unit)
      : f_(f), t_(t), unit_(unit) {}

  // f at t_k exp(offset_k * unit)
  double operator()(const std::vector<int>& offset) {
    auto it = cache_.find(offset);
    if (it != cache_.end()) return it->second;
    std::vector<double> x(t_.size());
    for (std::size_t k = 0; k < t_.size(); ++k) x[k] = t_[k] * std::exp(offset[k] * unit_);
    double v = f_(x);
    if (!std::isfinite(v)) throw std::runtime_error("sampler returned a non-finite value");
    cache_.emplace(offset, v);
    return v;
  }

 private:
  const std::function<double(const std::vector<double>&)>& f_;
  std::vector<double> t_;
  double unit_;
  std::map<std::vector<int>, double> cache_;
};

// prod_k delta^{b_k} f / s^{|b|} with central differences of step s = 2^scale * unit
double central(Sampler& f, const std::vector<unsigned>& b, int scale, double unit) {
  const std::size_t N = b.size();
  std::vector<unsigned> j(N, 0);
  double sum = 0;
  unsigned total = 0;
  for (auto e : b) total += e;
  for (;;) {
    double w = 1;
    std::vector<int> off(N);
    for (std::size_t k = 0; k < N; ++k) {
      w *= ((j[k] % 2) ? -1.0 : 1.0) * binom(b[k], j[k]);
      // (b_k/2 - j_k) steps, in units of step/2
      off[k] = (static_cast<int>(b[k]) - 2 * static_cast<int>(j[k])) * (1 << (scale - 1));
    }
    sum += w * f(off);
    std::size_t k = 0;
    while (k < N && j[k] == b[k]) j[k++] = 0;
    if (k == N) break;
    ++j[k];
  }
  return sum / std::pow(std::ldexp(unit, scale), static_cast<double>(total));
}

}  // namespace

double apply_op(const DiffOp& a, const std::function<double(const std::vector<double>&)>& f,
                const std::vector<double>& point, ApplyOptions opt) {
  const int n = a.rank();
  if (point.size() != static_cast<std::size_t>(n + 1)) throw std::invalid_argument("point has the wrong dimension");
  for (double t : point)
    if (!(t > 0) || !std::isfinite(t)) throw std::invalid_argument("point must have positive coordinates");
  if (opt.richardson < 0 || opt.richardson > 6) throw std::invalid_argument("richardson levels must be in 0..6");
  // finest step h / 2^L, sampled on a grid of half that
  double unit = std::ldexp(opt.step, -(opt.richardson + 1));
  if (!(opt.step > 0) || unit < 1e-12) throw std::invalid_argument("finite-difference step underflow");
  Sampler sample(f, point, unit);
  double total = 0;
  for (const auto& [key, c] : a.terms()) {
    double qv = 1;
    for (int i = 0; i < n; ++i) qv *= std::pow(point[i + 1] / point[i], key.q[i]);
    double deriv;
    if (key.degree() == 0) {
      deriv = sample(std::vector<int>(n + 1, 0));
    } else {
      // table[l] for steps h / 2^l, extrapolated in powers of h^2
      std::vector<double> table;
      for (int l = 0; l <= opt.richardson; ++l) table.push_back(central(sample, key.d, opt.richardson + 1 - l, unit));
      for (int level = 1; level <= opt.richardson; ++level) {
        double fac = std::pow(4.0, level);
        for (int l = opt.richardson; l >= level; --l) table[l] = (fac * table[l] - table[l - 1]) / (fac - 1);
      }
      deriv = table[opt.richardson];
    }
    total += c.get_d() * qv * deriv;
  }
  return total;
}

}  // namespace gcrys::toda
