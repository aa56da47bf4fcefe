#include <stdexcept>

#include "gcrys/crystal/crystal.hpp"

namespace gcrys::crystal {

RatExpr dlog_jacobian(const std::vector<RatExpr>& outputs, const std::vector<Var>& inputs) {
  if (outputs.size() != inputs.size()) throw std::invalid_argument("dlog_jacobian: map is not square");
  // a coordinate passed through unchanged contributes a unit row; expand along it
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (outputs[k].is_zero()) throw std::domain_error("dlog_jacobian: zero output coordinate");
    if (!(outputs[k] == RatExpr::variable(inputs[k]))) live.push_back(k);
  }
  const std::size_t m = live.size();
  alg::SqMatrix J(m);
  for (std::size_t a = 0; a < m; ++a) {
    const RatExpr& y = outputs[live[a]];
    for (std::size_t b = 0; b < m; ++b) {
      Var x = inputs[live[b]];
      J(a, b) = RatExpr::variable(x) * y.derivative(x) / y;
    }
  }
  return alg::mat_det(J);
}

}  // namespace gcrys::crystal
