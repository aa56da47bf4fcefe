#include <stdexcept>

#include "gcrys/toda/toda.hpp"

namespace gcrys::toda {

std::string render_terms(const TermMap& terms, char dvar);

namespace {
OpKey unit_key(int n) { return OpKey{std::vector<int>(n, 0), std::vector<unsigned>(n + 1, 0)}; }
}  // namespace

void PhaseFn::add_term(const OpKey& k, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PhaseFn PhaseFn::term(int n, OpKey key, const Scalar& c) {
  if (key.q.size() != static_cast<std::size_t>(n) || key.d.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("key shape does not match rank");
  PhaseFn r(n);
  r.add_term(key, c);
  return r;
}

PhaseFn PhaseFn::constant(int n, const Scalar& c) { return term(n, unit_key(n), c); }

PhaseFn PhaseFn::q(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("q index out of range");
  OpKey k = unit_key(n);
  k.q[i - 1] = 1;
  return term(n, k, 1);
}

PhaseFn PhaseFn::p(int n, int k) {
  if (k < 1 || k > n + 1) throw std::out_of_range("p index out of range");
  OpKey key = unit_key(n);
  key.d[k - 1] = 1;
  return term(n, key, 1);
}

PhaseFn PhaseFn::operator+(const PhaseFn& o) const {
  if (n_ != o.n_) throw std::invalid_argument("phase functions of different rank");
  PhaseFn r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

PhaseFn PhaseFn::operator-() const { return scaled(-1); }
PhaseFn PhaseFn::operator-(const PhaseFn& o) const { return *this + (-o); }

PhaseFn PhaseFn::scaled(const Scalar& c) const {
  PhaseFn r(n_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

PhaseFn PhaseFn::operator*(const PhaseFn& o) const {
  if (n_ != o.n_) throw std::invalid_argument("phase functions of different rank");
  PhaseFn r(n_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      OpKey k = a;
      for (std::size_t i = 0; i < k.q.size(); ++i) k.q[i] += b.q[i];
      for (std::size_t i = 0; i < k.d.size(); ++i) k.d[i] += b.d[i];
      r.add_term(k, ca * cb);
    }
  return r;
}

PhaseFn PhaseFn::d_p(int k) const {
  PhaseFn r(n_);
  for (const auto& [key, c] : terms_) {
    unsigned e = key.d.at(k - 1);
    if (e == 0) continue;
    OpKey k2 = key;
    --k2.d[k - 1];
    r.add_term(k2, c * e);
  }
  return r;
}

PhaseFn PhaseFn::d_h(int k) const {
  PhaseFn r(n_);
  for (const auto& [key, c] : terms_) {
    // q^a depends on h_k through a_{k-1} h_k - a_k h_k
    int s = (k >= 2 ? key.q[k - 2] : 0) - (k <= n_ ? key.q[k - 1] : 0);
    if (s != 0) r.add_term(key, c * s);
  }
  return r;
}

PhaseFn PhaseFn::p_degree_part(unsigned m) const {
  PhaseFn r(n_);
  for (const auto& [k, c] : terms_)
    if (k.degree() == m) r.terms_.emplace(k, c);
  return r;
}

std::string PhaseFn::to_string() const { return render_terms(terms_, 'p'); }

PhaseFn poisson_bracket(const PhaseFn& f, const PhaseFn& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("phase functions of different rank");
  PhaseFn r(f.rank());
  for (int k = 1; k <= f.rank() + 1; ++k) r = r + f.d_h(k) * g.d_p(k) - f.d_p(k) * g.d_h(k);
  return r;
}

PhaseFn quasi_classical(const DiffOp& a) {
  PhaseFn r(a.rank());
  for (const auto& [k, c] : a.terms()) r = r + PhaseFn::term(a.rank(), k, c);
  return r;
}

PhaseFn symbol(const DiffOp& a) { return quasi_classical(a).p_degree_part(a.order()); }

}  // namespace gcrys::toda
