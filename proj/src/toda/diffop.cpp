#include <algorithm>
#include <stdexcept>

#include "gcrys/toda/toda.hpp"

namespace gcrys::toda {

unsigned OpKey::degree() const {
  unsigned s = 0;
  for (auto e : d) s += e;
  return s;
}

namespace {

OpKey unit_key(int n) { return OpKey{std::vector<int>(n, 0), std::vector<unsigned>(n + 1, 0)}; }

void check_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("operators of different rank");
}

Scalar binom(unsigned m, unsigned j) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), m, j);
  return Scalar(r);
}

// (x + s)^m as coefficients of x^j
std::vector<Scalar> shifted_power(unsigned m, int s) {
  std::vector<Scalar> c(m + 1);
  Scalar sp = 1;
  for (unsigned j = 0; j <= m; ++j) {
    c[m - j] = binom(m, j) * sp;
    sp *= s;
  }
  return c;
}

std::string key_string(const OpKey& k, char dvar) {
  std::string out;
  auto put = [&](char v, std::size_t idx, long e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v + std::to_string(idx + 1);
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (std::size_t k2 = 0; k2 < k.d.size(); ++k2) put(dvar, k2, k.d[k2]);
  for (std::size_t i = 0; i < k.q.size(); ++i) put('q', i, k.q[i]);
  return out;
}

}  // namespace

std::string render_terms(const TermMap& terms, char dvar) {
  if (terms.empty()) return "0";
  // higher d-degree first, then the map order
  std::vector<std::pair<const OpKey*, const Scalar*>> order;
  for (const auto& [k, c] : terms) order.emplace_back(&k, &c);
  std::stable_sort(order.begin(), order.end(), [](auto a, auto b) { return a.first->degree() > b.first->degree(); });
  std::string out;
  for (auto [k, c] : order) {
    std::string mono = key_string(*k, dvar);
    Scalar a = abs(*c);
    if (out.empty())
      out += sgn(*c) < 0 ? "-" : "";
    else
      out += sgn(*c) < 0 ? " - " : " + ";
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

void DiffOp::add_term(const OpKey& k, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffOp DiffOp::constant(int n, const Scalar& c) { return term(n, unit_key(n), c); }

DiffOp DiffOp::q(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("q index out of range");
  OpKey k = unit_key(n);
  k.q[i - 1] = 1;
  return term(n, k, 1);
}

DiffOp DiffOp::d(int n, int k) {
  if (k < 1 || k > n + 1) throw std::out_of_range("d index out of range");
  OpKey key = unit_key(n);
  key.d[k - 1] = 1;
  return term(n, key, 1);
}

DiffOp DiffOp::term(int n, OpKey key, const Scalar& c) {
  if (key.q.size() != static_cast<std::size_t>(n) || key.d.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("key shape does not match rank");
  DiffOp r(n);
  r.add_term(key, c);
  return r;
}

unsigned DiffOp::order() const {
  unsigned m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.degree());
  return m;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  check_rank(n_, o.n_);
  DiffOp r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

DiffOp DiffOp::operator-() const { return scaled(-1); }
DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::scaled(const Scalar& c) const {
  DiffOp r(n_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

DiffOp DiffOp::sigma() const {
  DiffOp r(n_);
  for (const auto& [k, v] : terms_) {
    int s = 0;
    for (int e : k.q) s += e;
    r.terms_.emplace(k, (s % 2) ? Scalar(-v) : v);
  }
  return r;
}

// d_k q^c = q^c (d_k + c_{k-1} - c_k), so d^b q^c = q^c prod_k (d_k + s_k)^{b_k}
DiffOp DiffOp::operator*(const DiffOp& o) const {
  check_rank(n_, o.n_);
  DiffOp r(n_);
  const int N = n_ + 1;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      // expansion of prod_k (d_k + s_k)^{a.d_k} as a list of (exponents, coefficient)
      std::vector<std::pair<std::vector<unsigned>, Scalar>> expansion{{std::vector<unsigned>(N, 0), ca * cb}};
      for (int k = 0; k < N; ++k) {
        unsigned m = ka.d[k];
        if (m == 0) continue;
        int s = (k >= 1 ? kb.q[k - 1] : 0) - (k < n_ ? kb.q[k] : 0);
        auto coeffs = shifted_power(m, s);
        std::vector<std::pair<std::vector<unsigned>, Scalar>> next;
        for (const auto& [e, c] : expansion)
          for (unsigned j = 0; j <= m; ++j) {
            if (coeffs[j] == 0) continue;
            auto e2 = e;
            e2[k] = j;
            next.emplace_back(std::move(e2), c * coeffs[j]);
          }
        expansion = std::move(next);
      }
      OpKey key{std::vector<int>(n_), std::vector<unsigned>(N)};
      for (int i = 0; i < n_; ++i) key.q[i] = ka.q[i] + kb.q[i];
      for (const auto& [e, c] : expansion) {
        for (int k = 0; k < N; ++k) key.d[k] = e[k] + kb.d[k];
        r.add_term(key, c);
      }
    }
  return r;
}

DiffOp op_mul(const DiffOp& a, const DiffOp& b) { return a * b; }
DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

std::string DiffOp::to_string() const { return render_terms(terms_, 'd'); }

}  // namespace gcrys::toda
