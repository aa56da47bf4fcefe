#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gcrys/algebra.hpp"

namespace gcrys::toda {

using alg::Scalar;

// q^a d^b (quantum) or q^a p^b (classical), where q_i = e^{h_{i+1}-h_i},
// i = 1..n, and d_k = d/dh_k, p_k dual to h_k, k = 1..n+1.
struct OpKey {
  std::vector<int> q;
  std::vector<unsigned> d;
  unsigned degree() const;
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

using TermMap = std::map<OpKey, Scalar>;

// Differential operator on the torus of GL_{n+1}, normal ordered (q left of d).
class DiffOp {
 public:
  explicit DiffOp(int n = 1) : n_(n) {}
  static DiffOp constant(int n, const Scalar& c);
  static DiffOp q(int n, int i);  // 1 <= i <= n
  static DiffOp d(int n, int k);  // 1 <= k <= n+1
  static DiffOp term(int n, OpKey key, const Scalar& c);

  int rank() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned order() const;  // highest total degree in d

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator-() const;
  DiffOp operator*(const DiffOp& o) const;
  DiffOp scaled(const Scalar& c) const;
  // q_i -> -q_i; an algebra automorphism
  DiffOp sigma() const;

  std::string to_string() const;  // "q1*d1 - q1"
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

 private:
  void add_term(const OpKey& k, const Scalar& c);
  int n_;
  TermMap terms_;
};

DiffOp op_mul(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

// Laurent polynomial in q with polynomial coefficients in p.
class PhaseFn {
 public:
  explicit PhaseFn(int n = 1) : n_(n) {}
  static PhaseFn constant(int n, const Scalar& c);
  static PhaseFn q(int n, int i);
  static PhaseFn p(int n, int k);
  static PhaseFn term(int n, OpKey key, const Scalar& c);

  int rank() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PhaseFn operator+(const PhaseFn& o) const;
  PhaseFn operator-(const PhaseFn& o) const;
  PhaseFn operator-() const;
  PhaseFn operator*(const PhaseFn& o) const;
  PhaseFn scaled(const Scalar& c) const;
  PhaseFn d_p(int k) const;
  PhaseFn d_h(int k) const;  // d q_i / d h_k = q_i (delta_{k,i+1} - delta_{k,i})
  // polynomial part of degree m in p
  PhaseFn p_degree_part(unsigned m) const;

  std::string to_string() const;  // "p1*p2*p3 - p3*q1 - p1*q2"
  friend bool operator==(const PhaseFn&, const PhaseFn&) = default;

 private:
  void add_term(const OpKey& k, const Scalar& c);
  int n_;
  TermMap terms_;
};

// {F, G} = sum_k dF/dh_k dG/dp_k - dF/dp_k dG/dh_k, so {p_1, q_1} = q_1
PhaseFn poisson_bracket(const PhaseFn& f, const PhaseFn& g);

// d_k -> p_k
PhaseFn quasi_classical(const DiffOp& a);
// top-order part in d, as a function of p
PhaseFn symbol(const DiffOp& a);

enum class Ordering { right, left };

// Coefficients of the characteristic polynomial of the tridiagonal operator matrix:
// Delta_k = Delta_{k-1} (lambda + d_k) - Delta_{k-2} q_{k-1}   (right)
// Delta_k = (lambda + d_k) Delta_{k-1} - q_{k-1} Delta_{k-2}   (left, fallback)
// H[k-1] is the coefficient of lambda^{n+1-k}.
struct TodaSystem {
  int n = 0;
  std::vector<DiffOp> H;
  Ordering ordering = Ordering::right;
};

TodaSystem jacobi_char_poly(int n);
// the ordering is not retried; throws with the first nonzero commutator
void certify_commuting(const TodaSystem& s);

// 1/2 sum d_k^2 - sum q_i, obtained as sigma(1/2 H_1^2 - H_2)
DiffOp toda_hamiltonian(const TodaSystem& s);

// Char-poly coefficients of the classical Lax matrix with p on the diagonal.
std::vector<PhaseFn> classical_integrals(int n);
// The three PGL_3 relations: p1+p2+p3, q1+q2-p1p2-p1p3-p2p3, p1p2p3-p3q1-p1q2
std::vector<PhaseFn> pgl3_relations();

// half-sum of positive roots of GL_{n+1}: rho_j = n/2 - (j-1)
std::vector<double> rho(int n);

struct ApplyOptions {
  double step = 0.02;  // in log coordinates
  int richardson = 2;  // extrapolation levels
};

// (A f)(t) by central differences in h = log t with Richardson extrapolation
double apply_op(const DiffOp& a, const std::function<double(const std::vector<double>&)>& f,
                const std::vector<double>& point, ApplyOptions opt = {});

}  // namespace gcrys::toda
