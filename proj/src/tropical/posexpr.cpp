#include <cctype>
#include <stdexcept>

#include "gcrys/tropical/tropical.hpp"

namespace gcrys::trop {

struct PosExpr::Node {
  Kind kind;
  Var var;
  alg::Scalar c;
  std::vector<PosExpr> kids;
};

PosExpr PosExpr::variable(Var v) { return PosExpr(std::make_shared<Node>(Node{Kind::var, v, 0, {}})); }

PosExpr PosExpr::constant(const alg::Scalar& c) {
  if (c <= 0) throw std::domain_error("constant " + c.get_str() + " is not positive");
  return PosExpr(std::make_shared<Node>(Node{Kind::constant, {}, c, {}}));
}

PosExpr PosExpr::sum(std::vector<PosExpr> terms) {
  if (terms.empty()) throw std::invalid_argument("empty sum");
  if (terms.size() == 1) return terms[0];
  return PosExpr(std::make_shared<Node>(Node{Kind::sum, {}, 0, std::move(terms)}));
}

PosExpr PosExpr::product(std::vector<PosExpr> factors) {
  if (factors.empty()) return constant(1);
  if (factors.size() == 1) return factors[0];
  return PosExpr(std::make_shared<Node>(Node{Kind::product, {}, 0, std::move(factors)}));
}

PosExpr PosExpr::quotient(PosExpr num, PosExpr den) {
  return PosExpr(std::make_shared<Node>(Node{Kind::quotient, {}, 0, {std::move(num), std::move(den)}}));
}

PosExpr::Kind PosExpr::kind() const { return node_->kind; }
Var PosExpr::var() const { return node_->var; }
const alg::Scalar& PosExpr::constant_value() const { return node_->c; }
const std::vector<PosExpr>& PosExpr::children() const { return node_->kids; }

namespace {

PosExpr poly_to_pos(const MPoly& p) {
  if (p.is_zero()) throw std::domain_error("zero is not a positive expression");
  std::vector<PosExpr> terms;
  for (const auto& t : p.terms()) {
    if (t.coef < 0) throw std::domain_error("subtraction encountered: negative coefficient in " + p.to_string());
    std::vector<PosExpr> f;
    if (t.coef != 1 || t.mono.is_one()) f.push_back(PosExpr::constant(t.coef));
    for (const auto& vp : t.mono.pows())
      for (std::uint32_t k = 0; k < vp.exp; ++k) f.push_back(PosExpr::variable(vp.var));
    terms.push_back(PosExpr::product(std::move(f)));
  }
  return PosExpr::sum(std::move(terms));
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  PosExpr run() {
    PosExpr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("PosExpr parse error at " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    if (i_ < s_.size() && s_[i_] == '-') throw std::domain_error("subtraction encountered at position " + std::to_string(i_));
    return false;
  }
  PosExpr expr() {
    std::vector<PosExpr> terms{term()};
    while (eat('+')) terms.push_back(term());
    return PosExpr::sum(std::move(terms));
  }
  PosExpr term() {
    PosExpr acc = power();
    for (;;) {
      if (eat('*')) {
        acc = PosExpr::product({acc, power()});
      } else if (eat('/')) {
        acc = PosExpr::quotient(acc, power());
      } else {
        return acc;
      }
    }
  }
  PosExpr power() {
    PosExpr base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t j = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (j == i_) fail("expected exponent");
    int k = std::stoi(s_.substr(j, i_ - j));
    if (k == 0) return PosExpr::constant(1);
    return PosExpr::product(std::vector<PosExpr>(k, base));
  }
  PosExpr atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '-') throw std::domain_error("subtraction encountered at position " + std::to_string(i_));
    if (c == '(') {
      ++i_;
      PosExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return PosExpr::constant(alg::Scalar(s_.substr(j, i_ - j)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      int depth = 0;
      while (i_ < s_.size()) {
        char d = s_[i_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          ++i_;
        } else if (d == '{') {
          ++depth;
          ++i_;
        } else if (d == '}' && depth > 0) {
          --depth;
          ++i_;
        } else if (d == ',' && depth > 0) {
          ++i_;
        } else {
          break;
        }
      }
      return PosExpr::variable(Var::intern(s_.substr(j, i_ - j)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

PosExpr PosExpr::parse(const std::string& text) { return Parser(text).run(); }

PosExpr PosExpr::from_ratexpr(const RatExpr& e) {
  PosExpr num = poly_to_pos(e.num());
  if (e.den() == MPoly(1)) return num;
  return quotient(num, poly_to_pos(e.den()));
}

RatExpr PosExpr::to_ratexpr() const {
  switch (kind()) {
    case Kind::var:
      return RatExpr::variable(var());
    case Kind::constant:
      return RatExpr(MPoly(constant_value()));
    case Kind::sum: {
      RatExpr acc(0);
      for (const auto& k : children()) acc += k.to_ratexpr();
      return acc;
    }
    case Kind::product: {
      RatExpr acc(1);
      for (const auto& k : children()) acc *= k.to_ratexpr();
      return acc;
    }
    case Kind::quotient:
      return children()[0].to_ratexpr() / children()[1].to_ratexpr();
  }
  return RatExpr(0);
}

std::string PosExpr::to_string() const {
  switch (kind()) {
    case Kind::var:
      return var().name();
    case Kind::constant:
      return constant_value().get_str();
    case Kind::quotient:
      return "(" + children()[0].to_string() + ")/(" + children()[1].to_string() + ")";
    case Kind::sum:
    case Kind::product: {
      std::string out = "(";
      const char* sep = kind() == Kind::sum ? "+" : "*";
      for (std::size_t k = 0; k < children().size(); ++k) {
        if (k) out += sep;
        out += children()[k].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace gcrys::trop
