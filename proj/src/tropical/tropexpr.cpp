#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "gcrys/tropical/tropical.hpp"

namespace gcrys::trop {

LinForm LinForm::operator+(const LinForm& o) const {
  LinForm r = *this;
  r.constant += o.constant;
  for (const auto& [v, c] : o.coef) {
    Int& slot = r.coef[v];
    slot += c;
    if (slot == 0) r.coef.erase(v);
  }
  return r;
}

LinForm LinForm::operator-() const {
  LinForm r;
  r.constant = -constant;
  for (const auto& [v, c] : coef) r.coef[v] = -c;
  return r;
}

LinForm LinForm::operator-(const LinForm& o) const { return *this + (-o); }

Int LinForm::eval(const std::unordered_map<Var, Int>& env) const {
  Int s = constant;
  for (const auto& [v, c] : coef) {
    auto it = env.find(v);
    if (it == env.end()) throw std::out_of_range("no value for " + v.name());
    s += c * it->second;
  }
  return s;
}

std::string LinForm::to_string() const {
  std::string out;
  for (const auto& [v, c] : coef) {
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    Int a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + "*";
    out += v.name();
  }
  if (constant != 0 || out.empty()) {
    if (constant >= 0 && !out.empty()) out += "+";
    out += std::to_string(constant);
  }
  return out;
}

namespace {

Int min_of(const std::set<LinForm>& s, const std::unordered_map<Var, Int>& env) {
  Int best = 0;
  bool first = true;
  for (const auto& l : s) {
    Int v = l.eval(env);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

std::set<LinForm> minkowski(const std::set<LinForm>& a, const std::set<LinForm>& b) {
  std::set<LinForm> r;
  for (const auto& x : a)
    for (const auto& y : b) r.insert(x + y);
  return r;
}

std::string min_string(const std::set<LinForm>& s) {
  if (s.size() == 1) return s.begin()->to_string();
  std::string out = "min(";
  bool first = true;
  for (const auto& l : s) {
    if (!first) out += ", ";
    out += l.to_string();
    first = false;
  }
  return out + ")";
}

TropNormal canonical(TropNormal t) {
  if (t.den.size() == 1) {
    LinForm d = *t.den.begin();
    std::set<LinForm> num;
    for (const auto& l : t.num) num.insert(l - d);
    t.num = std::move(num);
    t.den = {LinForm{}};
  }
  return t;
}

}  // namespace

Int TropNormal::eval(const std::unordered_map<Var, Int>& env) const { return min_of(num, env) - min_of(den, env); }

std::string TropNormal::to_string() const {
  std::string out = min_string(num);
  if (den.size() == 1 && den.begin()->coef.empty() && den.begin()->constant == 0) return out;
  std::string d = min_string(den);
  if (den.size() == 1 && den.begin()->coef.size() + (den.begin()->constant != 0) > 1) d = "(" + d + ")";
  return out + " - " + d;
}

struct TropExpr::Node {
  Kind kind;
  Var var;
  Int c = 0;
  std::vector<TropExpr> kids;
};

TropExpr TropExpr::variable(Var v) { return TropExpr(std::make_shared<Node>(Node{Kind::var, v, 0, {}})); }
TropExpr TropExpr::constant(Int c) { return TropExpr(std::make_shared<Node>(Node{Kind::constant, {}, c, {}})); }

TropExpr TropExpr::min(std::vector<TropExpr> args) {
  if (args.empty()) throw std::invalid_argument("min of nothing");
  if (args.size() == 1) return args[0];
  return TropExpr(std::make_shared<Node>(Node{Kind::min, {}, 0, std::move(args)}));
}

TropExpr TropExpr::add(std::vector<TropExpr> args) {
  if (args.empty()) return constant(0);
  if (args.size() == 1) return args[0];
  return TropExpr(std::make_shared<Node>(Node{Kind::add, {}, 0, std::move(args)}));
}

TropExpr TropExpr::sub(TropExpr a, TropExpr b) {
  return TropExpr(std::make_shared<Node>(Node{Kind::sub, {}, 0, {std::move(a), std::move(b)}}));
}

TropExpr::Kind TropExpr::kind() const { return node_->kind; }

Int TropExpr::eval(const std::unordered_map<Var, Int>& env) const {
  switch (kind()) {
    case Kind::var: {
      auto it = env.find(node_->var);
      if (it == env.end()) throw std::out_of_range("no value for " + node_->var.name());
      return it->second;
    }
    case Kind::constant:
      return node_->c;
    case Kind::min: {
      Int best = node_->kids[0].eval(env);
      for (std::size_t k = 1; k < node_->kids.size(); ++k) best = std::min(best, node_->kids[k].eval(env));
      return best;
    }
    case Kind::add: {
      Int s = 0;
      for (const auto& k : node_->kids) s += k.eval(env);
      return s;
    }
    case Kind::sub:
      return node_->kids[0].eval(env) - node_->kids[1].eval(env);
  }
  return 0;
}

TropExpr TropExpr::substitute(Var v, Int value) const {
  switch (kind()) {
    case Kind::var:
      return node_->var == v ? constant(value) : *this;
    case Kind::constant:
      return *this;
    default: {
      std::vector<TropExpr> kids;
      for (const auto& k : node_->kids) kids.push_back(k.substitute(v, value));
      return TropExpr(std::make_shared<Node>(Node{kind(), {}, 0, std::move(kids)}));
    }
  }
}

TropNormal TropExpr::normal_form() const {
  TropNormal r;
  switch (kind()) {
    case Kind::var: {
      LinForm l;
      l.coef[node_->var] = 1;
      r.num = {l};
      r.den = {LinForm{}};
      return r;
    }
    case Kind::constant: {
      LinForm l;
      l.constant = node_->c;
      r.num = {l};
      r.den = {LinForm{}};
      return r;
    }
    case Kind::min: {
      // min_k (n_k - d_k) = min_k (n_k + sum_{j != k} d_j) - sum_j d_j
      std::vector<TropNormal> parts;
      for (const auto& k : node_->kids) parts.push_back(k.normal_form());
      std::set<LinForm> den{LinForm{}};
      for (const auto& p : parts) den = minkowski(den, p.den);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        std::set<LinForm> term = parts[k].num;
        for (std::size_t j = 0; j < parts.size(); ++j)
          if (j != k) term = minkowski(term, parts[j].den);
        r.num.insert(term.begin(), term.end());
      }
      r.den = std::move(den);
      return canonical(r);
    }
    case Kind::add: {
      r.num = {LinForm{}};
      r.den = {LinForm{}};
      for (const auto& k : node_->kids) {
        TropNormal p = k.normal_form();
        r.num = minkowski(r.num, p.num);
        r.den = minkowski(r.den, p.den);
      }
      return canonical(r);
    }
    case Kind::sub: {
      TropNormal a = node_->kids[0].normal_form(), b = node_->kids[1].normal_form();
      r.num = minkowski(a.num, b.den);
      r.den = minkowski(a.den, b.num);
      return canonical(r);
    }
  }
  return r;
}

std::string TropExpr::to_string() const { return normal_form().to_string(); }

namespace {

class TropParser {
 public:
  explicit TropParser(const std::string& s) : s_(s) {}

  TropExpr run() {
    TropExpr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("TropExpr parse error at " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  TropExpr expr() {
    std::vector<TropExpr> terms;
    bool neg = eat('-');
    for (;;) {
      TropExpr t = term();
      terms.push_back(neg ? TropExpr::sub(TropExpr::constant(0), t) : t);
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
    }
    return TropExpr::add(std::move(terms));
  }
  // [integer ['*']] atom, or a bare integer
  TropExpr term() {
    skip();
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::size_t j = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      Int k = std::stoll(s_.substr(j, i_ - j));
      bool star = eat('*');
      skip();
      if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(')) {
        TropExpr a = atom();
        return TropExpr::add(std::vector<TropExpr>(static_cast<std::size_t>(k), a));
      }
      if (star) fail("expected factor after '*'");
      return TropExpr::constant(k);
    }
    return atom();
  }
  TropExpr atom() {
    skip();
    if (eat('(')) {
      TropExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    std::size_t j = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      char d = s_[i_];
      if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || (d == '{' && ++depth) || (d == '}' && depth-- > 0) ||
          (d == ',' && depth > 0))
        ++i_;
      else
        break;
    }
    if (j == i_) fail("expected a term");
    std::string name = s_.substr(j, i_ - j);
    if (name == "min" && peek('(')) {
      eat('(');
      std::vector<TropExpr> args{expr()};
      while (eat(',')) args.push_back(expr());
      if (!eat(')')) fail("expected ')'");
      return TropExpr::min(std::move(args));
    }
    return TropExpr::variable(Var::intern(name));
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

TropExpr TropExpr::parse(const std::string& text) { return TropParser(text).run(); }

Var trop_var(Var v) {
  std::string s = v.name();
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return Var::intern(s);
}

TropExpr tropicalize(const PosExpr& e) {
  using K = PosExpr::Kind;
  switch (e.kind()) {
    case K::var:
      return TropExpr::variable(trop_var(e.var()));
    case K::constant:
      return TropExpr::constant(0);
    case K::sum:
    case K::product: {
      std::vector<TropExpr> kids;
      for (const auto& k : e.children()) kids.push_back(tropicalize(k));
      return e.kind() == K::sum ? TropExpr::min(std::move(kids)) : TropExpr::add(std::move(kids));
    }
    case K::quotient:
      return TropExpr::sub(tropicalize(e.children()[0]), tropicalize(e.children()[1]));
  }
  return TropExpr::constant(0);
}

TropExpr tropicalize(const RatExpr& e) { return tropicalize(PosExpr::from_ratexpr(e)); }

}  // namespace gcrys::trop
