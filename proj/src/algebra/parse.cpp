#include <cctype>
#include <stdexcept>

#include "gcrys/algebra/ratexpr.hpp"

namespace gcrys::alg {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatExpr run() {
    RatExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + what + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatExpr expr() {
    RatExpr acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RatExpr term() {
    RatExpr acc = unary();
    for (;;) {
      if (eat('*'))
        acc = acc * unary();
      else if (eat('/'))
        acc = acc / unary();
      else
        return acc;
    }
  }

  RatExpr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatExpr power() {
    RatExpr base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return base.pow(neg ? -k : k);
    }
    return base;
  }

  RatExpr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatExpr(Scalar(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      int depth = 0;
      while (pos_ < s_.size()) {
        char d = s_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
        } else if (d == '{') {
          ++depth;
        } else if (d == '}' && depth > 0) {
          --depth;
        } else if (d == ',' && depth > 0) {
        } else {
          break;
        }
        ++pos_;
      }
      return RatExpr::variable(s_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatExpr RatExpr::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace gcrys::alg
