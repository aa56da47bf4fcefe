#pragma once

#include <doctest.h>

#include "gcrys/algebra.hpp"

namespace doctest {
template <>
struct StringMaker<gcrys::alg::RatExpr> {
  static String convert(const gcrys::alg::RatExpr& r) { return r.to_string().c_str(); }
};
template <>
struct StringMaker<gcrys::alg::MPoly> {
  static String convert(const gcrys::alg::MPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<gcrys::alg::SqMatrix> {
  static String convert(const gcrys::alg::SqMatrix& m) { return m.to_string().c_str(); }
};
}  // namespace doctest
