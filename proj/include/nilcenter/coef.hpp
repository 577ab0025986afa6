#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "nilcenter/param_poly.hpp"

namespace nilcenter {

/// Exact element of Q(params): a rational fast path, or a fraction of
/// parameter polynomials. Values are immutable and cheap to copy.
class Coef {
 public:
  Coef() = default;
  Coef(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Coef(const mpq_class& v) : q_(v) { q_.canonicalize(); }  // NOLINT
  explicit Coef(const ParamPoly& p);
  /// num/den; throws PreconditionError when den is the zero polynomial.
  Coef(const ParamPoly& num, const ParamPoly& den);

  static Coef symbol(const std::string& name);
  static Coef rational(long num, long den);

  bool is_zero() const { return !r_ && q_ == 0; }
  bool is_one() const { return !r_ && q_ == 1; }
  /// True when free of parameter symbols.
  bool is_rational() const { return !r_; }
  const mpq_class& rational_value() const;
  ParamPoly numerator() const;
  ParamPoly denominator() const;
  std::set<std::string> symbols() const;

  Coef operator-() const;
  Coef& operator+=(const Coef& o);
  Coef& operator-=(const Coef& o);
  Coef& operator*=(const Coef& o);
  Coef& operator/=(const Coef& o);
  friend Coef operator+(Coef a, const Coef& b) { return a += b; }
  friend Coef operator-(Coef a, const Coef& b) { return a -= b; }
  friend Coef operator*(Coef a, const Coef& b) { return a *= b; }
  friend Coef operator/(Coef a, const Coef& b) { return a /= b; }
  Coef inverse() const;
  Coef pow(int e) const;

  /// Cross-multiplication equality: u/v == p/q iff u*q - p*v == 0.
  friend bool operator==(const Coef& a, const Coef& b);
  friend bool operator!=(const Coef& a, const Coef& b) { return !(a == b); }

  /// Sign of a rational value; nullopt for symbolic values.
  std::optional<int> sign() const;

  /// Replace parameters by rationals. Throws PreconditionError when the
  /// denominator vanishes at the given point.
  Coef evaluate(const std::map<std::string, mpq_class>& values) const;
  /// Replace parameters by arbitrary coefficients.
  Coef substitute(const std::map<std::string, Coef>& values) const;
  double to_double(const std::map<std::string, double>& values = {}) const;

  /// Parseable rendering, e.g. "-2/3*b011*b101" or "(c110*lambda - 2*c200)/(lambda^2)".
  std::string to_string() const;
  /// True when to_string() is a single signed product (safe without parentheses).
  bool is_atomic() const;

 private:
  struct Frac {
    ParamPoly num;
    ParamPoly den;
  };
  static Coef make(ParamPoly num, ParamPoly den);

  mpq_class q_{0};
  std::shared_ptr<const Frac> r_;
};

}  // namespace nilcenter
