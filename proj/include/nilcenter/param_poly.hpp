#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nilcenter {

/// Power product of named parameters, sorted by name, exponents > 0.
using ParamMonomial = std::vector<std::pair<std::string, int>>;

int total_degree(const ParamMonomial& m);
ParamMonomial multiply(const ParamMonomial& a, const ParamMonomial& b);
/// a / b when b divides a.
std::optional<ParamMonomial> divide(const ParamMonomial& a, const ParamMonomial& b);
ParamMonomial monomial_gcd(const ParamMonomial& a, const ParamMonomial& b);

/// Graded lexicographic order on parameter monomials; names earlier in the
/// alphabet rank as larger variables.
struct ParamMonomialLess {
  bool operator()(const ParamMonomial& a, const ParamMonomial& b) const;
};

/// Sparse multivariate polynomial over Q in parameter symbols.
class ParamPoly {
 public:
  using Terms = std::map<ParamMonomial, mpq_class, ParamMonomialLess>;

  ParamPoly() = default;
  explicit ParamPoly(const mpq_class& c);
  static ParamPoly symbol(const std::string& name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; only meaningful when is_constant().
  mpq_class constant_value() const;
  int degree() const;
  std::set<std::string> symbols() const;

  /// Leading term under ParamMonomialLess.
  const std::pair<const ParamMonomial, mpq_class>& leading() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly scaled(const mpq_class& c) const;
  ParamPoly times_monomial(const ParamMonomial& m, const mpq_class& c) const;
  ParamPoly pow(unsigned e) const;

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  /// Exact quotient a/b, or nullopt when b does not divide a.
  static std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b);

  /// gcd of all monomials (largest common power product).
  ParamMonomial monomial_content() const;
  /// Positive rational c such that this/c has coprime integer coefficients.
  mpq_class rational_content() const;

  /// Replace some symbols by rationals; remaining symbols stay.
  ParamPoly evaluate(const std::map<std::string, mpq_class>& values) const;
  double to_double(const std::map<std::string, double>& values) const;

  std::string to_string() const;

 private:
  void add_term(const ParamMonomial& m, const mpq_class& c);
  Terms terms_;
};

std::string rational_to_string(const mpq_class& q);

}  // namespace nilcenter
