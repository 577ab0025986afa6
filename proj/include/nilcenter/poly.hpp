#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nilcenter/coef.hpp"
#include "nilcenter/errors.hpp"

namespace nilcenter {

template <std::size_t N>
using Exponent = std::array<int, N>;

template <std::size_t N>
int degree_of(const Exponent<N>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded lexicographic order with x > y > z.
template <std::size_t N>
struct GrlexLess {
  bool operator()(const Exponent<N>& a, const Exponent<N>& b) const {
    const int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return a < b;
  }
};

inline const char* variable_name(std::size_t N, std::size_t i) {
  static const char* names[] = {"x", "y", "z"};
  (void)N;
  return names[i];
}

/// Sparse polynomial in N variables with exact coefficients; no stored zeros.
template <std::size_t N>
class Poly {
 public:
  using Exp = Exponent<N>;
  using Terms = std::map<Exp, Coef, GrlexLess<N>>;

  Poly() = default;
  explicit Poly(const Coef& c) { add_term(Exp{}, c); }

  static Poly monomial(const Exp& e, const Coef& c = Coef(1)) {
    Poly p;
    p.add_term(e, c);
    return p;
  }
  static Poly variable(std::size_t i) {
    Exp e{};
    e[i] = 1;
    return monomial(e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : degree_of(terms_.rbegin()->first); }
  int low_degree() const { return terms_.empty() ? INT_MAX : degree_of(terms_.begin()->first); }

  Coef coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef() : it->second;
  }

  void add_term(const Exp& e, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void set_term(const Exp& e, const Coef& c) {
    if (c.is_zero())
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  Poly operator-() const {
    Poly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly scaled(const Coef& k) const {
    Poly out;
    if (k.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * k);
    return out;
  }

  /// Product keeping only terms of total degree <= max_degree.
  static Poly multiply(const Poly& a, const Poly& b, int max_degree = INT_MAX) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_) {
      const int da = degree_of(ea);
      if (da > max_degree) break;
      for (const auto& [eb, cb] : b.terms_) {
        if (da + degree_of(eb) > max_degree) break;
        Exp e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

  Poly times_monomial(const Exp& m, const Coef& k = Coef(1)) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      Exp s;
      for (std::size_t i = 0; i < N; ++i) s[i] = e[i] + m[i];
      out.add_term(s, c * k);
    }
    return out;
  }

  Poly partial(std::size_t var) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exp d = e;
      --d[var];
      out.add_term(d, c * Coef(e[var]));
    }
    return out;
  }

  Poly homogeneous_part(int deg) const {
    Poly out;
    for (const auto& [e, c] : terms_)
      if (degree_of(e) == deg) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
  }
  Poly truncated(int max_degree) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      if (degree_of(e) > max_degree) break;
      out.terms_.emplace_hint(out.terms_.end(), e, c);
    }
    return out;
  }
  bool is_homogeneous(int deg) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return degree_of(t.first) == deg; });
  }

  template <typename F>
  Poly map_coefficients(F&& f) const {
    Poly out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// True when no monomial involves variable var.
  bool free_of(std::size_t var) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] == 0; });
  }

  std::set<std::string> symbols() const {
    std::set<std::string> out;
    for (const auto& [e, c] : terms_) {
      auto s = c.symbols();
      out.insert(s.begin(), s.end());
    }
    return out;
  }
  bool is_rational() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
  }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
      if (e != it->first || c != it->second) return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  static std::string monomial_string(const Exp& e) {
    std::string s;
    for (std::size_t i = 0; i < N; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += variable_name(N, i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  /// Parseable rendering, highest grlex term first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const std::string mono = monomial_string(e);
      if (c.is_rational()) {
        const mpq_class& q = c.rational_value();
        mpq_class mag = abs(q);
        os << (first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + "));
        if (mono.empty())
          os << mag.get_str();
        else if (mag == 1)
          os << mono;
        else
          os << mag.get_str() << "*" << mono;
      } else {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        if (!mono.empty()) os << "*" << mono;
      }
      first = false;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using Poly1 = Poly<1>;
using Poly2 = Poly<2>;
using Poly3 = Poly<3>;

/// Order marker for series that are exact polynomials.
inline constexpr int kExact = 1 << 20;

/// Truncated power series: poly is known modulo terms of total degree > order.
template <std::size_t N>
class Jet {
 public:
  using Exp = Exponent<N>;

  Jet() : order_(kExact) {}
  Jet(Poly<N> p, int order) : poly_(std::move(p)), order_(order) {
    if (order_ < kExact) poly_ = poly_.truncated(order_);
  }
  static Jet exact(Poly<N> p) { return Jet(std::move(p), kExact); }

  const Poly<N>& poly() const { return poly_; }
  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }

  Jet with_order(int order) const {
    if (order > order_) throw OrderError("cannot raise jet order from " + std::to_string(order_) + " to " + std::to_string(order));
    return Jet(poly_, order);
  }

  friend Jet operator+(const Jet& a, const Jet& b) { return Jet(a.poly_ + b.poly_, std::min(a.order_, b.order_)); }
  friend Jet operator-(const Jet& a, const Jet& b) { return Jet(a.poly_ - b.poly_, std::min(a.order_, b.order_)); }
  Jet operator-() const { return Jet(-poly_, order_); }
  friend Jet operator*(const Jet& a, const Jet& b) {
    const int ord = std::min(a.order_, b.order_);
    return Jet(Poly<N>::multiply(a.poly_, b.poly_, ord), ord);
  }
  Jet scaled(const Coef& k) const { return Jet(poly_.scaled(k), order_); }
  Jet partial(std::size_t var) const { return Jet(poly_.partial(var), is_exact() ? kExact : order_ - 1); }

  bool operator==(const Jet& o) const { return order_ == o.order_ && poly_ == o.poly_; }

 private:
  Poly<N> poly_;
  int order_;
};

using Jet1 = Jet<1>;
using Jet2 = Jet<2>;
using Jet3 = Jet<3>;

}  // namespace nilcenter
