#include "nilcenter/param_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nilcenter/errors.hpp"

namespace nilcenter {

int total_degree(const ParamMonomial& m) {
  int d = 0;
  for (const auto& [name, e] : m) d += e;
  return d;
}

ParamMonomial multiply(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<ParamMonomial> divide(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  std::size_t i = 0;
  for (const auto& [name, e] : b) {
    while (i < a.size() && a[i].first < name) out.push_back(a[i++]);
    if (i == a.size() || a[i].first != name || a[i].second < e) return std::nullopt;
    if (a[i].second > e) out.emplace_back(name, a[i].second - e);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return out;
}

ParamMonomial monomial_gcd(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      out.emplace_back(a[i].first, std::min(a[i].second, b[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

bool ParamMonomialLess::operator()(const ParamMonomial& a, const ParamMonomial& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first > b[i].first;
    if (a[i].second != b[i].second) return a[i].second < b[i].second;
  }
  return a.size() < b.size();
}

ParamPoly::ParamPoly(const mpq_class& c) {
  if (c != 0) terms_.emplace(ParamMonomial{}, c);
}

ParamPoly ParamPoly::symbol(const std::string& name) {
  ParamPoly p;
  p.terms_.emplace(ParamMonomial{{name, 1}}, mpq_class(1));
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpq_class ParamPoly::constant_value() const {
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int ParamPoly::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

std::set<std::string> ParamPoly::symbols() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) out.insert(name);
  return out;
}

const std::pair<const ParamMonomial, mpq_class>& ParamPoly::leading() const {
  if (terms_.empty()) throw InternalError("leading term of zero polynomial");
  return *terms_.rbegin();
}

void ParamPoly::add_term(const ParamMonomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

ParamPoly ParamPoly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  ParamPoly out = *this;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

ParamPoly ParamPoly::times_monomial(const ParamMonomial& mono, const mpq_class& c) const {
  ParamPoly out;
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(multiply(m, mono), v * c);
  return out;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(mpq_class(1));
  ParamPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw InternalError("division by zero polynomial");
  if (a.is_zero()) return ParamPoly{};
  if (b.degree() > a.degree()) return std::nullopt;
  const auto& [lm, lc] = b.leading();
  ParamPoly rem = a;
  ParamPoly quot;
  // Single-divisor division: b | a iff every leading term stays divisible.
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    auto q = divide(rm, lm);
    if (!q) return std::nullopt;
    const mpq_class qc = rc / lc;
    quot.add_term(*q, qc);
    rem -= b.times_monomial(*q, qc);
  }
  return quot;
}

ParamMonomial ParamPoly::monomial_content() const {
  if (terms_.empty()) return {};
  auto it = terms_.begin();
  ParamMonomial g = it->first;
  for (++it; it != terms_.end() && !g.empty(); ++it) g = monomial_gcd(g, it->first);
  return g;
}

mpq_class ParamPoly::rational_content() const {
  if (terms_.empty()) return 1;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_class n = abs(c.get_num());
    num_gcd = gcd(num_gcd, n);
    den_lcm = lcm(den_lcm, c.get_den());
  }
  mpq_class out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

ParamPoly ParamPoly::evaluate(const std::map<std::string, mpq_class>& values) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    ParamMonomial rest;
    mpq_class coef = c;
    for (const auto& [name, e] : m) {
      auto it = values.find(name);
      if (it == values.end()) {
        rest.emplace_back(name, e);
      } else {
        mpq_class p = 1;
        for (int i = 0; i < e; ++i) p *= it->second;
        coef *= p;
      }
    }
    out.add_term(rest, coef);
  }
  return out;
}

double ParamPoly::to_double(const std::map<std::string, double>& values) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (const auto& [name, e] : m) {
      auto it = values.find(name);
      if (it == values.end()) throw PreconditionError("no numeric value for parameter '" + name + "'");
      t *= std::pow(it->second, e);
    }
    s += t;
  }
  return s;
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_str();
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.empty()) {
      os << mag.get_str();
      wrote = true;
    }
    for (const auto& [name, e] : m) {
      if (wrote) os << "*";
      os << name;
      if (e != 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace nilcenter
