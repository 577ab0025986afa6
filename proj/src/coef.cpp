#include "nilcenter/coef.hpp"

#include "nilcenter/errors.hpp"

namespace nilcenter {

namespace {

ParamPoly divide_by_monomial(const ParamPoly& p, const ParamMonomial& m) {
  if (m.empty()) return p;
  ParamPoly out;
  for (const auto& [mono, c] : p.terms()) out += ParamPoly(c).times_monomial(*divide(mono, m), 1);
  return out;
}

}  // namespace

Coef::Coef(const ParamPoly& p) : Coef(make(p, ParamPoly(mpq_class(1)))) {}

Coef::Coef(const ParamPoly& num, const ParamPoly& den) {
  if (den.is_zero()) throw PreconditionError("zero denominator in coefficient");
  *this = make(num, den);
}

Coef Coef::symbol(const std::string& name) { return Coef(ParamPoly::symbol(name)); }

Coef Coef::rational(long num, long den) { return Coef(mpq_class(num, den)); }

Coef Coef::make(ParamPoly num, ParamPoly den) {
  Coef out;
  if (num.is_zero()) return out;
  if (den.is_constant()) {
    num = num.scaled(1 / den.constant_value());
    den = ParamPoly(mpq_class(1));
  } else {
    ParamMonomial g = monomial_gcd(num.monomial_content(), den.monomial_content());
    num = divide_by_monomial(num, g);
    den = divide_by_monomial(den, g);
    mpq_class c = den.rational_content();
    if (den.leading().second < 0) c = -c;
    num = num.scaled(1 / c);
    den = den.scaled(1 / c);
    if (!den.is_constant()) {
      if (auto q = ParamPoly::divide_exact(num, den)) {
        num = std::move(*q);
        den = ParamPoly(mpq_class(1));
      } else if (num.degree() <= den.degree()) {
        if (auto r = ParamPoly::divide_exact(den, num)) {
          den = std::move(*r);
          num = ParamPoly(mpq_class(1));
          mpq_class c2 = den.rational_content();
          if (den.leading().second < 0) c2 = -c2;
          num = num.scaled(1 / c2);
          den = den.scaled(1 / c2);
        }
      }
    }
  }
  if (num.is_constant() && den.is_constant()) {
    out.q_ = num.constant_value() / den.constant_value();
    return out;
  }
  out.r_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
  return out;
}

const mpq_class& Coef::rational_value() const {
  if (r_) throw PreconditionError("coefficient " + to_string() + " is not a rational number");
  return q_;
}

ParamPoly Coef::numerator() const { return r_ ? r_->num : ParamPoly(q_); }

ParamPoly Coef::denominator() const { return r_ ? r_->den : ParamPoly(mpq_class(1)); }

std::set<std::string> Coef::symbols() const {
  if (!r_) return {};
  auto s = r_->num.symbols();
  auto d = r_->den.symbols();
  s.insert(d.begin(), d.end());
  return s;
}

Coef Coef::operator-() const {
  if (!r_) return Coef(mpq_class(-q_));
  Coef out;
  out.r_ = std::make_shared<const Frac>(Frac{-r_->num, r_->den});
  return out;
}

Coef& Coef::operator+=(const Coef& o) {
  if (!r_ && !o.r_) {
    q_ += o.q_;
    return *this;
  }
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const ParamPoly an = numerator(), ad = denominator();
  const ParamPoly bn = o.numerator(), bd = o.denominator();
  if (ad == bd) return *this = make(an + bn, ad);
  if (bd.is_constant() || !ad.is_constant()) {
    if (auto q = ParamPoly::divide_exact(ad, bd)) return *this = make(an + bn * *q, ad);
  }
  if (auto q = ParamPoly::divide_exact(bd, ad)) return *this = make(an * *q + bn, bd);
  return *this = make(an * bd + bn * ad, ad * bd);
}

Coef& Coef::operator-=(const Coef& o) { return *this += -o; }

Coef& Coef::operator*=(const Coef& o) {
  if (!r_ && !o.r_) {
    q_ *= o.q_;
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = Coef();
  if (!o.r_) return *this = make(r_->num.scaled(o.q_), r_->den);
  if (!r_) return *this = make(o.r_->num.scaled(q_), o.r_->den);
  return *this = make(r_->num * o.r_->num, r_->den * o.r_->den);
}

Coef Coef::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero coefficient");
  if (!r_) return Coef(mpq_class(1 / q_));
  return make(r_->den, r_->num);
}

Coef& Coef::operator/=(const Coef& o) { return *this *= o.inverse(); }

Coef Coef::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Coef result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Coef& a, const Coef& b) {
  if (!a.r_ && !b.r_) return a.q_ == b.q_;
  if (!a.r_ || !b.r_) return false;  // normalized symbolic values are never constant
  if (a.r_->den == b.r_->den) return a.r_->num == b.r_->num;
  return a.r_->num * b.r_->den == b.r_->num * a.r_->den;
}

std::optional<int> Coef::sign() const {
  if (r_) return std::nullopt;
  return sgn(q_);
}

Coef Coef::evaluate(const std::map<std::string, mpq_class>& values) const {
  if (!r_) return *this;
  ParamPoly den = r_->den.evaluate(values);
  if (den.is_zero()) throw PreconditionError("denominator " + r_->den.to_string() + " vanishes at the given values");
  return make(r_->num.evaluate(values), den);
}

Coef Coef::substitute(const std::map<std::string, Coef>& values) const {
  if (!r_) return *this;
  auto eval_poly = [&](const ParamPoly& p) {
    Coef s;
    for (const auto& [m, c] : p.terms()) {
      Coef t(c);
      for (const auto& [name, e] : m) {
        auto it = values.find(name);
        t *= it == values.end() ? symbol(name).pow(e) : it->second.pow(e);
      }
      s += t;
    }
    return s;
  };
  Coef den = eval_poly(r_->den);
  if (den.is_zero()) throw PreconditionError("denominator " + r_->den.to_string() + " vanishes after substitution");
  return eval_poly(r_->num) / den;
}

double Coef::to_double(const std::map<std::string, double>& values) const {
  if (!r_) return q_.get_d();
  return r_->num.to_double(values) / r_->den.to_double(values);
}

bool Coef::is_atomic() const {
  if (!r_) return true;
  return r_->num.terms().size() == 1 && r_->den.terms().size() == 1;
}

std::string Coef::to_string() const {
  if (!r_) return rational_to_string(q_);
  const bool den_one = r_->den.is_constant();
  std::string num = r_->num.to_string();
  if (den_one) return num;
  std::string den = r_->den.to_string();
  if (r_->num.terms().size() > 1) num = "(" + num + ")";
  return num + "/(" + den + ")";
}

}  // namespace nilcenter
