#include "splitmod/rational_function.hpp"

namespace splitmod {

const char* var_name(Var v) {
  switch (v) {
    case Var::u: return "u";
    case Var::pi: return "pi";
    case Var::eps: return "eps";
  }
  return "?";
}

RationalFunction::RationalFunction(Context ctx, UPoly num)
    : ctx_(ctx), num_(std::move(num)), den_(UPoly::one(ctx.field)) {}

RationalFunction::RationalFunction(Context ctx, UPoly num, UPoly den) : ctx_(ctx) {
  if (den.is_zero()) throw Error(ErrorKind::NotInvertible, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UPoly::zero(ctx.field);
    den_ = UPoly::one(ctx.field);
    return;
  }
  UPoly g = UPoly::gcd(num, den);
  if (!g.is_one()) {
    num = UPoly::divmod(num, g).first;
    den = UPoly::divmod(den, g).first;
  }
  Fq lc = den.lead();
  if (!lc.is_one()) {
    Fq inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::monomial(Context c, Fq coef, int k) {
  if (k >= 0) return {c, UPoly::monomial(coef, k)};
  return {c, UPoly::constant(coef), UPoly::monomial(Fq::one(c.field), -k), Canonical{}};
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NotInvertible, "zero rational function");
  return {ctx_, den_, num_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.ctx_, a.num_ + b.num_, a.den_};
  return {a.ctx_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  // cross-cancel first to keep degrees small
  UPoly g1 = UPoly::gcd(a.num_, b.den_);
  UPoly g2 = UPoly::gcd(b.num_, a.den_);
  UPoly n1 = UPoly::divmod(a.num_, g1).first, d2 = UPoly::divmod(b.den_, g1).first;
  UPoly n2 = UPoly::divmod(b.num_, g2).first, d1 = UPoly::divmod(a.den_, g2).first;
  UPoly num = n1 * n2;
  UPoly den = d1 * d2;
  Fq lc = den.lead();
  if (!lc.is_one()) {
    num = num.scaled(lc.inverse());
    den = den.scaled(lc.inverse());
  }
  return {a.ctx_, std::move(num), std::move(den), RationalFunction::Canonical{}};
}

int RationalFunction::valuation() const noexcept {
  if (is_zero()) return kInfiniteValuation;
  return num_.valuation() - den_.valuation();
}

RationalFunction RationalFunction::sigma() const { return {ctx_, num_.sigma(), den_.sigma()}; }

RationalFunction RationalFunction::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) return {ctx_, num_.shifted(k), den_};
  return {ctx_, num_, den_.shifted(-k)};
}

bool RationalFunction::is_laurent() const noexcept {
  const auto& c = den_.codes();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

Fq RationalFunction::eval(Fq x) const {
  Fq d = den_.eval(x);
  if (d.is_zero()) throw Error(ErrorKind::NotInvertible, "denominator vanishes at evaluation point");
  return num_.eval(x) / d;
}

Fq RationalFunction::eval_in(const GaloisField& ext, Fq x) const {
  UPoly n = num_.embed(&ext), d = den_.embed(&ext);
  Fq dv = d.eval(x);
  if (dv.is_zero()) throw Error(ErrorKind::NotInvertible, "denominator vanishes at evaluation point");
  return n.eval(x) / dv;
}

std::string RationalFunction::to_string() const {
  const std::string v = var_name(ctx_.var);
  if (den_.is_one()) return num_.to_string(v);
  if (is_laurent()) {
    // Laurent polynomial: print terms with signed exponents
    const int shift = den_.degree();
    const auto* f = ctx_.field;
    std::string out;
    const auto& c = num_.codes();
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      int e = static_cast<int>(i) - shift;
      bool neg = c[i] != 1 && c[i] < f->characteristic() && f->neg(c[i]) == 1;
      std::string coef = neg ? "1" : f->format(c[i]);
      if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
      std::string term;
      if (e == 0) {
        term = coef;
      } else {
        term = coef == "1" ? "" : coef + "*";
        term += v;
        if (e != 1) term += "^" + std::to_string(e);
      }
      if (out.empty()) out = neg ? "-" + term : term;
      else out += (neg ? " - " : " + ") + term;
    }
    return out;
  }
  return "(" + num_.to_string(v) + ")/(" + den_.to_string(v) + ")";
}

}  // namespace splitmod
