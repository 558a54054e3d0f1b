#include "splitmod/truncated_series.hpp"

namespace splitmod {

TruncatedSeries::TruncatedSeries(Context ctx) : ctx_(ctx), c_(static_cast<std::size_t>(ctx.precision), 0) {
  if (ctx.precision < 1) throw Error(ErrorKind::BadParameters, "truncation precision must be positive");
}

TruncatedSeries::TruncatedSeries(Context ctx, std::vector<Code> coeffs) : TruncatedSeries(ctx) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

TruncatedSeries TruncatedSeries::from_int(Context c, long long v) {
  return TruncatedSeries(c, {c.field->from_int(v)});
}

TruncatedSeries TruncatedSeries::constant(Context c, Fq v) { return TruncatedSeries(c, {v.code()}); }

TruncatedSeries TruncatedSeries::monomial(Context c, Fq coef, int k) {
  TruncatedSeries r(c);
  if (k >= 0 && k < c.precision) r.c_[k] = coef.code();
  return r;
}

TruncatedSeries TruncatedSeries::from_rational(Context c, const RationalFunction& f) {
  if (f.valuation() < 0) throw Error(ErrorKind::NotLocalizable, "element has a pole at 0: " + f.to_string());
  TruncatedSeries num(c, f.num().codes());
  TruncatedSeries den(c, f.den().codes());
  return num * den.inverse();
}

Fq TruncatedSeries::coeff(int i) const {
  if (i < 0 || i >= ctx_.precision) return Fq::zero(ctx_.field);
  return {ctx_.field, c_[i]};
}

bool TruncatedSeries::is_zero() const noexcept {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NotInvertible, "non-unit " + to_string() + " in truncated series ring");
  const auto* f = ctx_.field;
  const int n = ctx_.precision;
  TruncatedSeries r(ctx_);
  const Code inv0 = f->inv(c_[0]);
  r.c_[0] = inv0;
  for (int k = 1; k < n; ++k) {
    Code acc = 0;
    for (int j = 1; j <= k; ++j) acc = f->add(acc, f->mul(c_[j], r.c_[k - j]));
    r.c_[k] = f->neg(f->mul(acc, inv0));
  }
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.ctx_.field->add(a.c_[i], b.c_[i]);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.ctx_.field->sub(a.c_[i], b.c_[i]);
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& x : r.c_) x = ctx_.field->neg(x);
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const auto* f = a.ctx_.field;
  const std::size_t n = a.c_.size();
  TruncatedSeries r(a.ctx_);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] = f->add(r.c_[i + j], f->mul(a.c_[i], b.c_[j]));
  }
  return r;
}

int TruncatedSeries::valuation() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return kInfiniteValuation;
}

TruncatedSeries TruncatedSeries::sigma() const {
  TruncatedSeries r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = ctx_.field->neg(r.c_[i]);
  return r;
}

std::string TruncatedSeries::to_string() const {
  UPoly p(ctx_.field, c_);
  return p.to_string(var_name(ctx_.var)) + " + O(" + var_name(ctx_.var) + "^" + std::to_string(ctx_.precision) + ")";
}

DualNumber DualNumber::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NotInvertible, "nilpotent dual number");
  Code ai = f_->inv(a_);
  // (a + b eps)^{-1} = a^{-1} - b a^{-2} eps
  return {f_, ai, f_->neg(f_->mul(b_, f_->mul(ai, ai)))};
}

std::string DualNumber::to_string() const {
  UPoly p(f_, {a_, b_});
  return p.to_string("eps");
}

}  // namespace splitmod
