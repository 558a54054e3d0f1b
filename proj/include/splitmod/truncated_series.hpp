#pragma once

#include <string>
#include <vector>

#include "splitmod/rational_function.hpp"

namespace splitmod {

struct SeriesContext {
  const GaloisField* field{nullptr};
  int precision{4};  // N: arithmetic modulo var^N
  Var var{Var::u};
  friend bool operator==(const SeriesContext&, const SeriesContext&) = default;
};

// Element of F_q[var]/(var^N). Units are exactly the elements with c_0 != 0.
class TruncatedSeries {
 public:
  using Context = SeriesContext;
  using Code = GaloisField::Code;
  static constexpr bool is_field = false;

  TruncatedSeries() = default;
  explicit TruncatedSeries(Context ctx);
  TruncatedSeries(Context ctx, std::vector<Code> coeffs);

  static TruncatedSeries zero(Context c) { return TruncatedSeries(c); }
  static TruncatedSeries one(Context c) { return from_int(c, 1); }
  static TruncatedSeries from_int(Context c, long long v);
  static TruncatedSeries constant(Context c, Fq v);
  // c * var^k, zero when k >= N.
  static TruncatedSeries monomial(Context c, Fq coef, int k);
  static TruncatedSeries variable(Context c) { return monomial(c, Fq::one(c.field), 1); }
  // Reduction of a u-integral rational function; throws NotLocalizable otherwise.
  static TruncatedSeries from_rational(Context c, const RationalFunction& f);

  Context context() const noexcept { return ctx_; }
  Fq coeff(int i) const;

  bool is_zero() const noexcept;
  bool is_unit() const noexcept { return !c_.empty() && c_[0] != 0; }
  TruncatedSeries inverse() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }
  TruncatedSeries& operator-=(const TruncatedSeries& b) { return *this = *this - b; }
  TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  int valuation() const noexcept;
  TruncatedSeries sigma() const;

  std::string to_string() const;

 private:
  Context ctx_{};
  std::vector<Code> c_;
};

// Dual numbers a + b*eps with eps^2 = 0.
class DualNumber {
 public:
  using Context = const GaloisField*;
  using Code = GaloisField::Code;
  static constexpr bool is_field = false;

  DualNumber() = default;
  DualNumber(Context f, Code a, Code b) : f_(f), a_(a), b_(b) {}
  DualNumber(Fq a, Fq b) : f_(a.context()), a_(a.code()), b_(b.code()) {}

  static DualNumber zero(Context f) { return {f, 0, 0}; }
  static DualNumber one(Context f) { return {f, 1, 0}; }
  static DualNumber from_int(Context f, long long v) { return {f, f->from_int(v), 0}; }
  static DualNumber eps(Context f) { return {f, 0, 1}; }

  Context context() const noexcept { return f_; }
  Fq real() const { return {f_, a_}; }
  Fq dual() const { return {f_, b_}; }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
  bool is_unit() const noexcept { return a_ != 0; }
  bool is_nilpotent() const noexcept { return a_ == 0; }
  DualNumber inverse() const;

  friend DualNumber operator+(DualNumber x, DualNumber y) {
    return {x.f_, x.f_->add(x.a_, y.a_), x.f_->add(x.b_, y.b_)};
  }
  friend DualNumber operator-(DualNumber x, DualNumber y) {
    return {x.f_, x.f_->sub(x.a_, y.a_), x.f_->sub(x.b_, y.b_)};
  }
  friend DualNumber operator*(DualNumber x, DualNumber y) {
    const auto* f = x.f_;
    return {f, f->mul(x.a_, y.a_), f->add(f->mul(x.a_, y.b_), f->mul(x.b_, y.a_))};
  }
  DualNumber operator-() const { return {f_, f_->neg(a_), f_->neg(b_)}; }
  DualNumber& operator+=(DualNumber y) { return *this = *this + y; }
  DualNumber& operator-=(DualNumber y) { return *this = *this - y; }
  DualNumber& operator*=(DualNumber y) { return *this = *this * y; }
  friend bool operator==(DualNumber x, DualNumber y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

 private:
  Context f_{nullptr};
  Code a_{0};
  Code b_{0};
};

}  // namespace splitmod
