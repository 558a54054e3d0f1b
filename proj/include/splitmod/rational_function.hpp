#pragma once

#include <string>

#include "splitmod/polynomial.hpp"

namespace splitmod {

// Name of the transcendental variable; only affects printing.
enum class Var { u, pi, eps };
const char* var_name(Var v);

struct RatContext {
  const GaloisField* field{nullptr};
  Var var{Var::u};
  friend bool operator==(const RatContext&, const RatContext&) = default;
};

// Element of F_q(u) in canonical form: gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  using Context = RatContext;
  static constexpr bool is_field = true;

  RationalFunction() = default;
  RationalFunction(Context ctx, UPoly num);
  // Throws NotInvertible when den = 0.
  RationalFunction(Context ctx, UPoly num, UPoly den);

  static RationalFunction zero(Context c) { return {c, UPoly::zero(c.field)}; }
  static RationalFunction one(Context c) { return {c, UPoly::one(c.field)}; }
  static RationalFunction from_int(Context c, long long v) { return {c, UPoly::from_int(c.field, v)}; }
  static RationalFunction constant(Context c, Fq v) { return {c, UPoly::constant(v)}; }
  // c * var^k for any integer k.
  static RationalFunction monomial(Context c, Fq coef, int k);
  static RationalFunction variable(Context c) { return monomial(c, Fq::one(c.field), 1); }

  Context context() const noexcept { return ctx_; }
  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_unit() const noexcept { return !is_zero(); }
  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
  RationalFunction operator-() const { return {ctx_, -num_, den_, Canonical{}}; }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Order of vanishing at var = 0; kInfiniteValuation for zero.
  int valuation() const noexcept;
  // var -> -var.
  RationalFunction sigma() const;
  // Multiply by var^k.
  RationalFunction shifted(int k) const;
  // True when den is a power of var, i.e. a Laurent polynomial.
  bool is_laurent() const noexcept;
  // True when the element lies in the local ring at var = 0.
  bool is_integral() const noexcept { return valuation() >= 0; }
  // Value at var = x; throws NotInvertible when the denominator vanishes there.
  Fq eval(Fq x) const;
  // Value at a point of an extension field; coefficients must lie in the prime subfield.
  Fq eval_in(const GaloisField& ext, Fq x) const;

  std::string to_string() const;

 private:
  struct Canonical {};
  RationalFunction(Context ctx, UPoly num, UPoly den, Canonical) : ctx_(ctx), num_(std::move(num)), den_(std::move(den)) {}

  Context ctx_{};
  UPoly num_;
  UPoly den_;
};

// Shorthands for the common contexts.
inline RatContext rat_context(unsigned q, Var v = Var::u) { return {&GaloisField::get(q), v}; }

}  // namespace splitmod
