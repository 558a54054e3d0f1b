#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "splitmod/galois_field.hpp"

namespace splitmod {

// Sentinel valuation of the zero element.
inline constexpr int kInfiniteValuation = INT_MAX;

// Dense univariate polynomial over F_q, low degree first, no trailing zeros.
class UPoly {
 public:
  using Context = const GaloisField*;
  using Code = GaloisField::Code;
  static constexpr bool is_field = false;

  UPoly() = default;
  explicit UPoly(Context f) : f_(f) {}
  UPoly(Context f, std::vector<Code> coeffs);

  static UPoly zero(Context f) { return UPoly(f); }
  static UPoly one(Context f) { return constant(Fq::one(f)); }
  static UPoly from_int(Context f, long long v) { return constant(Fq::from_int(f, v)); }
  static UPoly constant(Fq c);
  static UPoly monomial(Fq c, int degree);
  static UPoly variable(Context f) { return monomial(Fq::one(f), 1); }

  Context context() const noexcept { return f_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Fq coeff(int i) const;
  Fq lead() const { return coeff(degree()); }
  const std::vector<Code>& codes() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  // Units of F_q[u] are the nonzero constants.
  bool is_unit() const noexcept { return c_.size() == 1; }
  UPoly inverse() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
  UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
  UPoly& operator*=(const UPoly& b) { return *this = *this * b; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly scaled(Fq c) const;
  UPoly monic() const;
  // Multiply by u^k (k >= 0), or divide by u^{-k} dropping low terms.
  UPoly shifted(int k) const;
  // Euclidean division; throws NotInvertible when b = 0.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);
  UPoly derivative() const;
  Fq eval(Fq x) const;
  // Lowest exponent with nonzero coefficient.
  int valuation() const noexcept;
  // u -> -u.
  UPoly sigma() const;
  // Reinterpret coefficients (all in the prime subfield) over another field of
  // the same characteristic.
  UPoly embed(Context other) const;

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();

  Context f_{nullptr};
  std::vector<Code> c_;
};

}  // namespace splitmod
