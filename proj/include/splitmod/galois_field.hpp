#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "splitmod/errors.hpp"

namespace splitmod {

// Finite field F_q, q = p^k with p odd. Elements are coded 0..q-1 as base-p
// digit strings of polynomials modulo a fixed irreducible of degree k, so the
// prime subfield is exactly the codes 0..p-1.
class GaloisField {
 public:
  using Code = std::uint16_t;

  // Interned instance; references stay valid for the life of the process.
  static const GaloisField& get(unsigned q);

  unsigned order() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  bool is_prime() const noexcept { return k_ == 1; }

  Code add(Code a, Code b) const noexcept { return add_[a * q_ + b]; }
  Code sub(Code a, Code b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Code mul(Code a, Code b) const noexcept { return mul_[a * q_ + b]; }
  Code neg(Code a) const noexcept { return neg_[a]; }
  // Throws NotInvertible for 0.
  Code inv(Code a) const;
  Code from_int(long long v) const noexcept;
  Code pow(Code a, unsigned long long e) const noexcept;

  // Codes of the prime subfield are printed as integers; others as a
  // polynomial in the generator "a".
  std::string format(Code c) const;

 private:
  explicit GaloisField(unsigned q);

  unsigned q_{0};
  unsigned p_{0};
  unsigned k_{0};
  std::vector<Code> add_;
  std::vector<Code> mul_;
  std::vector<Code> neg_;
  std::vector<Code> inv_;
};

// Element of a GaloisField. A default-constructed value has no field and is
// only a placeholder to be assigned over.
class Fq {
 public:
  using Context = const GaloisField*;
  using Code = GaloisField::Code;
  static constexpr bool is_field = true;

  Fq() = default;
  Fq(Context field, Code code) : f_(field), v_(code) {}

  static Fq zero(Context f) { return {f, 0}; }
  static Fq one(Context f) { return {f, 1}; }
  static Fq from_int(Context f, long long v) { return {f, f->from_int(v)}; }

  Context context() const noexcept { return f_; }
  Code code() const noexcept { return v_; }

  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  bool is_unit() const noexcept { return v_ != 0; }
  Fq inverse() const { return {f_, f_->inv(v_)}; }

  friend Fq operator+(Fq a, Fq b) { return {a.f_, a.f_->add(a.v_, b.v_)}; }
  friend Fq operator-(Fq a, Fq b) { return {a.f_, a.f_->sub(a.v_, b.v_)}; }
  friend Fq operator*(Fq a, Fq b) { return {a.f_, a.f_->mul(a.v_, b.v_)}; }
  friend Fq operator/(Fq a, Fq b) { return a * b.inverse(); }
  Fq operator-() const { return {f_, f_->neg(v_)}; }
  Fq& operator+=(Fq b) { return *this = *this + b; }
  Fq& operator-=(Fq b) { return *this = *this - b; }
  Fq& operator*=(Fq b) { return *this = *this * b; }

  friend bool operator==(Fq a, Fq b) noexcept { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(Fq a, Fq b) noexcept { return a.v_ <=> b.v_; }

  std::string to_string() const { return f_ ? f_->format(v_) : "?"; }

 private:
  Context f_{nullptr};
  Code v_{0};
};

}  // namespace splitmod
