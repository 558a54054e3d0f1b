#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "splitmod/polynomial.hpp"

namespace splitmod {

enum class MonomialOrder { Lex, DegRevLex };

inline constexpr int kMaxVars = 64;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg{0};

  bool divides(const Monomial& o) const noexcept;
  Monomial operator*(const Monomial& o) const noexcept;
  // Requires divides(*this, o) reversed: returns this / o.
  Monomial operator/(const Monomial& o) const noexcept;
  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
  bool coprime(const Monomial& o) const noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e == b.e; }
};

// Variables are listed from largest to smallest: index 0 is the largest
// variable under either order.
class PolyRing {
 public:
  PolyRing(const GaloisField& field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::DegRevLex);

  static std::shared_ptr<const PolyRing> make(const GaloisField& field, std::vector<std::string> names,
                                              MonomialOrder order = MonomialOrder::DegRevLex) {
    return std::make_shared<const PolyRing>(field, std::move(names), order);
  }

  const GaloisField* field() const noexcept { return field_; }
  int nvars() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  MonomialOrder order() const noexcept { return order_; }
  // -1 when absent.
  int index_of(const std::string& name) const;
  // Negative, zero, positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

 private:
  const GaloisField* field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::map<std::string, int> index_;
};

class MultiPoly {
 public:
  using Context = std::shared_ptr<const PolyRing>;
  using Code = GaloisField::Code;
  using Term = std::pair<Monomial, Code>;
  static constexpr bool is_field = false;

  MultiPoly() = default;
  explicit MultiPoly(Context ring) : ring_(std::move(ring)) {}

  static MultiPoly zero(const Context& r) { return MultiPoly(r); }
  static MultiPoly one(const Context& r) { return from_int(r, 1); }
  static MultiPoly from_int(const Context& r, long long v);
  static MultiPoly constant(const Context& r, Fq c);
  static MultiPoly term(const Context& r, Fq c, const Monomial& m);
  static MultiPoly var(const Context& r, int index);
  static MultiPoly var(const Context& r, const std::string& name);
  // Unsorted input; like terms are combined.
  static MultiPoly from_terms(const Context& r, std::vector<Term> terms);
  // Parses sums of products of integers and variables with optional ^exponent.
  static MultiPoly parse(const Context& r, const std::string& text);

  const Context& context() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return t_; }
  std::size_t size() const noexcept { return t_.size(); }

  bool is_zero() const noexcept { return t_.empty(); }
  bool is_constant() const noexcept;
  bool is_unit() const noexcept { return is_constant() && !is_zero(); }
  MultiPoly inverse() const;

  // Leading monomial and coefficient; undefined on zero.
  const Monomial& lm() const { return t_.front().first; }
  Fq lc() const { return {ring_->field(), t_.front().second}; }
  int total_degree() const noexcept;
  int degree_in(int var) const noexcept;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(Fq c) const;
  MultiPoly mul_term(Fq c, const Monomial& m) const;
  MultiPoly monic() const;
  // this - c * m * g, fused.
  MultiPoly sub_mul_term(Fq c, const Monomial& m, const MultiPoly& g) const;

  // Simultaneous substitution: image[i] replaces variable i. The images may
  // live in a different ring, which becomes the ring of the result.
  MultiPoly substitute(const std::vector<MultiPoly>& image) const;
  // Same ring, rename through another ring with matching variable names.
  MultiPoly map_to(const Context& target) const;
  MultiPoly derivative(int var) const;
  Fq eval(const std::vector<Fq>& point) const;
  // All variables except var fixed at point values; returns a polynomial in var.
  UPoly specialize_to_univariate(int var, const std::vector<Fq>& point) const;

  std::string to_string() const;

 private:
  void sort_and_combine();

  Context ring_;
  std::vector<Term> t_;  // strictly decreasing monomials, nonzero coefficients
};

}  // namespace splitmod
