#include "splitmod/polynomial.hpp"

#include <algorithm>

namespace splitmod {

UPoly::UPoly(Context f, std::vector<Code> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(Fq c) { return UPoly(c.context(), {c.code()}); }

UPoly UPoly::monomial(Fq c, int degree) {
  std::vector<Code> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c.code();
  return UPoly(c.context(), std::move(v));
}

Fq UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Fq::zero(f_);
  return Fq(f_, c_[i]);
}

UPoly UPoly::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NotInvertible, "polynomial " + to_string() + " is not a unit");
  return UPoly(f_, {f_->inv(c_[0])});
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  const auto* f = a.f_ ? a.f_ : b.f_;
  std::vector<UPoly::Code> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    UPoly::Code x = i < a.c_.size() ? a.c_[i] : 0;
    UPoly::Code y = i < b.c_.size() ? b.c_[i] : 0;
    r[i] = f->add(x, y);
  }
  return UPoly(f, std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = f_->neg(x);
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  const auto* f = a.f_ ? a.f_ : b.f_;
  if (a.is_zero() || b.is_zero()) return UPoly(f);
  std::vector<UPoly::Code> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f->add(r[i + j], f->mul(a.c_[i], b.c_[j]));
  }
  return UPoly(f, std::move(r));
}

UPoly UPoly::scaled(Fq c) const {
  UPoly r = *this;
  for (auto& x : r.c_) x = f_->mul(x, c.code());
  r.trim();
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

UPoly UPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Code> r;
  if (k > 0) {
    r.assign(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), c_.begin(), c_.end());
  } else if (static_cast<std::size_t>(-k) < c_.size()) {
    r.assign(c_.begin() + (-k), c_.end());
  }
  return UPoly(f_, std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotInvertible, "polynomial division by zero");
  const auto* f = b.f_;
  UPoly rem = a;
  rem.f_ = f;
  if (rem.degree() < b.degree()) return {UPoly(f), rem};
  std::vector<Code> q(static_cast<std::size_t>(rem.degree() - b.degree() + 1), 0);
  const Code lead_inv = f->inv(b.c_.back());
  const int db = b.degree();
  std::vector<Code>& r = rem.c_;
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    Code c = r[i];
    if (c == 0) continue;
    Code factor = f->mul(c, lead_inv);
    q[i - db] = factor;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f->sub(r[i - db + j], f->mul(factor, b.c_[j]));
  }
  rem.trim();
  return {UPoly(f, std::move(q)), rem};
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(f_);
  std::vector<Code> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<long long>(i)));
  return UPoly(f_, std::move(r));
}

Fq UPoly::eval(Fq x) const {
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x.code()), c_[i]);
  return Fq(f_ ? f_ : x.context(), acc);
}

int UPoly::valuation() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return kInfiniteValuation;
}

UPoly UPoly::sigma() const {
  UPoly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = f_->neg(r.c_[i]);
  return r;
}

UPoly UPoly::embed(Context other) const {
  for (auto x : c_)
    if (x >= other->characteristic() || other->characteristic() != f_->characteristic())
      throw Error(ErrorKind::BadParameters, "coefficient outside the prime subfield");
  return UPoly(other, c_);
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    std::string coef = f_->format(c_[i]);
    bool neg = false;
    // print p-1 as a leading minus for readability
    if (c_[i] < f_->characteristic() && c_[i] != 1 && f_->neg(c_[i]) == 1) {
      neg = true;
      coef = "1";
    }
    if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    std::string term;
    if (i == 0) {
      term = coef;
    } else {
      term = coef == "1" ? "" : coef + "*";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace splitmod
