#include "splitmod/galois_field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace splitmod {

namespace {

bool is_prime_number(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Digits of a code in base p, least significant first, padded to k.
std::vector<unsigned> digits(unsigned code, unsigned p, unsigned k) {
  std::vector<unsigned> d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return c;
}

// Remainder of a by the monic polynomial m over F_p; coefficient vectors low
// degree first.
std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    unsigned lead = a[i] % p;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      std::size_t idx = i - dm + j;
      a[idx] = (a[idx] + p * p - (lead * m[j]) % p) % p;
    }
  }
  a.resize(dm);
  return a;
}

bool has_root_free_factor(const std::vector<unsigned>& m, unsigned p) {
  // m is irreducible iff no monic factor of degree 1..deg/2 divides it.
  const unsigned k = static_cast<unsigned>(m.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned c = 0; c < count; ++c) {
      auto f = digits(c, p, d);
      f.push_back(1);
      auto r = poly_mod(m, f, p);
      bool zero = true;
      for (auto x : r) zero = zero && (x == 0);
      if (zero) return true;
    }
  }
  return false;
}

}  // namespace

const GaloisField& GaloisField::get(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<GaloisField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(q);
  if (it == registry.end())
    it = registry.emplace(q, std::unique_ptr<GaloisField>(new GaloisField(q))).first;
  return *it->second;
}

GaloisField::GaloisField(unsigned q) : q_(q) {
  if (q < 3 || q > 256) throw Error(ErrorKind::BadParameters, "field order must lie in [3, 256]");
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1 || !is_prime_number(p)) throw Error(ErrorKind::BadParameters, "field order must be a prime power");
  if (p == 2) throw Error(ErrorKind::BadParameters, "characteristic 2 is excluded");
  p_ = p;
  k_ = k;

  std::vector<unsigned> modulus;
  if (k > 1) {
    for (unsigned c = 0; c < q; ++c) {
      auto cand = digits(c, p, k);
      cand.push_back(1);
      if (cand[0] == 0) continue;
      if (!has_root_free_factor(cand, p)) {
        modulus = cand;
        break;
      }
    }
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a, p, k);
    std::vector<unsigned> dn(k);
    for (unsigned i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<Code>(undigits(dn, p));
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b, p, k);
      std::vector<unsigned> ds(k);
      for (unsigned i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<Code>(undigits(ds, p));
      std::vector<unsigned> prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      if (k > 1) prod = poly_mod(prod, modulus, p);
      prod.resize(k);
      mul_[a * q + b] = static_cast<Code>(undigits(prod, p));
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<Code>(b);
        break;
      }
}

GaloisField::Code GaloisField::inv(Code a) const {
  if (a == 0) throw Error(ErrorKind::NotInvertible, "zero has no inverse in F_" + std::to_string(q_));
  return inv_[a];
}

GaloisField::Code GaloisField::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

GaloisField::Code GaloisField::pow(Code a, unsigned long long e) const noexcept {
  Code result = 1;
  while (e > 0) {
    if (e & 1ULL) result = mul(result, a);
    a = mul(a, a);
    e >>= 1ULL;
  }
  return result;
}

std::string GaloisField::format(Code c) const {
  if (c < p_) return std::to_string(c);
  auto d = digits(c, p_, k_);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]) + "*";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace splitmod
