#include "splitmod/multipoly.hpp"

#include <algorithm>
#include <cctype>

namespace splitmod {

bool Monomial::divides(const Monomial& o) const noexcept {
  if (deg > o.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const noexcept {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
  r.deg = deg + o.deg;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const noexcept {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
  r.deg = deg - o.deg;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const noexcept {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] != 0 && o.e[i] != 0) return false;
  return true;
}

PolyRing::PolyRing(const GaloisField& field, std::vector<std::string> names, MonomialOrder order)
    : field_(&field), names_(std::move(names)), order_(order) {
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw Error(ErrorKind::BadParameters, "at most " + std::to_string(kMaxVars) + " variables");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::BadParameters, "duplicate variable " + names_[i]);
  }
}

int PolyRing::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const noexcept {
  const int n = nvars();
  if (order_ == MonomialOrder::Lex) {
    for (int i = 0; i < n; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
  }
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = n - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

MultiPoly MultiPoly::from_int(const Context& r, long long v) { return constant(r, Fq::from_int(r->field(), v)); }

MultiPoly MultiPoly::constant(const Context& r, Fq c) { return term(r, c, Monomial{}); }

MultiPoly MultiPoly::term(const Context& r, Fq c, const Monomial& m) {
  MultiPoly p(r);
  if (!c.is_zero()) p.t_.emplace_back(m, c.code());
  return p;
}

MultiPoly MultiPoly::var(const Context& r, int index) {
  if (index < 0 || index >= r->nvars()) throw Error(ErrorKind::BadParameters, "variable index out of range");
  Monomial m;
  m.e[index] = 1;
  m.deg = 1;
  return term(r, Fq::one(r->field()), m);
}

MultiPoly MultiPoly::var(const Context& r, const std::string& name) {
  int i = r->index_of(name);
  if (i < 0) throw Error(ErrorKind::BadParameters, "unknown variable " + name);
  return var(r, i);
}

MultiPoly MultiPoly::from_terms(const Context& r, std::vector<Term> terms) {
  MultiPoly p(r);
  p.t_ = std::move(terms);
  p.sort_and_combine();
  return p;
}

void MultiPoly::sort_and_combine() {
  const auto* ring = ring_.get();
  std::sort(t_.begin(), t_.end(), [ring](const Term& a, const Term& b) { return ring->compare(a.first, b.first) > 0; });
  std::vector<Term> out;
  out.reserve(t_.size());
  const auto* f = ring_->field();
  for (auto& t : t_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second = f->add(out.back().second, t.second);
    } else {
      out.push_back(t);
    }
  }
  std::vector<Term> nz;
  nz.reserve(out.size());
  for (auto& t : out)
    if (t.second != 0) nz.push_back(t);
  t_ = std::move(nz);
}

bool MultiPoly::is_constant() const noexcept { return t_.empty() || (t_.size() == 1 && t_[0].first.deg == 0); }

MultiPoly MultiPoly::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NotInvertible, "non-constant polynomial " + to_string());
  return constant(ring_, lc().inverse());
}

int MultiPoly::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, static_cast<int>(t.first.deg));
  return d;
}

int MultiPoly::degree_in(int var) const noexcept {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, static_cast<int>(t.first.e[var]));
  return d;
}

namespace {

// Merge a + c*b (b's monomials pre-multiplied by m) on sorted term lists.
std::vector<MultiPoly::Term> merge_axpy(const PolyRing& ring, const std::vector<MultiPoly::Term>& a,
                                        GaloisField::Code c, const Monomial* m,
                                        const std::vector<MultiPoly::Term>& b) {
  const auto* f = ring.field();
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = m ? b[j].first * *m : b[j].first;
    if (i == a.size()) {
      GaloisField::Code v = f->mul(c, b[j].second);
      if (v != 0) out.emplace_back(bm, v);
      ++j;
      continue;
    }
    int cmp = ring.compare(a[i].first, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      GaloisField::Code v = f->mul(c, b[j].second);
      if (v != 0) out.emplace_back(bm, v);
      ++j;
    } else {
      GaloisField::Code v = f->add(a[i].second, f->mul(c, b[j].second));
      if (v != 0) out.emplace_back(bm, v);
      ++i;
      ++j;
    }
  }
  return out;
}

const MultiPoly::Context& pick_ring(const MultiPoly& a, const MultiPoly& b) {
  return a.context() ? a.context() : b.context();
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(pick_ring(a, b));
  r.t_ = merge_axpy(*r.ring_, a.t_, 1, nullptr, b.t_);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(pick_ring(a, b));
  r.t_ = merge_axpy(*r.ring_, a.t_, r.ring_->field()->neg(1), nullptr, b.t_);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.t_) t.second = ring_->field()->neg(t.second);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const auto& ring = pick_ring(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(ring);
  const auto* f = ring->field();
  std::vector<MultiPoly::Term> terms;
  terms.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) terms.emplace_back(x.first * y.first, f->mul(x.second, y.second));
  return MultiPoly::from_terms(ring, std::move(terms));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].first == b.t_[i].first) || a.t_[i].second != b.t_[i].second) return false;
  return true;
}

MultiPoly MultiPoly::scaled(Fq c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  MultiPoly r = *this;
  for (auto& t : r.t_) t.second = ring_->field()->mul(t.second, c.code());
  return r;
}

MultiPoly MultiPoly::mul_term(Fq c, const Monomial& m) const {
  if (c.is_zero()) return MultiPoly(ring_);
  MultiPoly r = *this;
  for (auto& t : r.t_) {
    t.first = t.first * m;
    t.second = ring_->field()->mul(t.second, c.code());
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inverse());
}

MultiPoly MultiPoly::sub_mul_term(Fq c, const Monomial& m, const MultiPoly& g) const {
  MultiPoly r(ring_ ? ring_ : g.ring_);
  r.t_ = merge_axpy(*r.ring_, t_, r.ring_->field()->neg(c.code()), &m, g.t_);
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& image) const {
  if (static_cast<int>(image.size()) != ring_->nvars())
    throw Error(ErrorKind::BadParameters, "substitution needs one image per variable");
  Context target = image.empty() ? ring_ : image.front().context();
  MultiPoly result(target);
  // powers cached per variable
  std::vector<std::vector<MultiPoly>> powers(image.size());
  for (const auto& t : t_) {
    MultiPoly prod = MultiPoly::constant(target, Fq(ring_->field(), t.second));
    for (int v = 0; v < ring_->nvars(); ++v) {
      int k = t.first.e[v];
      if (k == 0) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(MultiPoly::one(target));
      while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * image[v]);
      prod = prod * pw[k];
    }
    result += prod;
  }
  return result;
}

MultiPoly MultiPoly::map_to(const Context& target) const {
  std::vector<MultiPoly> image;
  for (const auto& nm : ring_->names()) image.push_back(MultiPoly::var(target, nm));
  if (image.empty()) return MultiPoly::from_terms(target, t_);
  return substitute(image);
}

MultiPoly MultiPoly::derivative(int var) const {
  std::vector<Term> out;
  const auto* f = ring_->field();
  for (const auto& t : t_) {
    int k = t.first.e[var];
    if (k == 0) continue;
    Code c = f->mul(t.second, f->from_int(k));
    if (c == 0) continue;
    Monomial m = t.first;
    m.e[var] = static_cast<std::uint16_t>(k - 1);
    m.deg -= 1;
    out.emplace_back(m, c);
  }
  return from_terms(ring_, std::move(out));
}

Fq MultiPoly::eval(const std::vector<Fq>& point) const {
  const auto* f = ring_->field();
  Fq acc = Fq::zero(f);
  for (const auto& t : t_) {
    Fq v(f, t.second);
    for (int i = 0; i < ring_->nvars(); ++i)
      if (t.first.e[i]) v *= Fq(f, f->pow(point[i].code(), t.first.e[i]));
    acc += v;
  }
  return acc;
}

UPoly MultiPoly::specialize_to_univariate(int var, const std::vector<Fq>& point) const {
  const auto* f = ring_->field();
  UPoly acc(f);
  for (const auto& t : t_) {
    Fq v(f, t.second);
    for (int i = 0; i < ring_->nvars(); ++i)
      if (i != var && t.first.e[i]) v *= Fq(f, f->pow(point[i].code(), t.first.e[i]));
    acc += UPoly::monomial(v, t.first.e[var]);
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (t_.empty()) return "0";
  const auto* f = ring_->field();
  std::string out;
  for (const auto& t : t_) {
    bool neg = t.second != 1 && f->neg(t.second) < t.second;
    Code c = neg ? f->neg(t.second) : t.second;
    std::string term;
    bool first_factor = true;
    if (c != 1 || t.first.deg == 0) {
      term = f->format(c);
      first_factor = false;
    }
    for (int i = 0; i < ring_->nvars(); ++i) {
      int k = t.first.e[i];
      if (k == 0) continue;
      if (!first_factor) term += "*";
      term += ring_->name(i);
      if (k > 1) term += "^" + std::to_string(k);
      first_factor = false;
    }
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

MultiPoly MultiPoly::parse(const Context& r, const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos) + " in \"" + text + "\"");
  };
  auto read_int = [&]() -> long long {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stoll(text.substr(start, pos - start));
  };
  const auto* f = r->field();
  std::vector<Term> terms;
  skip();
  if (pos == text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Code coef = f->from_int(sign);
    Monomial m;
    bool expect_factor = true;
    while (expect_factor) {
      skip();
      if (pos >= text.size()) fail("expected factor");
      char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coef = f->mul(coef, f->from_int(read_int()));
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        std::string name = text.substr(start, pos - start);
        int idx = r->index_of(name);
        if (idx < 0) fail("unknown variable " + name);
        long long k = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          k = read_int();
        }
        m.e[idx] = static_cast<std::uint16_t>(m.e[idx] + k);
        m.deg += static_cast<std::uint32_t>(k);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        expect_factor = false;
      }
    }
    if (coef != 0) terms.emplace_back(m, coef);
  }
  return from_terms(r, std::move(terms));
}

}  // namespace splitmod
