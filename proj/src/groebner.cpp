#include "splitmod/groebner.hpp"

#include <algorithm>
#include <sstream>

namespace splitmod {

namespace {

struct Pair {
  int i;
  int j;
  Monomial lcm;
  unsigned sugar;
};

bool strictly_divides(const Monomial& a, const Monomial& b) { return a.divides(b) && !(a == b); }

MultiPoly leading_term(const MultiPoly& p) { return MultiPoly::term(p.context(), p.lc(), p.lm()); }

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const Monomial& l) {
  // both monic
  return f.mul_term(Fq::one(f.context()->field()), l / f.lm()).sub_mul_term(Fq::one(f.context()->field()), l / g.lm(), g);
}

void check_ring(const std::vector<MultiPoly>& gens) {
  for (const auto& g : gens)
    if (g.context() != gens.front().context()) throw Error(ErrorKind::AmbientMismatch, "generators live in different rings");
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g) {
  const auto& ring = f.context();
  std::vector<MultiPoly::Term> rem;
  MultiPoly p = f;
  while (!p.is_zero()) {
    const Monomial& m = p.lm();
    const MultiPoly* hit = nullptr;
    for (const auto& q : g)
      if (!q.is_zero() && q.lm().divides(m)) {
        hit = &q;
        break;
      }
    if (hit) {
      p = p.sub_mul_term(p.lc() / hit->lc(), m / hit->lm(), *hit);
    } else {
      rem.emplace_back(m, p.terms().front().second);
      p -= leading_term(p);
    }
  }
  return MultiPoly::from_terms(ring, std::move(rem));
}

GroebnerBasis groebner(const std::vector<MultiPoly>& generators, const GroebnerOptions& opt) {
  GroebnerBasis out;
  if (generators.empty()) return out;
  check_ring(generators);
  out.ring = generators.front().context();
  if (out.ring->nvars() > opt.max_vars)
    throw Error(ErrorKind::BudgetExceeded, "Groebner engine is limited to " + std::to_string(opt.max_vars) + " variables");
  const auto& ring = *out.ring;

  std::vector<MultiPoly> G;
  std::vector<unsigned> sugar;
  std::vector<Pair> pairs;

  auto add = [&](MultiPoly h, unsigned sg) {
    h = h.monic();
    const int k = static_cast<int>(G.size());
    std::vector<Pair> fresh;
    for (int i = 0; i < k; ++i) {
      Monomial l = Monomial::lcm(G[i].lm(), h.lm());
      unsigned s1 = sugar[i] + (l.deg - G[i].lm().deg), s2 = sg + (l.deg - h.lm().deg);
      fresh.push_back({i, k, l, std::max(s1, s2)});
    }
    // M: drop (i,k) when some (j,k) has an lcm properly dividing it
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b)
        if (a != b && strictly_divides(fresh[b].lcm, fresh[a].lcm)) keep[a] = false;
    // F: one pair per lcm, and none at all when any of them is coprime
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool coprime_group = G[fresh[a].i].lm().coprime(h.lm());
      for (std::size_t b = a + 1; b < fresh.size(); ++b)
        if (keep[b] && fresh[b].lcm == fresh[a].lcm) {
          coprime_group = coprime_group || G[fresh[b].i].lm().coprime(h.lm());
          keep[b] = false;
        }
      if (coprime_group) keep[a] = false;
    }
    // B: old pairs made redundant by h
    std::erase_if(pairs, [&](const Pair& p) {
      return h.lm().divides(p.lcm) && !(Monomial::lcm(G[p.i].lm(), h.lm()) == p.lcm) &&
             !(Monomial::lcm(G[p.j].lm(), h.lm()) == p.lcm);
    });
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs.push_back(fresh[a]);
    G.push_back(std::move(h));
    sugar.push_back(sg);
  };

  for (const auto& g : generators) {
    auto r = normal_form(g, G);
    if (!r.is_zero()) add(r, static_cast<unsigned>(g.total_degree()));
  }
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = ring.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    });
    Pair p = *best;
    pairs.erase(best);
    if (++out.pairs_processed > opt.pair_cap)
      throw Error(ErrorKind::BudgetExceeded, "Groebner pair cap of " + std::to_string(opt.pair_cap) + " exceeded");
    auto r = normal_form(spoly(G[p.i], G[p.j], p.lcm), G);
    if (r.is_zero()) {
      ++out.zero_reductions;
      continue;
    }
    add(r, p.sugar);
  }

  // minimalize, then inter-reduce
  std::vector<MultiPoly> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b) continue;
      if (G[b].lm().divides(G[a].lm()) && (!(G[b].lm() == G[a].lm()) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[a]);
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MultiPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    auto lt = leading_term(minimal[a]);
    out.polys.push_back((lt + normal_form(minimal[a] - lt, others)).monic());
  }
  std::sort(out.polys.begin(), out.polys.end(),
            [&](const MultiPoly& a, const MultiPoly& b) { return ring.compare(a.lm(), b.lm()) < 0; });
  return out;
}

GroebnerBasis groebner(const std::vector<MultiPoly>& generators, MonomialOrder order, const GroebnerOptions& opt) {
  if (generators.empty()) return {};
  const auto& src = generators.front().context();
  if (src->order() == order) return groebner(generators, opt);
  auto ring = PolyRing::make(*src->field(), src->names(), order);
  std::vector<MultiPoly> moved;
  for (const auto& g : generators) moved.push_back(g.map_to(ring));
  return groebner(moved, opt);
}

MultiPoly reduce_poly(const MultiPoly& f, const GroebnerBasis& gb) {
  if (!gb.ring || gb.polys.empty()) return f;
  MultiPoly g = f.context() == gb.ring ? f : f.map_to(gb.ring);
  return normal_form(g, gb.polys);
}

bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& f) { return reduce_poly(f, gb).is_zero(); }

bool squarefree_initial_ideal(const GroebnerBasis& gb) {
  for (const auto& p : gb.polys)
    for (int i = 0; i < gb.ring->nvars(); ++i)
      if (p.lm().e[i] > 1) return false;
  return true;
}

std::string write_polynomials(const std::shared_ptr<const PolyRing>& ring, const std::vector<MultiPoly>& polys) {
  std::ostringstream os;
  os << "# order: " << (ring->order() == MonomialOrder::Lex ? "lex" : "degrevlex") << "\n# vars:";
  for (const auto& n : ring->names()) os << ' ' << n;
  os << '\n';
  for (const auto& p : polys) os << p.to_string() << '\n';
  return os.str();
}

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    out.push_back(line.substr(b));
  }
  return out;
}

}  // namespace

std::vector<MultiPoly> read_polynomials(const std::string& text, const std::shared_ptr<const PolyRing>& ring) {
  std::vector<MultiPoly> out;
  for (const auto& l : content_lines(text)) out.push_back(MultiPoly::parse(ring, l));
  return out;
}

PolynomialFile read_polynomials(const std::string& text, unsigned q) {
  std::vector<std::string> names;
  MonomialOrder order = MonomialOrder::DegRevLex;
  bool have_vars = false;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string hash, key;
    ls >> hash >> key;
    if (hash != "#") continue;
    if (key == "vars:") {
      std::string v;
      while (ls >> v) names.push_back(v);
      have_vars = true;
    } else if (key == "order:") {
      std::string o;
      ls >> o;
      if (o == "lex") order = MonomialOrder::Lex;
      else if (o == "degrevlex") order = MonomialOrder::DegRevLex;
      else throw Error(ErrorKind::ParseError, "unknown monomial order " + o);
    }
  }
  if (!have_vars) throw Error(ErrorKind::ParseError, "missing '# vars:' header");
  PolynomialFile out;
  out.ring = PolyRing::make(GaloisField::get(q), names, order);
  out.polys = read_polynomials(text, out.ring);
  return out;
}

}  // namespace splitmod
