#include "splitmod/reports.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "splitmod/chart_stats.hpp"

namespace splitmod {

namespace {

const std::set<std::string> kCommands{"census", "closure", "charts", "flatlift", "groebner", "schubert"};

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::BadParameters, msg); }

unsigned field_order(const ReportConfig& c) {
  if (c.q != 0) return c.q;
  return c.command == "flatlift" ? 5u : 3u;
}

// Collects named checks; the report is ok iff every check is.
class Checks {
 public:
  void add(const std::string& name, bool ok, Json detail = nullptr) {
    Json j{{"name", name}, {"ok", ok}};
    if (!detail.is_null()) j["detail"] = std::move(detail);
    list_.push_back(std::move(j));
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  Json json() const { return list_; }

 private:
  Json list_ = Json::array();
  bool ok_{true};
};

Json labels_json(const std::vector<StratumLabel>& ls) {
  Json a = Json::array();
  for (const auto& l : ls) a.push_back(l.to_string());
  return a;
}

std::string x_name(const StratumLabel& l) { return "X" + std::to_string(l.h) + "," + std::to_string(l.l); }

Json params_json(const ReportConfig& c) {
  Json p{{"n", c.n}, {"s", c.s}, {"q", field_order(c)}, {"N", c.N}, {"seed", c.seed}, {"budget", c.budget}};
  if (c.command == "census" || c.command == "schubert") p["strategy"] = c.strategy;
  if (c.command == "groebner") {
    p["m"] = c.m;
    p["allow_long"] = c.allow_long;
    if (!c.input.empty()) p["input"] = c.input;
  }
  if (c.command == "schubert") p["variant"] = c.variant;
  return p;
}

CensusParams census_params(const ReportConfig& c, bool keep) {
  CensusParams p;
  p.n = c.n;
  p.s = c.s;
  p.q = field_order(c);
  p.strategy = parse_strategy(c.strategy);
  p.budget = c.budget;
  p.seed = c.seed;
  p.threads = c.threads;
  p.keep_points = keep;
  return p;
}

// ---- census

void census_checks(const StratumCensus& sc, Checks& ch) {
  const auto labels = stratum_labels(sc.params.s);
  bool admissible = true;
  long long total = 0;
  for (const auto& [l, k] : sc.counts) {
    admissible = admissible && std::find(labels.begin(), labels.end(), l) != labels.end();
    total += k;
  }
  ch.add("labels admissible", admissible);
  ch.add("each valid point in exactly one stratum", total == sc.valid,
         Json{{"valid", sc.valid}, {"classified", total}});
  if (sc.params.strategy == CensusStrategy::Exhaustive) {
    Json missing = Json::array();
    for (const auto& l : labels)
      if (!sc.counts.count(l) || sc.counts.at(l) == 0) missing.push_back(l.to_string());
    ch.add("every admissible stratum nonempty", missing.empty(), Json{{"missing", missing}});
  }
}

Json run_census(const ReportConfig& c, Checks& ch) {
  auto sc = census(census_params(c, false));
  census_checks(sc, ch);
  return to_json(sc);
}

// ---- closure

Json run_closure(const ReportConfig& c, Checks& ch) {
  const auto p = closure_poset(c.s);
  Json poset;
  poset["labels"] = labels_json(p.labels);
  Json closures = Json::object();
  Json table = Json::array();
  for (const auto& b : p.labels) {
    auto cl = p.closure_of(b);
    closures[b.to_string()] = labels_json(cl);
    std::string row = "closure(" + x_name(b) + ") = {";
    for (std::size_t i = 0; i < cl.size(); ++i) row += (i ? ", " : "") + x_name(cl[i]);
    table.push_back(row + "}");
  }
  poset["closure"] = closures;
  poset["maximal"] = labels_json(p.maximal());
  poset["minimal"] = labels_json(p.minimal());
  poset["table"] = table;

  // component count: open strata vs the s/2 of the flatness statement
  const int open = static_cast<int>(p.maximal().size());
  int by_parity = 0;
  for (int h = 0; h <= c.s; ++h)
    if (h % 2 == c.s % 2) ++by_parity;
  Json comp{{"open_strata", open}, {"predicted", by_parity}};
  if (c.s % 2 == 0) {
    comp["flatness_statement_count"] = c.s / 2;
    comp["discrepancy"] = open != c.s / 2;
    comp["note"] = "even s: the open strata X_{h,h}, h = 0, 2, ..., s number s/2 + 1, one more than the s/2 stated for the flat model";
  }
  poset["components"] = comp;
  ch.add("open strata count", open == by_parity, Json{{"open", open}, {"expected", by_parity}});

  Json lifts = Json::array();
  int failed = 0;
  for (const auto& a : p.labels)
    for (const auto& b : p.labels) {
      if (!p.leq(a, b)) continue;
      auto rec = generization_lift(c.n, c.s, a, b, c.seed, field_order(c));
      if (!rec.ok()) ++failed;
      ch.add("lift " + a.to_string() + " -> " + b.to_string(), rec.ok(),
             rec.ok() ? Json(nullptr) : to_json(rec));
      lifts.push_back(to_json(rec));
    }
  return Json{{"poset", poset}, {"lifts", lifts}, {"failed_lifts", failed}};
}

// ---- charts

Json run_charts(const ReportConfig& c, Checks& ch) {
  const long long samples = c.budget > 0 ? c.budget : 1000;
  auto r = chart_agreement(c.n, c.s, samples, c.seed, field_order(c));
  Json by = Json::object();
  for (const auto& [l, k] : r.by_label) by[l.to_string()] = k;
  Json j{{"samples", r.samples},      {"eps_samples", r.eps_samples}, {"general_samples", r.general_samples},
         {"matches", r.matches},      {"invalid", r.invalid},         {"by_label", by},
         {"mismatches", r.mismatches}};
  ch.add("chart invariants match predictions", r.ok(),
         r.ok() ? Json(nullptr) : Json{{"mismatches", r.mismatches}, {"invalid", r.invalid}});
  return j;
}

// ---- flatlift

Json run_flatlift(const ReportConfig& c, Checks& ch) {
  const int trials = c.budget > 0 ? static_cast<int>(c.budget) : 100;
  Json profiles = Json::array();
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}, {2, 2}}) {
    auto r = flat_lift_trials(a, b, trials, c.seed, field_order(c));
    std::string name = "profile (" + std::to_string(a) + "," + std::to_string(b) + ")";
    profiles.push_back(Json{{"a", a}, {"b", b}, {"trials", r.trials}, {"passed", r.passed}, {"failures", r.failures}});
    ch.add(name, r.ok(), r.ok() ? Json(nullptr) : Json{{"failures", r.failures}});
  }
  return Json{{"field", "F_" + std::to_string(field_order(c)) + "(pi)"}, {"profiles", profiles}};
}

// ---- groebner

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json poly_strings(const std::vector<MultiPoly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json run_groebner(const ReportConfig& c, Checks& ch) {
  const unsigned q = field_order(c);
  Json out;
  if (!c.input.empty()) {
    auto file = read_polynomials(read_file(c.input), q);
    auto gb = groebner(file.polys);
    Json j{{"variables", file.ring->names()},
           {"order", file.ring->order() == MonomialOrder::Lex ? "lex" : "degrevlex"},
           {"generators", poly_strings(file.polys)},
           {"basis", poly_strings(gb.polys)},
           {"pairs_processed", gb.pairs_processed},
           {"initial_ideal_squarefree", squarefree_initial_ideal(gb)}};
    auto parse = [&](const std::string& text) {
      try {
        return MultiPoly::parse(file.ring, text);
      } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, "\"" + text + "\": " + e.what());
      }
    };
    Json red = Json::array();
    for (const auto& text : c.reduce) {
      auto r = reduce_poly(parse(text), gb);
      red.push_back(Json{{"polynomial", text}, {"normal_form", r.to_string()}, {"in_ideal", r.is_zero()}});
    }
    j["reductions"] = red;
    for (const auto& text : c.member) {
      auto r = reduce_poly(parse(text), gb);
      ch.add(text + " in I", r.is_zero(), r.is_zero() ? Json(nullptr) : Json{{"normal_form", r.to_string()}});
    }
    out["input"] = j;
    return out;
  }

  auto r = reducedness_check(c.m, q);
  out["reducedness"] = to_json(r);
  if (c.m == 2) {
    ch.add("principal", r.principal);
    ch.add("generator squarefree", r.generator_squarefree);
  }
  ch.add("initial ideal squarefree", r.initial_ideal_squarefree);
  for (const auto& [cert, holds] : r.membership) ch.add(cert, holds);

  auto sub = substitution_check(2, 1, true, q);
  out["substitution"] = to_json(sub);
  for (const auto& m : sub.maps) {
    Json bad_gens = Json::array();
    for (const auto& g : m.generators)
      if (!g.ok()) bad_gens.push_back(Json{{"label", g.label}, {"image", g.image}});
    ch.add("substitution " + m.name, m.ok(), bad_gens.empty() ? Json(nullptr) : Json{{"failing", bad_gens}});
  }
  return out;
}

// ---- schubert

Json demazure_json(const DemazureReport& d) {
  return Json{{"i", d.i}, {"c1", d.c1}, {"c2", d.c2}, {"c3", d.c3}, {"c4", d.c4}, {"ok", d.ok()}};
}

Json standard_pairs(RatContext ctx, int n, int s, Variant v, Checks& ch) {
  const int m = v == Variant::Selfdual ? (n - 1) / 2 : n / 2;
  Json adm = Json::array();
  Json pairs = Json::array();
  for (const auto& a : admissible_set(v, s, m)) {
    auto [L, Lp] = standard_demazure_pair(ctx, n, a.index, v);
    int cell = schubert_cell(L, v);
    auto d = demazure_membership(L, Lp, a.index, v);
    adm.push_back(Json{{"label", a.to_string()}, {"dimension", schubert_dimension(n, a.index)}});
    pairs.push_back(Json{{"i", a.index}, {"L", to_json(L)}, {"Lp", to_json(Lp)}, {"cell", cell}, {"demazure", demazure_json(d)}});
    ch.add("standard pair D_" + std::to_string(a.index), d.ok() && cell == a.index,
           d.ok() && cell == a.index ? Json(nullptr) : Json{{"cell", cell}, {"demazure", demazure_json(d)}});
  }
  return Json{{"admissible", adm}, {"standard_pairs", pairs}};
}

Json run_schubert(const ReportConfig& c, Checks& ch) {
  const unsigned q = field_order(c);
  const auto v = parse_variant(c.variant);
  auto ctx = rat_context(q, Var::u);
  Json out;
  auto base = base_lattice(ctx, c.n, v);
  Json bj{{"lattice", to_json(base)}};
  if (v == Variant::Selfdual) {
    bool ok = base.dual() == base;
    bj["selfdual"] = ok;
    ch.add("base lattice selfdual", ok);
  } else {
    bool phi = base.dual() == base.scaled(1);
    bool tr = base.dual(DualForm::SymmetricTrace) == base;
    bj["phi_dual_is_u_lambda"] = phi;
    bj["trace_dual_is_lambda"] = tr;
    ch.add("base lattice pi-modular", phi && tr);
  }
  out["base"] = bj;
  out["schubert"] = standard_pairs(ctx, c.n, c.s, v, ch);
  if (v == Variant::Selfdual) return out;

  auto sc = census(census_params(c, true));
  out["census"] = to_json(sc);

  long long dual_ok = 0, z_points = 0, phi_ok = 0;
  Json dual_fail = Json::array(), phi_fail = Json::array();
  for (const auto& pt : sc.points) {
    auto LF = lattice_from_point(pt.F, ctx);
    if (LF == LF.dual(DualForm::SymmetricTrace).scaled(2))
      ++dual_ok;
    else if (dual_fail.size() < 5)
      dual_fail.push_back(Json{{"label", pt.label.to_string()}, {"L_F", to_json(LF)}});
    if (pt.label.l != c.s) continue;
    ++z_points;
    auto ph = phi_map(pt.F, pt.G, c.s);
    if (ph.ok() && ph.cell == pt.label.h)
      ++phi_ok;
    else if (phi_fail.size() < 5)
      phi_fail.push_back(Json{{"label", pt.label.to_string()}, {"L", to_json(ph.L)}, {"Lp", to_json(ph.Lp)},
                              {"cell", ph.cell}, {"demazure", demazure_json(ph.demazure)}});
  }
  const long long npts = static_cast<long long>(sc.points.size());
  out["lattice_duality"] = Json{{"points", npts}, {"holds", dual_ok}, {"failures", dual_fail}};
  ch.add("L_F = u^2 L_F^dual", dual_ok == npts, dual_fail.empty() ? Json(nullptr) : Json{{"failures", dual_fail}});
  out["phi"] = Json{{"z_points", z_points}, {"passed", phi_ok}, {"failures", phi_fail}};
  ch.add("phi image in D_s with commuting square", phi_ok == z_points,
         phi_fail.empty() ? Json(nullptr) : Json{{"failures", phi_fail}});

  auto tau = tau_fiber_check(sc);
  Json cells = Json::object();
  for (const auto& [k, ls] : tau.cells) {
    std::vector<StratumLabel> v2(ls.begin(), ls.end());
    cells[std::to_string(k)] = Json{{"labels", labels_json(v2)}, {"count", tau.counts.at(k)}};
  }
  out["tau"] = Json{{"cells", cells},
                    {"h_matches_cell", tau.h_matches_cell},
                    {"labels_complete", tau.labels_complete},
                    {"exhaustive", tau.exhaustive}};
  ch.add("tau fibers", tau.ok(), tau.ok() ? Json(nullptr) : out["tau"]);

  Json dims = Json::array();
  bool dims_ok = true;
  for (int i = c.s % 2; i <= c.s; i += 2) {
    int sd = schubert_dimension(c.n, i);
    int st = stratum_dimension(c.n - c.s, c.s, i, i);
    dims.push_back(Json{{"i", i}, {"schubert", sd}, {"stratum_Xii", st}});
  }
  // top cell: S_s against the stratum X_{s,s}
  dims_ok = schubert_dimension(c.n, c.s) == stratum_dimension(c.n - c.s, c.s, c.s, c.s);
  out["dimensions"] = dims;
  ch.add("dim S_s = dim X_{s,s}", dims_ok);
  return out;
}

}  // namespace

void validate_config(const ReportConfig& c) {
  if (!kCommands.count(c.command)) bad("unknown command '" + c.command + "'");
  if (c.format != "json" && c.format != "csv") bad("format must be json or csv");
  if (c.format == "csv" && c.command != "census") bad("csv output is only available for census");
  if (c.q != 0 && c.q != 3 && c.q != 5 && c.q != 7 && c.q != 9) bad("q must be one of 3, 5, 7, 9");
  if (c.budget < 0) bad("budget must be nonnegative");
  if (c.threads < 0) bad("threads must be nonnegative");
  if (c.N < 1) bad("N must be positive");
  try {
    parse_strategy(c.strategy);
  } catch (const Error&) {
    bad("strategy must be exhaustive or chart-sampled");
  }

  if (c.command == "groebner") {
    if (!c.input.empty()) return;
    if (!c.reduce.empty() || !c.member.empty()) bad("--reduce and --member need --input");
    if (c.m != 2 && c.m != 4) bad("m must be 2 or 4");
    if (c.m == 4 && !c.allow_long) bad("m = 4 is a long job; pass --allow-long");
    return;
  }
  if (c.command == "flatlift") return;

  Variant v = Variant::Pimodular;
  if (c.command == "schubert") {
    try {
      v = parse_variant(c.variant);
    } catch (const Error&) {
      bad("variant must be pimodular or selfdual");
    }
  }
  if (v == Variant::Selfdual) {
    if (c.n % 2 == 0) bad("n must be odd for the selfdual variant");
    if (c.n < 3) bad("n must be at least 3");
    if (c.s < 0 || c.s > (c.n - 1) / 2) bad("s must satisfy 0 <= s <= (n-1)/2");
    return;
  }
  if (c.n % 2 != 0) bad("n must be even");
  if (c.n < 4) bad("n must be at least 4");
  if (c.s < 1 || c.s > c.n / 2) bad("s must satisfy 1 <= s <= n/2");
}

Json to_json(const StratumLabel& l) { return Json{{"h", l.h}, {"l", l.l}}; }

Json to_json(const LaurentLattice& L) { return Json{{"rank", L.rank()}, {"generators", L.to_strings()}}; }

Json to_json(const StratumCensus& c) {
  Json strata = Json::array();
  const int r = c.params.n - c.params.s;
  for (const auto& [l, k] : c.counts)
    strata.push_back(Json{{"h", l.h}, {"l", l.l}, {"count", k}, {"dimension", stratum_dimension(r, c.params.s, l.h, l.l)}});
  Json rej = Json::object();
  for (const auto& [why, k] : c.rejected) rej[why] = k;
  return Json{{"strategy", to_string(c.params.strategy)},
              {"candidates", c.candidates},
              {"valid", c.valid},
              {"rejected", rej},
              {"strata", strata}};
}

Json to_json(const LiftRecord& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(Json{{"u", s.u_value}, {"label", s.label.to_string()}});
  return Json{{"source", r.source.to_string()},
              {"target", r.target.to_string()},
              {"special", r.special.to_string()},
              {"generic", r.generic.to_string()},
              {"Y2", r.Y2.to_strings()},
              {"Z", r.Z.to_strings()},
              {"conditions_hold", r.conditions_hold},
              {"specializes_to_base", r.specializes_to_base},
              {"generic_as_claimed", r.generic_as_claimed},
              {"parameters_in_u_ku", r.parameters_in_u_ku},
              {"samples", samples},
              {"samples_agree", r.samples_agree},
              {"ok", r.ok()}};
}

Json to_json(const ReducednessReport& r) {
  Json mem = Json::object();
  for (const auto& [k, v] : r.membership) mem[k] = v;
  Json j{{"m", r.m},
         {"ideal", r.ideal},
         {"variables", r.gb.ring->names()},
         {"order", r.gb.ring->order() == MonomialOrder::Lex ? "lex" : "degrevlex"},
         {"basis", poly_strings(r.gb.polys)},
         {"basis_size", r.gb.size()},
         {"pairs_processed", r.gb.pairs_processed},
         {"principal", r.principal},
         {"initial_ideal_squarefree", r.initial_ideal_squarefree},
         {"membership", mem},
         {"ok", r.ok()}};
  if (r.m == 2) {
    j["generator"] = r.generator;
    j["generator_squarefree"] = r.generator_squarefree;
  }
  return j;
}

Json to_json(const SubstitutionReport& r) {
  Json maps = Json::array();
  for (const auto& m : r.maps) {
    Json gens = Json::array();
    for (const auto& g : m.generators) gens.push_back(Json{{"label", g.label}, {"image", g.image}, {"verdict", g.verdict}});
    maps.push_back(Json{{"name", m.name}, {"source", m.source}, {"target", m.target}, {"generators", gens}, {"ok", m.ok()}});
  }
  return Json{{"sp", r.sp}, {"p", r.p}, {"maps", maps}, {"ok", r.ok()}};
}

std::string census_csv(const StratumCensus& c) {
  std::string out = "h,l,count,dimension\n";
  const int r = c.params.n - c.params.s;
  for (const auto& [l, k] : c.counts)
    out += std::to_string(l.h) + "," + std::to_string(l.l) + "," + std::to_string(k) + "," +
           std::to_string(stratum_dimension(r, c.params.s, l.h, l.l)) + "\n";
  return out;
}

Report run_report(const ReportConfig& c) {
  validate_config(c);
  Checks ch;
  Report rep;
  if (c.command == "census" && c.format == "csv") {
    auto sc = census(census_params(c, false));
    census_checks(sc, ch);
    rep.text = census_csv(sc);
    rep.ok = ch.ok();
    rep.body = Json{{"schema", kReportSchema}, {"command", c.command}, {"params", params_json(c)},
                    {"result", to_json(sc)}, {"checks", ch.json()}, {"ok", rep.ok}};
    return rep;
  }
  Json result;
  if (c.command == "census") result = run_census(c, ch);
  else if (c.command == "closure") result = run_closure(c, ch);
  else if (c.command == "charts") result = run_charts(c, ch);
  else if (c.command == "flatlift") result = run_flatlift(c, ch);
  else if (c.command == "groebner") result = run_groebner(c, ch);
  else result = run_schubert(c, ch);
  rep.ok = ch.ok();
  rep.body = Json{{"schema", kReportSchema}, {"command", c.command}, {"params", params_json(c)},
                  {"result", result}, {"checks", ch.json()}, {"ok", rep.ok}};
  rep.text = rep.body.dump(2) + "\n";
  return rep;
}

}  // namespace splitmod
