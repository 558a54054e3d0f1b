#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "splitmod/reports.hpp"

using namespace splitmod;
namespace fs = std::filesystem;

namespace {

ReportConfig cfg(const std::string& command) {
  ReportConfig c;
  c.command = command;
  return c;
}

std::string bad_params_message(const ReportConfig& c) {
  try {
    validate_config(c);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadParameters);
    return e.what();
  }
  return "";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  auto d = fs::temp_directory_path() / ("splitmod_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

struct Run {
  int code{-1};
  std::string out;
  std::string err;
};

// Runs the CLI binary named by SPLITMOD_CLI with stdout/stderr captured.
Run cli(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("SPLITMOD_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "SPLITMOD_CLI not set");
  auto dir = scratch();
  auto o = dir / "stdout", e = dir / "stderr";
  std::string cmd = env + " '" + std::string(bin) + "' " + args + " >'" + o.string() + "' 2>'" + e.string() + "'";
  int st = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.out = slurp(o);
  r.err = slurp(e);
  return r;
}

}  // namespace

TEST_CASE("validate_config errors") {
  auto c = cfg("census");
  c.n = 5;
  CHECK(bad_params_message(c).find("n must be even") != std::string::npos);
  c.n = 2;
  c.s = 1;
  CHECK(bad_params_message(c).find("n must be at least 4") != std::string::npos);
  c.n = 4;
  c.s = 3;
  CHECK(bad_params_message(c).find("s must satisfy") != std::string::npos);
  c.s = 0;
  CHECK(bad_params_message(c).find("s must satisfy") != std::string::npos);
  c.s = 2;
  c.q = 11;
  CHECK(bad_params_message(c).find("q must be") != std::string::npos);
  c.q = 4;
  CHECK(bad_params_message(c).find("q must be") != std::string::npos);
  c.q = 9;
  CHECK(bad_params_message(c).empty());
  c.strategy = "random";
  CHECK(bad_params_message(c).find("strategy") != std::string::npos);

  auto cl = cfg("closure");
  cl.format = "csv";
  CHECK(bad_params_message(cl).find("csv") != std::string::npos);

  auto g = cfg("groebner");
  g.m = 4;
  CHECK(bad_params_message(g).find("--allow-long") != std::string::npos);
  g.allow_long = true;
  CHECK(bad_params_message(g).empty());
  g.m = 3;
  CHECK(bad_params_message(g).find("m must be") != std::string::npos);
  g.m = 2;
  g.member = {"x"};
  CHECK(bad_params_message(g).find("--input") != std::string::npos);

  auto sch = cfg("schubert");
  sch.variant = "selfdual";
  CHECK(bad_params_message(sch).find("odd") != std::string::npos);
  sch.n = 5;
  CHECK(bad_params_message(sch).empty());
  sch.variant = "parahoric";
  CHECK(bad_params_message(sch).find("variant") != std::string::npos);

  CHECK(bad_params_message(cfg("frobnicate")).find("unknown command") != std::string::npos);
  CHECK_THROWS_AS(run_report(cfg("frobnicate")), Error);
}

TEST_CASE("census report") {
  auto r = run_report(cfg("census"));
  CHECK(r.ok);
  CHECK(r.body["schema"] == 1);
  CHECK(r.body["ok"] == true);
  std::map<std::pair<int, int>, long long> got;
  for (const auto& row : r.body["result"]["strata"]) got[{row["h"].get<int>(), row["l"].get<int>()}] = row["count"];
  // counts from the brute-force enumeration in the census tests
  CHECK(got == std::map<std::pair<int, int>, long long>{{{0, 0}, 90}, {{0, 2}, 40}, {{2, 2}, 120}});
  CHECK(r.body["result"]["valid"] == 250);
  CHECK(Json::parse(r.text) == r.body);

  auto c = cfg("census");
  c.format = "csv";
  auto csv = run_report(c);
  CHECK(csv.ok);
  CHECK(csv.text == "h,l,count,dimension\n0,0,90,4\n0,2,40,3\n2,2,120,4\n");
}

TEST_CASE("closure report") {
  auto c = cfg("closure");
  c.n = 8;
  c.s = 3;
  auto r = run_report(c);
  CHECK(r.ok);
  auto cl = r.body["result"]["poset"]["closure"]["(3,3)"];
  CHECK(cl == Json{"(1,3)", "(3,3)"});
  bool row = false;
  for (const auto& t : r.body["result"]["poset"]["table"]) row = row || t == "closure(X3,3) = {X1,3, X3,3}";
  CHECK(row);
  CHECK(r.body["result"]["poset"]["components"]["open_strata"] == 2);
  CHECK(r.body["result"]["lifts"].size() == 5);  // pairs a <= b among three labels
  CHECK(r.body["result"]["failed_lifts"] == 0);

  c.s = 4;
  auto r4 = run_report(c);
  CHECK(r4.ok);
  auto comp = r4.body["result"]["poset"]["components"];
  CHECK(comp["open_strata"] == 3);
  CHECK(comp["flatness_statement_count"] == 2);
  CHECK(comp["discrepancy"] == true);
}

TEST_CASE("charts, flatlift, groebner and schubert reports pass") {
  auto ch = cfg("charts");
  ch.n = 6;
  ch.s = 3;
  ch.budget = 200;
  auto r = run_report(ch);
  CHECK(r.ok);
  CHECK(r.body["result"]["samples"] == 200);
  CHECK(r.body["result"]["matches"] == 200);

  auto fl = cfg("flatlift");
  fl.budget = 20;
  auto f = run_report(fl);
  CHECK(f.ok);
  CHECK(f.body["params"]["q"] == 5);
  CHECK(f.body["result"]["profiles"].size() == 6);

  auto g = run_report(cfg("groebner"));
  CHECK(g.ok);
  auto red = g.body["result"]["reducedness"];
  CHECK(red["basis"] == Json{"t_1_2*w_1_2"});
  CHECK(red["membership"]["tw in I"] == true);
  CHECK(red["membership"]["(tw)^2 in I"] == true);
  CHECK(g.body["result"]["substitution"]["maps"].size() == 4);

  auto s = run_report(cfg("schubert"));
  CHECK(s.ok);
  CHECK(s.body["result"]["phi"]["z_points"] == 160);
  CHECK(s.body["result"]["phi"]["passed"] == 160);
  CHECK(s.body["result"]["lattice_duality"]["holds"] == 250);
  CHECK(s.body["result"]["tau"]["cells"]["0"]["labels"] == Json{"(0,0)", "(0,2)"});
  CHECK(s.body["result"]["tau"]["cells"]["2"]["labels"] == Json{"(2,2)"});

  auto sd = cfg("schubert");
  sd.variant = "selfdual";
  sd.n = 7;
  sd.s = 3;
  auto sr = run_report(sd);
  CHECK(sr.ok);
  CHECK(sr.body["result"]["schubert"]["standard_pairs"].size() == 4);
}

TEST_CASE("groebner input file with reductions and membership certificates") {
  auto ring = PolyRing::make(GaloisField::get(3), {"x", "y"});
  auto x = MultiPoly::var(ring, "x"), y = MultiPoly::var(ring, "y");
  auto path = scratch() / "ideal.txt";
  {
    std::ofstream f(path);
    f << write_polynomials(ring, {x * y, x * x - y});
  }
  auto c = cfg("groebner");
  c.input = path.string();
  c.reduce = {"x^3", "x + y"};
  c.member = {"y^2"};
  auto r = run_report(c);
  CHECK(r.ok);
  auto red = r.body["result"]["input"]["reductions"];
  CHECK(red[0]["in_ideal"] == true);  // x^3 = x (x^2 - y) + x y
  CHECK(red[1]["in_ideal"] == false);
  c.member = {"x"};
  auto bad = run_report(c);
  CHECK_FALSE(bad.ok);
  CHECK(bad.body["ok"] == false);
  bool certificate = false;
  for (const auto& chk : bad.body["checks"])
    if (chk["ok"] == false) certificate = chk["detail"]["normal_form"] == "x";
  CHECK(certificate);
  c.member = {"x + q"};
  CHECK_THROWS_AS(run_report(c), Error);
}

TEST_CASE("reports are deterministic given the seed") {
  for (std::string cmd : {"charts", "flatlift", "closure"}) {
    auto c = cfg(cmd);
    c.n = 8;
    c.s = 3;
    c.budget = 50;
    c.seed = 7;
    auto a = run_report(c), b = run_report(c);
    CHECK(a.text == b.text);
    if (cmd != "closure") {
      c.seed = 8;
      CHECK(run_report(c).text != a.text);
    }
  }
}

TEST_CASE("binary: census example") {
  auto r = cli("census --n 4 --s 2 --q 3 --strategy exhaustive");
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["schema"] == 1);
  std::set<std::string> labels;
  for (const auto& row : j["result"]["strata"])
    labels.insert("(" + std::to_string(row["h"].get<int>()) + "," + std::to_string(row["l"].get<int>()) + ")");
  CHECK(labels == std::set<std::string>{"(0,0)", "(0,2)", "(2,2)"});
}

TEST_CASE("binary: closure example") {
  auto r = cli("closure --s 3 --n 8");
  CHECK(r.code == 0);
  CHECK(r.out.find("closure(X3,3) = {X1,3, X3,3}") != std::string::npos);
}

TEST_CASE("binary: config errors exit 2") {
  auto r = cli("census --n 5 --s 2");
  CHECK(r.code == 2);
  CHECK(r.err.find("n must be even") != std::string::npos);
  CHECK(cli("groebner --m 4").code == 2);
  CHECK(cli("census --bogus").code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("closure --format csv").code == 2);
  CHECK(cli("groebner --input /nonexistent/file.txt").code == 2);
}

TEST_CASE("binary: failed check exits 1 with the certificate") {
  auto path = scratch() / "principal.txt";
  {
    std::ofstream f(path);
    f << "# vars: a b\na*b\n";
  }
  auto ok = cli("groebner --input '" + path.string() + "' --member 'a^2*b'");
  CHECK(ok.code == 0);
  auto r = cli("groebner --input '" + path.string() + "' --member 'a+b'");
  CHECK(r.code == 1);
  auto j = Json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK(j["checks"][0]["detail"]["normal_form"] == "a + b");
}

TEST_CASE("binary: output locations and byte-identical reruns") {
  auto dir = scratch() / "out";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto r = cli("charts --n 6 --s 2 --budget 100 --seed 3", "SPLITMOD_OUT_DIR='" + dir.string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  auto first = slurp(dir / "charts.json");
  CHECK_FALSE(first.empty());
  auto again = cli("charts --n 6 --s 2 --budget 100 --seed 3");
  CHECK(again.out == first);

  auto explicit_out = dir / "census.csv";
  auto c = cli("census --format csv --out '" + explicit_out.string() + "'", "SPLITMOD_OUT_DIR=/nonexistent");
  CHECK(c.code == 0);
  CHECK(slurp(explicit_out) == "h,l,count,dimension\n0,0,90,4\n0,2,40,3\n2,2,120,4\n");
  CHECK(cli("census --format csv").out == slurp(explicit_out));
}
