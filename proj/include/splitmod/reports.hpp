#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "splitmod/affine_grassmannian.hpp"
#include "splitmod/census.hpp"
#include "splitmod/degenerations.hpp"
#include "splitmod/local_charts.hpp"

namespace splitmod {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

struct ReportConfig {
  std::string command;  // census, closure, charts, flatlift, groebner, schubert
  int n{4};
  int s{2};
  unsigned q{0};  // 0: the command's default (5 for flatlift, 3 otherwise)
  int N{4};       // truncation precision, recorded in the report
  std::uint64_t seed{1};
  long long budget{0};  // census: candidate cap or sample count; charts/flatlift: samples
  std::string strategy{"exhaustive"};
  std::string format{"json"};
  std::string out;
  int threads{0};
  bool allow_long{false};
  int m{2};                          // groebner: size of the skew blocks
  std::string variant{"pimodular"};  // schubert
  std::string input;                 // groebner: polynomial file
  std::vector<std::string> reduce;   // groebner: polynomials to reduce against the input basis
  std::vector<std::string> member;   // groebner: polynomials asserted to lie in the input ideal
};

// Throws Error(BadParameters) with a user-facing message.
void validate_config(const ReportConfig& c);

struct Report {
  Json body;
  bool ok{false};
  std::string text;  // serialized output in the requested format
};

// Runs one command. Config errors throw Error(BadParameters); budget
// overruns throw Error(BudgetExceeded).
Report run_report(const ReportConfig& c);

Json to_json(const StratumLabel& l);
Json to_json(const LaurentLattice& L);
Json to_json(const StratumCensus& c);
Json to_json(const LiftRecord& r);
Json to_json(const ReducednessReport& r);
Json to_json(const SubstitutionReport& r);

// h,l,count,dimension rows with a header line.
std::string census_csv(const StratumCensus& c);

}  // namespace splitmod
