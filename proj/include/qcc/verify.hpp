#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcc/json_io.hpp"

namespace qcc {

// Reference data. Sequences and variable labels are 1-based.
struct GoldenVariable {
  std::string name;
  std::vector<int> seq;  // X_[k; seq] with k = seq.back()
  std::string expansion;
};

struct GoldenRep {
  std::string rep;
  std::string variable;
  std::vector<std::pair<ExponentVec, std::string>> counts;  // |Gr_e| in q
};

struct GoldenRank2 {
  std::string quiver;
  std::vector<GoldenVariable> variables;
  std::vector<GoldenRep> reps;
  const GoldenVariable& variable(const std::string& name) const;
};

struct GoldenRow {
  ExponentVec e;
  long long d = 0;
  std::string gr;
  ExponentVec exp;
};

struct GoldenRank4 {
  std::string name;
  std::vector<int> seq;
  std::string expansion;
  std::vector<GoldenRow> rows;
};

struct Golden {
  std::vector<GoldenRank2> rank2;
  std::vector<GoldenRank4> rank4;
  const GoldenRank2& quiver(const std::string& name) const;
};

const Golden& golden();
const char* golden_json_text();

// 0-based copy of a 1-based sequence.
std::vector<int> zero_based(const std::vector<int>& seq);
TorusElement golden_element(const FormPtr& form, const std::string& text);
CountTable golden_counts(const ValuedQuiver& q, const GoldenRep& r);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Check {
  std::string name;
  double cost = 1;  // skipped when above the budget
  std::function<CheckResult()> run;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> results;
  std::vector<std::string> skipped;
  bool all_pass() const;
};

// Acceptance criteria 1..11, one check each.
std::vector<Check> criterion_checks();
// "paper-tables", "engines", "properties".
std::vector<std::string> suite_names();
std::vector<Check> suite_checks(const std::string& suite);
Report run_checks(const std::string& suite, const std::vector<Check>& checks, double budget);
Json report_to_json(const Report& r);

}  // namespace qcc
