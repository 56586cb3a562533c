#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vlr {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full acceptance battery in order, streaming one line per
// criterion to `live` when given. Artifacts land in out_dir.
std::vector<CriterionResult> run_acceptance(const std::string& out_dir, std::ostream* live);

// One line per criterion plus a summary; returns the number of failures.
int summarize_acceptance(const std::vector<CriterionResult>& results, std::ostream& os);

void write_acceptance_report(const std::vector<CriterionResult>& results,
                             const std::string& path);

} // namespace vlr
