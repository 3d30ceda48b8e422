#pragma once

#include <string>
#include <vector>

#include "kronfam/output.hpp"

namespace kronfam {

struct Check {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct RunReport {
  std::string suite;
  std::vector<Check> checks;
  double elapsed_seconds = 0;

  bool pass() const;
};

/// tables, oracle, bijections, planepartitions, quasipoly, saturation.
const std::vector<std::string>& suite_names();

/// Runs one suite; "all" runs every suite in declaration order, on up to
/// `threads` workers. Throws std::invalid_argument for an unknown name.
std::vector<RunReport> run_suites(const std::string& name, int threads);

/// Report rendering; elapsed times only appear in the pretty form so that
/// JSON and CSV stay byte-identical across runs.
Result report_result(const std::vector<RunReport>& reports);

}  // namespace kronfam
