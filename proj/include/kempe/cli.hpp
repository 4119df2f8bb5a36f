#pragma once
// Command-line front end: parse graphs and colorings, dispatch to the engine
// and the oracle, emit deterministic JSON or text.

#include <iosfwd>
#include <string>
#include <vector>

namespace kempe::cli {

// Exit codes: 0 success, 1 domain error, 2 resource cap, 3 internal
// inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Bundled known-answer regression items; `only` filters by substring and an
// unmatched filter is a domain error.
std::vector<SuiteItem> run_regression_suite(const std::string& only = "");

}  // namespace kempe::cli
