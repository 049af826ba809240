#pragma once
// Verification results are data, not assertions: each check yields a named
// pass/fail line so the CLI can print tables and pick its exit code.

#include <string>
#include <vector>

namespace pf {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // empty when passing, else what went wrong / a measure
};

using Report = std::vector<CheckResult>;

bool all_pass(const Report& r);

// One "PASS name" / "FAIL name (detail)" line per check.
std::string render_text(const Report& r);

// Floating-point checks carry their measured deviation and the tolerance it
// was judged against.
struct NumericCheck {
  std::string name;
  double deviation;
  double tolerance;
  bool pass;
};

using NumericReport = std::vector<NumericCheck>;

bool all_pass(const NumericReport& r);
std::string render_text(const NumericReport& r);

}  // namespace pf
