#include "pf/report.hpp"

#include <cstdio>

namespace pf {

bool all_pass(const Report& r) {
  for (const auto& c : r) {
    if (!c.pass) return false;
  }
  return true;
}

std::string render_text(const Report& r) {
  std::string out;
  for (const auto& c : r) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.name;
    if (!c.detail.empty()) {
      out += " (" + c.detail + ")";
    }
    out += "\n";
  }
  return out;
}

bool all_pass(const NumericReport& r) {
  for (const auto& c : r) {
    if (!c.pass) return false;
  }
  return true;
}

std::string render_text(const NumericReport& r) {
  std::string out;
  char buf[96];
  for (const auto& c : r) {
    std::snprintf(buf, sizeof buf, " (deviation %.3e, tolerance %.1e)",
                  c.deviation, c.tolerance);
    out += c.pass ? "PASS " : "FAIL ";
    out += c.name;
    out += buf;
    out += "\n";
  }
  return out;
}

}  // namespace pf
