#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace stardisc {

/// Raised when an enumeration would visit more grid cells (or search states)
/// than allowed.
class budget_exceeded : public std::runtime_error {
public:
  budget_exceeded(double cells, double budget, const std::string& unit = "grid cells")
      : std::runtime_error(describe(cells, budget, unit)), cells_(cells), budget_(budget) {}

  double cells() const noexcept { return cells_; }
  double budget() const noexcept { return budget_; }

private:
  static std::string describe(double cells, double budget, const std::string& unit) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.6g %s exceed budget of %.6g", cells, unit.c_str(), budget);
    return buf;
  }

  double cells_;
  double budget_;
};

/// Malformed points file or report.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr double default_grid_budget = 1e8;

}  // namespace stardisc
