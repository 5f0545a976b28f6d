#pragma once

#include <string>
#include <vector>

namespace hmf {

struct Check {
  std::string id;
  std::string paper_anchor;  // stable slug naming the verified fact
  bool pass = false;
  std::string value;     // computed
  std::string expected;  // target
  std::string tolerance; // "exact" or a numeric bound
  std::string note;      // optional status detail ("insufficient-rows", ...)
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const;
  int failures() const;
  void add(Check c) { checks.push_back(std::move(c)); }

  std::string text() const;
  std::string json() const;  // schema hmf49-report/1
};

}  // namespace hmf
