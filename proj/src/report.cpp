#include "hmf/report.hpp"

#include <sstream>

#include "json.hpp"

namespace hmf {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.id;
    if (!c.value.empty()) os << "  value=" << c.value;
    if (!c.expected.empty()) os << " expected=" << c.expected;
    if (!c.tolerance.empty()) os << " tol=" << c.tolerance;
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
  }
  os << (all_pass() ? "ALL CHECKS PASSED" : std::to_string(failures()) + " CHECK(S) FAILED") << "\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::json j;
  j["schema"] = "hmf49-report/1";
  j["pass"] = all_pass();
  j["failures"] = failures();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["id"] = c.id;
    e["paper_anchor"] = c.paper_anchor;
    e["status"] = c.pass ? "pass" : "fail";
    e["value"] = c.value;
    e["expected"] = c.expected;
    e["tolerance"] = c.tolerance;
    if (!c.note.empty()) e["note"] = c.note;
    j["checks"].push_back(e);
  }
  return j.dump(2);
}

}  // namespace hmf
