#include "polyforge/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace polyforge {

void VerificationReport::add(std::string name, std::string expected,
                             std::string observed) {
  const bool pass = expected == observed;
  assertions.push_back(
      {std::move(name), std::move(expected), std::move(observed), pass});
}

void VerificationReport::add_flag(std::string name, bool pass) {
  assertions.push_back({std::move(name), "true", pass ? "true" : "false", pass});
}

std::string report_to_keyvalue(const VerificationReport& r) {
  std::ostringstream out;
  out << "group: " << r.group_id << '\n';
  out << "n: " << r.n << '\n';
  out << "d: " << r.d << '\n';
  out << "hypothesis_failure: " << (r.hypothesis_failure ? "true" : "false")
      << '\n';
  for (const Assertion& a : r.assertions)
    out << "assertion: name=" << a.name << " expected=" << a.expected
        << " observed=" << a.observed << " pass=" << (a.pass ? "true" : "false")
        << '\n';
  out << "overall: " << (r.overall() ? "pass" : "fail") << '\n';
  return out.str();
}

std::string report_to_table(const VerificationReport& r) {
  std::size_t w_name = 9, w_exp = 8, w_obs = 8;
  for (const Assertion& a : r.assertions) {
    w_name = std::max(w_name, a.name.size());
    w_exp = std::max(w_exp, a.expected.size());
    w_obs = std::max(w_obs, a.observed.size());
  }
  std::ostringstream out;
  out << "group " << r.group_id << " (n=" << r.n << ", d=" << r.d << ")\n";
  if (r.hypothesis_failure) out << "  hypothesis failure\n";
  out << "  " << std::left << std::setw(static_cast<int>(w_name)) << "assertion"
      << "  " << std::setw(static_cast<int>(w_exp)) << "expected" << "  "
      << std::setw(static_cast<int>(w_obs)) << "observed" << "  result\n";
  for (const Assertion& a : r.assertions)
    out << "  " << std::left << std::setw(static_cast<int>(w_name)) << a.name
        << "  " << std::setw(static_cast<int>(w_exp)) << a.expected << "  "
        << std::setw(static_cast<int>(w_obs)) << a.observed << "  "
        << (a.pass ? "ok" : "FAIL") << '\n';
  out << "overall: " << (r.overall() ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace polyforge
