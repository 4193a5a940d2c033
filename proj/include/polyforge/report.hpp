#pragma once

#include <string>
#include <vector>

namespace polyforge {

struct Assertion {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

// Pass/fail record for a batch of structural assertions checked on one
// group. `hypothesis_failure` marks inputs that fall outside a theorem's
// hypotheses; such reports carry a single explanatory assertion and fail
// overall without any structural checks having run.
struct VerificationReport {
  std::string group_id;
  int n = 0;  // exponent: |G| = 2^n when the order is a 2-power
  int d = 0;  // rank
  bool hypothesis_failure = false;
  std::vector<Assertion> assertions;

  bool overall() const {
    if (hypothesis_failure) return false;
    for (const Assertion& a : assertions)
      if (!a.pass) return false;
    return true;
  }

  void add(std::string name, std::string expected, std::string observed);
  void add_flag(std::string name, bool pass);
};

// Machine-readable key-value form, one assertion per record line.
std::string report_to_keyvalue(const VerificationReport& r);

// Human-readable aligned table.
std::string report_to_table(const VerificationReport& r);

}  // namespace polyforge
