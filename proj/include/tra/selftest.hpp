#pragma once

#include <string>
#include <vector>

namespace tra::selftest {

struct SuiteResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

/// Collects named checks for one suite.
class Checker {
 public:
  explicit Checker(SuiteResult& result) : result_(result) {}

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) result_.failures.push_back(what);
  }

 private:
  SuiteResult& result_;
};

SuiteResult laguerre_suite();
SuiteResult eigensolver_suite();
SuiteResult hamiltonian_suite();
SuiteResult wavefunction_suite();
SuiteResult reference_suite();

/// Every module's invariant suite, in dependency order.
std::vector<SuiteResult> run_all();

}  // namespace tra::selftest
