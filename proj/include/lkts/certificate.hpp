#pragma once

// Verification outcome: a named list of checks with counterexample
// witnesses, plus the counts the checks were computed over.  Rendering is
// line oriented and stable so certificates can be diffed and grepped.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lkts {

struct Certificate {
  struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass; counterexample or note otherwise
  };

  std::string subject;
  std::vector<std::pair<std::string, uint64_t>> counts;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add_count(std::string name, uint64_t value) {
    counts.emplace_back(std::move(name), value);
  }

  void add_pass(std::string name, std::string note = {}) {
    checks.push_back(Check{std::move(name), true, std::move(note)});
  }

  void add_fail(std::string name, std::string witness) {
    checks.push_back(Check{std::move(name), false, std::move(witness)});
  }

  void add(std::string name, bool ok, std::string witness_on_fail) {
    if (ok)
      add_pass(std::move(name));
    else
      add_fail(std::move(name), std::move(witness_on_fail));
  }

  // Appends another certificate's checks under a prefix.
  void absorb(const Certificate& other, const std::string& prefix) {
    for (const auto& c : other.checks)
      checks.push_back(Check{prefix + c.name, c.pass, c.witness});
  }

  void render(std::ostream& os) const {
    os << "subject: " << subject << "\n";
    for (const auto& [name, value] : counts) os << "count " << name << ": " << value << "\n";
    for (const auto& c : checks) {
      os << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
      if (!c.witness.empty()) os << " [" << c.witness << "]";
      os << "\n";
    }
    os << "overall: " << (pass() ? "PASS" : "FAIL") << "\n";
  }
};

}  // namespace lkts
