#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jgarside/group.hpp"
#include "jgarside/jbraid.hpp"
#include "jgarside/monoid.hpp"

namespace jgar {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // words involved, or the failure
  friend bool operator==(Check const&, Check const&) = default;
};

struct VerificationReport {
  std::string scenario;
  int n = 0;
  int m = 0;
  std::vector<Check> checks;
  Budgets budgets;
  long long elapsed_ms = 0;
  bool budget_exceeded = false;

  bool pass() const;
  void add(std::string name, bool pass, std::string witness = {});
  friend bool operator==(VerificationReport const&, VerificationReport const&) = default;
};

// Contexts and fraction engines shared between scenarios, keyed by label.
class Workbench {
 public:
  explicit Workbench(Budgets budgets = {}) : budgets_(budgets) {}
  Budgets const& budgets() const { return budgets_; }

  ContextPtr context(BraidParams const& params);
  // Light certificate (no simple enumeration) of the special Delta.
  std::shared_ptr<FractionEngine const> engine(BraidParams const& params);
  OraclePtr oracle(BraidParams const& params);

 private:
  Budgets budgets_;
  std::mutex mutex_;
  std::map<std::string, ContextPtr> contexts_;
  std::map<std::string, std::shared_ptr<FractionEngine const>> engines_;
};

std::vector<std::string> scenario_names();
// Dispatch by name: g33-iso, dihedral-iso, dual-presentation, word-identities,
// reflection-iso.
VerificationReport run_scenario(std::string const& name, int n, int m, Workbench& bench);

VerificationReport verify_thm_3_18(int n, int m, Workbench& bench);
VerificationReport verify_thm_3_27(int n, int m, Workbench& bench);
VerificationReport verify_prop_4_6(int n, int m, Workbench& bench);
VerificationReport verify_word_identities(int n, int m, Workbench& bench);
VerificationReport verify_prop_3_37(int n, int m, Workbench& bench);

// Images of the generators of B**(n, m) in G(3,3), as signed words over
// g33_presentation(). Source letters are named by `names` (n x-letters, then
// the y and z letters).
HomSpec phi_classical(int n, int m, Presentation const& source);

}  // namespace jgar
