#pragma once

#include <string>
#include <vector>

#include "jgarside/monoid.hpp"
#include "jgarside/report.hpp"

namespace jgar {

struct SweepOptions {
  int max_m = 4;
  int jobs = 1;
  Budgets budgets;
  // Garside certificates are computed for m up to this bound.
  int garside_max = 4;
  // Divisor enumeration budget used for certificates (the larger of this and
  // budgets.divisor_nodes).
  std::size_t certify_nodes = 2000000;
  std::size_t cancellation_length = 6;
  std::string cache_dir;
};

struct SweepCell {
  std::string name;
  std::string verdict;  // "pass", "FAIL", "budget", "-" when undefined
  std::string detail;
};

struct SweepRow {
  int n = 0;
  int m = 0;
  std::vector<SweepCell> cells;
  long long elapsed_ms = 0;
  bool pass() const;
  bool budget_exceeded() const;
};

// Every coprime pair n <= m <= max_m, rows in (m, n) order whatever the
// number of jobs.
std::vector<SweepRow> run_sweep(SweepOptions const& options);
SweepRow sweep_pair(int n, int m, SweepOptions const& options);
std::string format_sweep_table(std::vector<SweepRow> const& rows);
nlohmann::json sweep_json(std::vector<SweepRow> const& rows);

}  // namespace jgar
