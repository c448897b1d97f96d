#include "jgarside/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "jgarside/complement.hpp"
#include "jgarside/errors.hpp"
#include "jgarside/iso.hpp"
#include "jgarside/jbraid.hpp"

namespace jgar {

bool SweepRow::pass() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](SweepCell const& c) { return c.verdict == "pass" || c.verdict == "-"; });
}

bool SweepRow::budget_exceeded() const {
  return std::any_of(cells.begin(), cells.end(), [](SweepCell const& c) { return c.verdict == "budget"; });
}

namespace {

std::string verdict(bool ok) { return ok ? "pass" : "FAIL"; }

template <class F>
SweepCell guarded(std::string name, F&& body) {
  SweepCell cell{std::move(name), "FAIL", {}};
  try {
    body(cell);
  } catch (BudgetExceeded const& e) {
    cell.verdict = "budget";
    cell.detail = e.what();
  } catch (Error const& e) {
    cell.verdict = "FAIL";
    cell.detail = e.what();
  }
  return cell;
}

SweepCell c1_cell(int n, int m) {
  return guarded("C1", [&](SweepCell& cell) {
    bool ok = true;
    for (auto kind : {Kind::classical, Kind::dual})
      for (auto variant : {Variant::enlarged, Variant::enlarged_opposite}) {
        BraidParams p{n, m, Flavor::star_star, kind, variant};
        if (!check_C1(build_presentation(p)).pass) {
          ok = false;
          cell.detail += to_string(kind) + " " + to_string(variant) + " fails; ";
        }
      }
    cell.verdict = verdict(ok);
  });
}

SweepCell garside_cell(int n, int m, Kind kind, SweepOptions const& o) {
  BraidParams p{n, m, Flavor::star_star, kind, Variant::base};
  return guarded(kind == Kind::classical ? "garside-M" : "garside-D", [&](SweepCell& cell) {
    Budgets b = o.budgets;
    b.divisor_nodes = std::max(b.divisor_nodes, o.certify_nodes);
    CertifyOptions opts;
    opts.cancellation_length = o.cancellation_length;
    Word const Delta = special_words(p).Delta;
    CertificateCache cache(o.cache_dir);
    auto key = CertificateCache::key(build_presentation(p), Delta, b, opts);
    if (auto hit = cache.load(key)) {
      cell.verdict = verdict(hit->value("valid", false));
      cell.detail = std::to_string(hit->value("simples", 0)) + " simples (cached)";
      return;
    }
    auto ctx = MonoidContext::for_params(p, b);
    auto cert = verify_garside(*ctx, Delta, opts);
    cell.verdict = verdict(cert.valid());
    cell.detail = std::to_string(cert.simples.members.size()) + " simples";
    for (auto const& e : cert.evidence)
      if (!e.pass) cell.detail += "; " + e.name + ": " + e.detail;
    cache.store(key, certificate_json(cert, ctx->presentation()));
  });
}

SweepCell c2_cell(int n, int m, SweepOptions const& o) {
  return guarded("C2", [&](SweepCell& cell) {
    struct Case {
      Kind kind;
      std::vector<std::string> letters;
      bool defined;
    };
    std::vector<std::string> zs;
    for (int i = 1; i <= m; ++i) zs.push_back(z_name(i));
    std::vector<Case> cases = {{Kind::classical, {"z"}, m >= 2},
                               {Kind::classical, {"y"}, n >= 2},
                               {Kind::dual, {"y"}, n >= 2},
                               {Kind::dual, zs, n >= 2}};
    bool any = false, ok = true;
    auto oracle = monoid_equality_oracle(o.budgets);
    for (auto const& c : cases) {
      if (!c.defined) continue;
      any = true;
      auto p = build_presentation({n, m, Flavor::star_star, c.kind, Variant::enlarged});
      LetterSet X;
      for (auto const& name : c.letters) X.insert(p.letter(name));
      auto rep = check_C2(p, X, oracle, oracle);
      if (rep.inconclusive) throw BudgetExceeded("C2 oracle gave up: " + rep.isomorphism.detail);
      if (!rep.pass) {
        ok = false;
        cell.detail += to_string(c.kind) + "/" + c.letters.front() + ": " + rep.c1.detail + rep.weights.detail +
                       rep.isomorphism.detail + "; ";
      }
    }
    cell.verdict = any ? verdict(ok) : "-";
  });
}

SweepCell iso_cell(std::string const& scenario, int n, int m, Workbench& bench) {
  return guarded(scenario, [&](SweepCell& cell) {
    if (scenario == "dihedral-iso" && !(n < m && m >= 2)) {
      cell.verdict = "-";
      return;
    }
    auto r = run_scenario(scenario, n, m, bench);
    cell.verdict = r.budget_exceeded ? "budget" : verdict(r.pass());
    for (auto const& c : r.checks)
      if (!c.pass) cell.detail += c.name + "; ";
  });
}

}  // namespace

SweepRow sweep_pair(int n, int m, SweepOptions const& o) {
  auto t0 = std::chrono::steady_clock::now();
  SweepRow row{n, m, {}, 0};
  row.cells.push_back(guarded("arith", [&](SweepCell& cell) { cell.verdict = verdict(inverse_identity_holds(n, m)); }));
  row.cells.push_back(c1_cell(n, m));
  for (auto kind : {Kind::classical, Kind::dual}) {
    if (m <= o.garside_max)
      row.cells.push_back(garside_cell(n, m, kind, o));
    else
      row.cells.push_back({kind == Kind::classical ? "garside-M" : "garside-D", "-", "above the certificate bound"});
  }
  row.cells.push_back(c2_cell(n, m, o));
  Workbench bench(o.budgets);
  for (auto const& s : scenario_names()) row.cells.push_back(iso_cell(s, n, m, bench));
  row.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::vector<SweepRow> run_sweep(SweepOptions const& o) {
  if (o.max_m < 1 || o.max_m > 60) throw InputError("sweep bound must lie in [1, 60]");
  std::vector<std::pair<int, int>> pairs;
  for (int m = 1; m <= o.max_m; ++m)
    for (int n = 1; n <= m; ++n)
      if (std::gcd(n, m) == 1) pairs.emplace_back(n, m);
  std::vector<SweepRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < pairs.size();) rows[i] = sweep_pair(pairs[i].first, pairs[i].second, o);
  };
  int const jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(pairs.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string format_sweep_table(std::vector<SweepRow> const& rows) {
  std::ostringstream out;
  if (rows.empty()) return "";
  std::vector<std::size_t> width;
  for (auto const& c : rows.front().cells) width.push_back(std::max<std::size_t>(c.name.size(), 6));
  out << std::left << std::setw(8) << "(n,m)";
  for (std::size_t i = 0; i < width.size(); ++i) out << "  " << std::setw(static_cast<int>(width[i])) << rows.front().cells[i].name;
  out << "  time\n";
  for (auto const& r : rows) {
    out << std::setw(8) << ("(" + std::to_string(r.n) + "," + std::to_string(r.m) + ")");
    for (std::size_t i = 0; i < r.cells.size(); ++i) out << "  " << std::setw(static_cast<int>(width[i])) << r.cells[i].verdict;
    out << "  " << r.elapsed_ms << " ms\n";
  }
  for (auto const& r : rows)
    for (auto const& c : r.cells)
      if (c.verdict == "FAIL" || c.verdict == "budget")
        out << "(" << r.n << "," << r.m << ") " << c.name << ": " << c.detail << '\n';
  return out.str();
}

nlohmann::json sweep_json(std::vector<SweepRow> const& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (auto const& r : rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (auto const& c : r.cells) cells.push_back({{"name", c.name}, {"verdict", c.verdict}, {"detail", c.detail}});
    out.push_back({{"params", {{"n", r.n}, {"m", r.m}}}, {"cells", cells}, {"pass", r.pass()}, {"elapsed_ms", r.elapsed_ms}});
  }
  return out;
}

}  // namespace jgar
