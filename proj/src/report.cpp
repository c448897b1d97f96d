#include "jgarside/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "jgarside/errors.hpp"

namespace jgar {

using nlohmann::json;

void RunConfig::validate() const {
  if (budgets.class_size == 0 || budgets.theta_steps == 0 || budgets.divisor_nodes == 0)
    throw InputError("budgets must be positive");
  if (sweep_max < 1) throw InputError("sweep bound must be positive");
  if (jobs < 1) throw InputError("jobs must be positive");
}

namespace {

std::size_t positive(json const& v, char const* key) {
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw InputError(std::string("config: '") + key + "' must be a positive integer");
  return v.get<std::size_t>();
}

std::size_t positive(char const* text, char const* key) {
  char* end = nullptr;
  long long v = std::strtoll(text, &end, 10);
  if (end == text || *end != '\0' || v <= 0)
    throw InputError(std::string("environment: '") + key + "' must be a positive integer");
  return static_cast<std::size_t>(v);
}

Format parse_format(std::string const& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  throw InputError("unknown format '" + s + "'");
}

}  // namespace

void apply_config_json(RunConfig& cfg, json const& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  for (auto const& [key, v] : j.items()) {
    if (key == "class_size") cfg.budgets.class_size = positive(v, "class_size");
    else if (key == "theta_steps") cfg.budgets.theta_steps = positive(v, "theta_steps");
    else if (key == "divisor_nodes") cfg.budgets.divisor_nodes = positive(v, "divisor_nodes");
    else if (key == "sweep_max") cfg.sweep_max = static_cast<int>(positive(v, "sweep_max"));
    else if (key == "jobs") cfg.jobs = static_cast<int>(positive(v, "jobs"));
    else if (key == "format") cfg.format = parse_format(v.get<std::string>());
    else if (key == "output") cfg.output = v.get<std::string>();
    else if (key == "cache_dir") cfg.cache_dir = v.get<std::string>();
    else throw InputError("config: unknown key '" + key + "'");
  }
}

void apply_config_file(RunConfig& cfg, std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (json::exception const& e) {
    throw InputError("config file '" + path + "': " + e.what());
  }
  apply_config_json(cfg, j);
}

void apply_environment(RunConfig& cfg, EnvLookup const& env) {
  if (auto v = env("JGAR_CLASS_SIZE")) cfg.budgets.class_size = positive(v, "JGAR_CLASS_SIZE");
  if (auto v = env("JGAR_THETA_STEPS")) cfg.budgets.theta_steps = positive(v, "JGAR_THETA_STEPS");
  if (auto v = env("JGAR_DIVISOR_NODES")) cfg.budgets.divisor_nodes = positive(v, "JGAR_DIVISOR_NODES");
  if (auto v = env("JGAR_SWEEP_MAX")) cfg.sweep_max = static_cast<int>(positive(v, "JGAR_SWEEP_MAX"));
  if (auto v = env("JGAR_JOBS")) cfg.jobs = static_cast<int>(positive(v, "JGAR_JOBS"));
  if (auto v = env("JGAR_FORMAT")) cfg.format = parse_format(v);
  if (auto v = env("JGAR_OUTPUT")) cfg.output = v;
  if (auto v = env("JGAR_CACHE_DIR")) cfg.cache_dir = v;
}

json to_json(Budgets const& b) {
  return {{"class_size", b.class_size}, {"theta_steps", b.theta_steps}, {"divisor_nodes", b.divisor_nodes}};
}

Budgets budgets_from_json(json const& j) {
  Budgets b;
  b.class_size = j.at("class_size").get<std::size_t>();
  b.theta_steps = j.at("theta_steps").get<std::size_t>();
  b.divisor_nodes = j.at("divisor_nodes").get<std::size_t>();
  return b;
}

json to_json(VerificationReport const& r) {
  json checks = json::array();
  for (auto const& c : r.checks) {
    json e = {{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  return {{"scenario", r.scenario},
          {"params", {{"n", r.n}, {"m", r.m}}},
          {"checks", std::move(checks)},
          {"budgets", to_json(r.budgets)},
          {"elapsed_ms", r.elapsed_ms},
          {"budget_exceeded", r.budget_exceeded},
          {"pass", r.pass()}};
}

VerificationReport report_from_json(json const& j) {
  VerificationReport r;
  try {
    r.scenario = j.at("scenario").get<std::string>();
    r.n = j.at("params").at("n").get<int>();
    r.m = j.at("params").at("m").get<int>();
    for (auto const& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.value("witness", std::string())});
    r.budgets = budgets_from_json(j.at("budgets"));
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    r.budget_exceeded = j.value("budget_exceeded", false);
  } catch (json::exception const& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string emit_report(VerificationReport const& r) { return to_json(r).dump(2); }

VerificationReport parse_report(std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return report_from_json(j);
}

std::string format_report_text(VerificationReport const& r) {
  std::ostringstream out;
  out << r.scenario << " (n=" << r.n << ", m=" << r.m << "): " << (r.pass() ? "PASS" : "FAIL") << ", "
      << r.checks.size() << " checks, " << r.elapsed_ms << " ms\n";
  for (auto const& c : r.checks) {
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.pass && !c.witness.empty()) out << "\n         " << c.witness;
    out << '\n';
  }
  if (r.budget_exceeded) out << "  budget exceeded\n";
  return out.str();
}

json certificate_json(GarsideCertificate const& cert, Presentation const& p) {
  json ev = json::array();
  for (auto const& e : cert.evidence)
    ev.push_back({{"name", e.name}, {"pass", e.pass}, {"inferred", e.inferred}, {"detail", e.detail}});
  return {{"Delta", p.format(cert.Delta)},
          {"valid", cert.valid()},
          {"simples", cert.simples.members.size()},
          {"hasse_edges", cert.simples.edges.size()},
          {"right_simples", cert.right_simple_count},
          {"evidence", std::move(ev)},
          {"budgets", to_json(cert.budgets)}};
}

std::string dot_string(DivisorSet const& set, Presentation const& p) {
  std::ostringstream out;
  out << "digraph divisors {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < set.members.size(); ++i)
    out << "  n" << i << " [label=\"" << p.format(set.members[i]) << "\"];\n";
  auto edges = set.edges;
  std::sort(edges.begin(), edges.end());
  for (auto const& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

void export_dot(DivisorSet const& set, Presentation const& p, std::string const& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << dot_string(set, p);
  if (!out) throw Error("write failed for '" + path + "'");
}

namespace {

std::string fnv1a(std::string const& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace

std::string CertificateCache::key(Presentation const& p, Word const& Delta, Budgets const& b, CertifyOptions const& o) {
  std::ostringstream s;
  s << canonical_form(p) << "|Delta " << p.format(Delta) << "|" << to_json(b).dump() << "|" << o.enumerate_simples
    << ',' << o.lattice_samples << ',' << o.lattice_probe << ',' << o.cancellation_length << ',' << o.seed;
  return fnv1a(s.str());
}

std::optional<json> CertificateCache::load(std::string const& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir_) / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    json j;
    in >> j;
    return j;
  } catch (json::exception const&) {
    return std::nullopt;
  }
}

void CertificateCache::store(std::string const& key, json const& summary) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  auto final_path = std::filesystem::path(dir_) / (key + ".json");
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write certificate cache in '" + dir_ + "'");
    out << summary.dump(2);
  }
  std::filesystem::rename(tmp, final_path);
}

}  // namespace jgar
