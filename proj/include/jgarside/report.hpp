#pragma once

#include <functional>
#include <optional>
#include <string>

#include "json.hpp"
#include "jgarside/iso.hpp"
#include "jgarside/monoid.hpp"

namespace jgar {

enum class Format { text, json };

struct RunConfig {
  Budgets budgets;
  int sweep_max = 4;
  int jobs = 1;
  Format format = Format::text;
  std::string output;     // report file; stdout when empty
  std::string cache_dir;  // certificate cache; disabled when empty

  // Throws InputError on a non-positive budget or bound.
  void validate() const;
};

// Precedence is flags > JGAR_* environment > config file > defaults; callers
// apply the layers in the reverse order.
// The config file is a JSON object with keys class_size, theta_steps,
// divisor_nodes, sweep_max, jobs, format, output, cache_dir.
void apply_config_file(RunConfig& cfg, std::string const& path);
void apply_config_json(RunConfig& cfg, nlohmann::json const& j);
using EnvLookup = std::function<char const*(char const*)>;
void apply_environment(RunConfig& cfg, EnvLookup const& env);

nlohmann::json to_json(Budgets const& b);
Budgets budgets_from_json(nlohmann::json const& j);

nlohmann::json to_json(VerificationReport const& r);
VerificationReport report_from_json(nlohmann::json const& j);
std::string emit_report(VerificationReport const& r);
VerificationReport parse_report(std::string const& text);
std::string format_report_text(VerificationReport const& r);

// Summary of a certificate; simples are reported by count.
nlohmann::json certificate_json(GarsideCertificate const& cert, Presentation const& p);

// DOT digraph of a divisor set: one node per member (shortlex order), one edge
// per covering pair.
std::string dot_string(DivisorSet const& set, Presentation const& p);
void export_dot(DivisorSet const& set, Presentation const& p, std::string const& path);

// Certificate summaries on disk, keyed by presentation, Delta, budgets and
// certification options.
class CertificateCache {
 public:
  explicit CertificateCache(std::string dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }
  static std::string key(Presentation const& p, Word const& Delta, Budgets const& b, CertifyOptions const& o);
  std::optional<nlohmann::json> load(std::string const& key) const;
  void store(std::string const& key, nlohmann::json const& summary) const;

 private:
  std::string dir_;
};

}  // namespace jgar
