#include <filesystem>
#include <fstream>
#include <map>

#include "doctest.h"
#include "jgarside/errors.hpp"
#include "jgarside/report.hpp"
#include "jgarside/sweep.hpp"

using namespace jgar;
using nlohmann::json;

namespace {

EnvLookup env_of(std::map<std::string, std::string> const& vars) {
  return [vars](char const* key) -> char const* {
    auto it = vars.find(key);
    return it == vars.end() ? nullptr : it->second.c_str();
  };
}

std::filesystem::path scratch(std::string const& name) {
  auto dir = std::filesystem::temp_directory_path() / ("jgar-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("report json round trip") {
  Workbench bench;
  for (auto const& name : scenario_names()) {
    auto r = run_scenario(name, 2, 3, bench);
    auto text = emit_report(r);
    CHECK(parse_report(text) == r);
    auto j = json::parse(text);
    for (auto key : {"scenario", "params", "checks", "budgets", "elapsed_ms"}) CHECK(j.contains(key));
  }
  VerificationReport odd;
  odd.scenario = "x";
  odd.add("a", false, "witness \"quoted\"\nline");
  odd.add("b", true);
  CHECK(parse_report(emit_report(odd)) == odd);
  CHECK_THROWS_AS(parse_report("{"), InputError);
  CHECK_THROWS_AS(parse_report("{\"scenario\": 3}"), InputError);
}

TEST_CASE("text report") {
  VerificationReport r;
  r.scenario = "demo";
  r.n = 1;
  r.m = 2;
  r.add("holds", true);
  r.add("breaks", false, "u != v");
  auto text = format_report_text(r);
  CHECK(text.find("demo (n=1, m=2): FAIL") == 0);
  CHECK(text.find("[FAIL] breaks") != std::string::npos);
  CHECK(text.find("u != v") != std::string::npos);
}

TEST_CASE("configuration precedence") {
  auto dir = scratch("config");
  auto path = (dir / "cfg.json").string();
  std::ofstream(path) << R"({"class_size": 11, "theta_steps": 12, "sweep_max": 3, "format": "json"})";

  RunConfig cfg;
  CHECK(cfg.budgets.class_size == 200000);
  CHECK(cfg.format == Format::text);
  apply_config_file(cfg, path);
  CHECK(cfg.budgets.class_size == 11);
  CHECK(cfg.budgets.theta_steps == 12);
  CHECK(cfg.sweep_max == 3);
  CHECK(cfg.format == Format::json);
  CHECK(cfg.budgets.divisor_nodes == 50000);

  apply_environment(cfg, env_of({{"JGAR_CLASS_SIZE", "21"}, {"JGAR_FORMAT", "text"}}));
  CHECK(cfg.budgets.class_size == 21);
  CHECK(cfg.budgets.theta_steps == 12);
  CHECK(cfg.format == Format::text);

  CHECK_THROWS_AS(apply_environment(cfg, env_of({{"JGAR_JOBS", "-2"}})), InputError);
  CHECK_THROWS_AS(apply_environment(cfg, env_of({{"JGAR_FORMAT", "xml"}})), InputError);
  CHECK_THROWS_AS(apply_config_json(cfg, json{{"class_size", 0}}), InputError);
  CHECK_THROWS_AS(apply_config_json(cfg, json{{"colour", 1}}), InputError);
  CHECK_THROWS_AS(apply_config_file(cfg, (dir / "missing.json").string()), InputError);
  RunConfig bad;
  bad.jobs = 0;
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("DOT export") {
  auto ctx = MonoidContext::for_params({1, 1});
  auto set = ctx->left_divisors(special_words({1, 1}).Delta);
  auto dot = dot_string(set, ctx->presentation());
  CHECK(dot.find("digraph") == 0);
  std::size_t nodes = 0, edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(nodes == 8);
  CHECK(edges == 9);
  CHECK(dot.find("n0 [label=\"1\"]") != std::string::npos);
  CHECK(dot_string(set, ctx->presentation()) == dot);

  DivisorSet one;
  one.members = {Word{}};
  auto d1 = dot_string(one, ctx->presentation());
  CHECK(d1.find("n0 [label=\"1\"]") != std::string::npos);
  CHECK(d1.find("->") == std::string::npos);

  auto m12 = MonoidContext::for_params({1, 2, Flavor::star});
  auto s12 = m12->left_divisors(special_words({1, 2, Flavor::star}).Delta);
  auto dir = scratch("dot");
  auto path = (dir / "m12.dot").string();
  export_dot(s12, m12->presentation(), path);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = text.find("[label=", pos)) != std::string::npos; ++pos) ++count;
  CHECK(count == 8);
  CHECK_THROWS_AS(export_dot(s12, m12->presentation(), (dir / "no" / "such" / "x.dot").string()), Error);
}

TEST_CASE("certificate cache") {
  auto dir = scratch("cache");
  CertificateCache cache(dir.string());
  auto ctx = MonoidContext::for_params({1, 2});
  auto Delta = special_words({1, 2}).Delta;
  CertifyOptions opts;
  auto key = CertificateCache::key(ctx->presentation(), Delta, ctx->budgets(), opts);
  CHECK_FALSE(cache.load(key));
  auto summary = certificate_json(verify_garside(*ctx, Delta, opts), ctx->presentation());
  cache.store(key, summary);
  auto hit = cache.load(key);
  REQUIRE(hit);
  CHECK(*hit == summary);
  Budgets other;
  other.class_size = 7;
  CHECK(CertificateCache::key(ctx->presentation(), Delta, other, opts) != key);
  CHECK_FALSE(CertificateCache("").load(key));
}

TEST_CASE("sweep is independent of the number of jobs") {
  SweepOptions o;
  o.max_m = 3;
  o.garside_max = 2;
  o.cancellation_length = 4;
  auto a = run_sweep(o);
  o.jobs = 3;
  auto b = run_sweep(o);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].m == b[i].m);
    REQUIRE(a[i].cells.size() == b[i].cells.size());
    for (std::size_t k = 0; k < a[i].cells.size(); ++k) {
      CHECK(a[i].cells[k].name == b[i].cells[k].name);
      CHECK(a[i].cells[k].verdict == b[i].cells[k].verdict);
    }
    CHECK(a[i].pass());
  }
  auto table = format_sweep_table(a);
  CHECK(table.find("(2,3)") != std::string::npos);
  CHECK(sweep_json(a).size() == a.size());
}
