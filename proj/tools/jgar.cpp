// jgar: command-line front end for the jgarside library.
// Exit codes: 0 pass/true, 1 fail/false, 2 budget exceeded, 3 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jgarside/complement.hpp"
#include "jgarside/errors.hpp"
#include "jgarside/group.hpp"
#include "jgarside/iso.hpp"
#include "jgarside/jbraid.hpp"
#include "jgarside/monoid.hpp"
#include "jgarside/report.hpp"
#include "jgarside/sweep.hpp"

using namespace jgar;
using nlohmann::json;

namespace {

struct Source {
  int n = 1;
  int m = 1;
  std::string flavor = "star-star";
  std::string kind = "classical";
  std::string variant = "base";
  std::string preset;
  std::string file;
  std::string delta;
};

struct Flags {
  std::string config;
  std::size_t class_size = 0, theta_steps = 0, divisor_nodes = 0;
  int sweep_max = 0, jobs = 0;
  std::string format, output, cache_dir;
  // Options given on the command line, by name.
  std::vector<CLI::Option*> options;
  bool given(std::string const& name) const {
    for (auto* o : options)
      if (o->check_lname(name) && o->count() > 0) return true;
    return false;
  }
};

void add_source(CLI::App* sub, Source& s) {
  sub->add_option("-n", s.n, "number of x letters in the classical alphabet");
  sub->add_option("-m", s.m, "the second parameter");
  sub->add_option("--flavor", s.flavor, "star-star, star, upper-star or plain");
  sub->add_option("--kind", s.kind, "classical or dual");
  sub->add_option("--variant", s.variant, "base, enlarged or enlarged-opposite");
  sub->add_option("--preset", s.preset, "named fixture presentation");
  sub->add_option("--file", s.file, "presentation file");
  sub->add_option("--delta", s.delta, "Garside element for --file input");
}

void add_run_flags(CLI::App* sub, Flags& f) {
  f.options.push_back(sub->add_option("--config", f.config, "JSON config file (default: $JGAR_CONFIG)"));
  f.options.push_back(sub->add_option("--class-size", f.class_size, "words per rewriting class"));
  f.options.push_back(sub->add_option("--theta-steps", f.theta_steps, "reversing steps per complement"));
  f.options.push_back(sub->add_option("--divisor-nodes", f.divisor_nodes, "nodes per divisor enumeration"));
  f.options.push_back(sub->add_option("--format", f.format, "text or json"));
  f.options.push_back(sub->add_option("--output", f.output, "write the report here"));
  f.options.push_back(sub->add_option("--cache-dir", f.cache_dir, "certificate cache directory"));
}

RunConfig resolve_config(Flags const& f) {
  RunConfig cfg;
  std::string path = f.config;
  if (path.empty())
    if (auto const* v = std::getenv("JGAR_CONFIG")) path = v;
  if (!path.empty()) apply_config_file(cfg, path);
  apply_environment(cfg, [](char const* k) { return static_cast<char const*>(std::getenv(k)); });
  if (f.given("class-size")) cfg.budgets.class_size = f.class_size;
  if (f.given("theta-steps")) cfg.budgets.theta_steps = f.theta_steps;
  if (f.given("divisor-nodes")) cfg.budgets.divisor_nodes = f.divisor_nodes;
  if (f.given("max")) cfg.sweep_max = f.sweep_max;
  if (f.given("jobs")) cfg.jobs = f.jobs;
  if (f.given("format")) {
    if (f.format == "text") cfg.format = Format::text;
    else if (f.format == "json") cfg.format = Format::json;
    else throw InputError("unknown format '" + f.format + "'");
  }
  if (f.given("output")) cfg.output = f.output;
  if (f.given("cache-dir")) cfg.cache_dir = f.cache_dir;
  cfg.validate();
  return cfg;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Resolved {
  Presentation presentation;
  std::optional<BraidParams> params;
};

Resolved resolve(Source const& s) {
  if (!s.preset.empty() && !s.file.empty()) throw InputError("--preset and --file are exclusive");
  if (!s.file.empty()) return {parse_presentation(read_file(s.file)), std::nullopt};
  if (!s.preset.empty()) return {preset_table(s.preset), preset_params(s.preset)};
  BraidParams p{s.n, s.m, parse_flavor(s.flavor), parse_kind(s.kind), parse_variant(s.variant)};
  p.validate();
  return {build_presentation(p), p};
}

std::shared_ptr<MonoidContext> context_for(Resolved const& r, Budgets const& b) {
  if (r.params) return MonoidContext::for_params(*r.params, b);
  return MonoidContext::for_presentation(r.presentation, b);
}

Word delta_for(Resolved const& r, MonoidContext const& ctx, Source const& s) {
  if (!s.delta.empty()) return ctx.presentation().parse_word(s.delta);
  if (r.params) return special_words(*r.params).Delta;
  throw InputError("--delta is required with --file");
}

// Writes to --output or stdout.
void emit(RunConfig const& cfg, std::string const& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw Error("cannot write '" + cfg.output + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string join(std::vector<Word> const& ws, Presentation const& p, char const* sep) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? sep : "") + p.format(ws[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside structures of J-reflection braid monoids"};
  app.require_subcommand(1);
  Source src;
  Flags flags;

  auto* present = app.add_subcommand("present", "print a presentation");
  add_source(present, src);
  add_run_flags(present, flags);
  bool canonical = false;
  present->add_flag("--canonical", canonical, "order-independent form");

  auto* analyze = app.add_subcommand("analyze", "complement, C1 and C2 analysis of a presentation");
  add_source(analyze, src);
  add_run_flags(analyze, flags);
  std::string c2_letters;
  analyze->add_option("--c2", c2_letters, "comma separated letters X for the C2 check");

  auto* certify = app.add_subcommand("certify", "Garside certificate of Delta");
  add_source(certify, src);
  add_run_flags(certify, flags);
  bool no_simples = false;
  std::size_t cancel_length = 4;
  certify->add_flag("--no-simples", no_simples, "skip simple enumeration");
  certify->add_option("--cancel-length", cancel_length, "weight bound of the cancellativity check");

  auto* eq = app.add_subcommand("eq", "monoid word equality");
  add_source(eq, src);
  add_run_flags(eq, flags);
  std::string u_text, v_text, mode = "auto";
  eq->add_option("u", u_text)->required();
  eq->add_option("v", v_text)->required();
  eq->add_option("--mode", mode, "auto, brute or theta");

  auto* geq = app.add_subcommand("geq", "group word equality, e.g. x1.y^-1.z");
  add_source(geq, src);
  add_run_flags(geq, flags);
  std::string model = "fractions";
  geq->add_option("u", u_text)->required();
  geq->add_option("v", v_text)->required();
  geq->add_option("--model", model, "fractions or g33 (words in s, t, u)");

  auto* nf = app.add_subcommand("nf", "greedy normal form");
  add_source(nf, src);
  add_run_flags(nf, flags);
  std::string w_text;
  nf->add_option("w", w_text)->required();

  auto* simples = app.add_subcommand("simples", "left divisors of Delta");
  add_source(simples, src);
  add_run_flags(simples, flags);
  std::string dot_path, div_mode = "theta";
  bool list = false;
  simples->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
  simples->add_option("--mode", div_mode, "theta or prefix");
  simples->add_flag("--list", list, "print every simple");

  auto* iso = app.add_subcommand("iso", "isomorphism scenario");
  add_run_flags(iso, flags);
  std::string scenario;
  int iso_n = 1, iso_m = 1;
  iso->add_option("scenario", scenario, "g33-iso, dihedral-iso, dual-presentation, word-identities, reflection-iso")
      ->required();
  iso->add_option("-n", iso_n);
  iso->add_option("-m", iso_m);

  auto* sweep = app.add_subcommand("sweep", "acceptance matrix over all coprime n <= m <= max");
  add_run_flags(sweep, flags);
  int garside_max = 4;
  flags.options.push_back(sweep->add_option("--max", flags.sweep_max, "largest m"));
  flags.options.push_back(sweep->add_option("--jobs", flags.jobs, "worker threads"));
  sweep->add_option("--garside-max", garside_max, "largest m with a Garside certificate");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 3;
  }

  try {
    RunConfig cfg = resolve_config(flags);
    bool const as_json = cfg.format == Format::json;

    if (present->parsed()) {
      auto r = resolve(src);
      std::string text = canonical ? canonical_form(r.presentation) : serialize(r.presentation);
      emit(cfg, as_json ? json{{"presentation", text}}.dump(2) : text);
      return 0;
    }

    if (analyze->parsed()) {
      auto r = resolve(src);
      auto const& p = r.presentation;
      auto v = validate_presentation(p);
      ThetaTable table(p);
      auto cube = check_cube_sharp(table, cfg.budgets.theta_steps);
      auto c1 = check_C1(table);
      json failures = json::array();
      for (auto const& f : cube.failures)
        failures.push_back(p.name(f.a) + "," + p.name(f.b) + "," + p.name(f.c));
      json labelings = json::array();
      for (auto const& l : c1.labelings)
        labelings.push_back({{"triple", {p.name(l.a1), p.name(l.a2), p.name(l.a3)}}, {"u", p.format(l.u)}});
      json j = {{"valid", v.valid},
                {"issues", v.issues},
                {"homogeneous", is_homogeneous(p)},
                {"classification", to_string(table.classification())},
                {"problems", table.problems()},
                {"cube", {{"pass", cube.pass}, {"inconclusive", cube.inconclusive}, {"failures", failures}}},
                {"c1", {{"pass", c1.pass}, {"labelings", labelings}}}};
      bool ok = v.valid && c1.pass;
      bool budget = cube.inconclusive;
      if (!c2_letters.empty()) {
        LetterSet X;
        std::stringstream ss(c2_letters);
        for (std::string name; std::getline(ss, name, ',');) X.insert(p.letter(name));
        auto oracle = monoid_equality_oracle(cfg.budgets);
        auto c2 = check_C2(p, X, oracle, oracle);
        auto bullet = [](C2Bullet const& b) {
          return json{{"pass", b.pass}, {"inconclusive", b.inconclusive}, {"detail", b.detail}};
        };
        j["c2"] = {{"pass", c2.pass},
                   {"inconclusive", c2.inconclusive},
                   {"c1", bullet(c2.c1)},
                   {"weights", bullet(c2.weights)},
                   {"isomorphism", bullet(c2.isomorphism)}};
        ok = ok && c2.pass;
        budget = budget || c2.inconclusive;
      }
      emit(cfg, j.dump(2));
      if (!ok && budget) return 2;
      return ok ? 0 : 1;
    }

    if (certify->parsed()) {
      auto r = resolve(src);
      auto ctx = context_for(r, cfg.budgets);
      Word Delta = delta_for(r, *ctx, src);
      CertifyOptions opts;
      opts.enumerate_simples = !no_simples;
      opts.cancellation_length = cancel_length;
      CertificateCache cache(cfg.cache_dir);
      auto key = CertificateCache::key(ctx->presentation(), Delta, cfg.budgets, opts);
      json summary;
      if (auto hit = cache.load(key)) {
        summary = *hit;
        summary["cached"] = true;
      } else {
        auto cert = verify_garside(*ctx, Delta, opts);
        summary = certificate_json(cert, ctx->presentation());
        cache.store(key, summary);
      }
      bool const valid = summary.value("valid", false);
      if (as_json) {
        emit(cfg, summary.dump(2));
      } else {
        std::ostringstream out;
        out << "Delta: " << summary["Delta"].get<std::string>() << '\n';
        for (auto const& e : summary["evidence"])
          out << "  [" << (e["pass"].get<bool>() ? "ok" : "FAIL") << "] " << e["name"].get<std::string>()
              << (e["inferred"].get<bool>() ? " (inferred)" : "") << ": " << e["detail"].get<std::string>() << '\n';
        if (!no_simples) out << "simples: " << summary["simples"] << '\n';
        out << (valid ? "certificate valid" : "certificate INVALID") << '\n';
        emit(cfg, out.str());
      }
      return valid ? 0 : 1;
    }

    if (eq->parsed()) {
      auto r = resolve(src);
      auto ctx = context_for(r, cfg.budgets);
      EqMode em = mode == "brute" ? EqMode::brute : mode == "theta" ? EqMode::theta : EqMode::automatic;
      if (mode != "auto" && mode != "brute" && mode != "theta") throw InputError("unknown mode '" + mode + "'");
      auto const& p = ctx->presentation();
      bool const same = ctx->words_equal(p.parse_word(u_text), p.parse_word(v_text), em);
      emit(cfg, as_json ? json{{"equal", same}}.dump(2) : (same ? "equal" : "not equal"));
      return same ? 0 : 1;
    }

    if (geq->parsed()) {
      bool same = false;
      if (model == "g33") {
        auto A = g33_presentation();
        same = g33_form(parse_signed(A, u_text)) == g33_form(parse_signed(A, v_text));
      } else if (model == "fractions") {
        auto r = resolve(src);
        auto ctx = context_for(r, cfg.budgets);
        CertifyOptions light;
        light.enumerate_simples = false;
        auto cert = verify_garside(*ctx, delta_for(r, *ctx, src), light);
        FractionEngine engine(ctx, cert);
        auto const& p = ctx->presentation();
        same = group_equal(engine, parse_signed(p, u_text), parse_signed(p, v_text));
      } else {
        throw InputError("unknown model '" + model + "'");
      }
      emit(cfg, as_json ? json{{"equal", same}}.dump(2) : (same ? "equal" : "not equal"));
      return same ? 0 : 1;
    }

    if (nf->parsed()) {
      auto r = resolve(src);
      auto ctx = context_for(r, cfg.budgets);
      auto const& p = ctx->presentation();
      auto factors = greedy_nf(*ctx, delta_for(r, *ctx, src), p.parse_word(w_text));
      std::vector<std::string> names;
      for (auto const& f : factors) names.push_back(p.format(f));
      emit(cfg, as_json ? json{{"factors", names}}.dump(2) : join(factors, p, " | "));
      return 0;
    }

    if (simples->parsed()) {
      auto r = resolve(src);
      auto ctx = context_for(r, cfg.budgets);
      if (div_mode != "theta" && div_mode != "prefix") throw InputError("unknown mode '" + div_mode + "'");
      auto set = ctx->left_divisors(delta_for(r, *ctx, src),
                                    div_mode == "prefix" ? DivMode::prefix_oracle : DivMode::theta_bfs);
      auto const& p = ctx->presentation();
      if (!dot_path.empty()) export_dot(set, p, dot_path);
      if (as_json) {
        json j = {{"count", set.members.size()}, {"edges", set.edges.size()}};
        if (list) {
          std::vector<std::string> names;
          for (auto const& w : set.members) names.push_back(p.format(w));
          j["members"] = names;
        }
        emit(cfg, j.dump(2));
      } else {
        std::string text = "simples: " + std::to_string(set.members.size()) +
                           "\nhasse edges: " + std::to_string(set.edges.size()) + "\n";
        if (list) text += join(set.members, p, "\n") + "\n";
        emit(cfg, text);
      }
      return 0;
    }

    if (iso->parsed()) {
      Workbench bench(cfg.budgets);
      auto rep = run_scenario(scenario, iso_n, iso_m, bench);
      emit(cfg, as_json ? emit_report(rep) : format_report_text(rep));
      if (rep.budget_exceeded) return 2;
      return rep.pass() ? 0 : 1;
    }

    if (sweep->parsed()) {
      SweepOptions so;
      so.max_m = cfg.sweep_max;
      so.jobs = cfg.jobs;
      so.budgets = cfg.budgets;
      so.garside_max = garside_max;
      so.cache_dir = cfg.cache_dir;
      auto rows = run_sweep(so);
      emit(cfg, as_json ? sweep_json(rows).dump(2) : format_sweep_table(rows));
      bool fail = false, budget = false;
      for (auto const& r : rows) {
        for (auto const& c : r.cells) {
          fail = fail || c.verdict == "FAIL";
          budget = budget || c.verdict == "budget";
        }
      }
      return fail ? 1 : budget ? 2 : 0;
    }
  } catch (InputError const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 3;
  } catch (BudgetExceeded const& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 3;
}
