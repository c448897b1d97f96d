#include "jgarside/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "jgarside/errors.hpp"

namespace jgar {

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

bool GarsideCertificate::valid() const {
  if (evidence.empty()) return false;
  return std::all_of(evidence.begin(), evidence.end(), [](Evidence const& e) { return e.pass; });
}

Evidence const* GarsideCertificate::find(std::string const& name) const {
  for (auto const& e : evidence)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

bool same_alphabet(Presentation const& a, Presentation const& b) {
  return a.names() == b.names() && a.weights() == b.weights();
}

// Letter permutations k -> a + k or a - k (mod the count) on x indices and on
// z indices, other letters fixed.
std::vector<std::vector<Letter>> index_symmetries(Presentation const& p, int nx, int nz) {
  std::vector<std::vector<Letter>> out;
  auto image = [](std::string const& name, char stem, int a, int sign, int count) -> std::string {
    if (name.size() < 2 || name[0] != stem) return name;
    int k = std::stoi(name.substr(1)) - 1;
    return std::string(1, stem) + std::to_string(((a + sign * k) % count + count) % count + 1);
  };
  for (int sx : {-1, 1})
    for (int a = 0; a < nx; ++a)
      for (int sz : {-1, 1})
        for (int b = 0; b < nz; ++b) {
          std::vector<Letter> perm(p.size());
          for (std::size_t s = 0; s < p.size(); ++s) {
            auto t = image(image(p.names()[s], 'x', a, sx, nx), 'z', b, sz, nz);
            auto found = p.find(t);
            perm[s] = found ? *found : static_cast<Letter>(s);
          }
          out.push_back(std::move(perm));
        }
  return out;
}

}  // namespace

std::shared_ptr<MonoidContext> MonoidContext::create(Presentation base, std::optional<Presentation> complemented,
                                                     Budgets budgets) {
  auto v = validate_presentation(base);
  if (!v.valid) throw InputError("invalid presentation: " + v.issues.front());
  std::shared_ptr<MonoidContext> ctx(new MonoidContext());
  ctx->base_ = std::move(base);
  ctx->budgets_ = budgets;
  ctx->homogeneous_ = is_homogeneous(ctx->base_);
  ctx->rules_.assign(ctx->base_.size(), {});
  for (auto const& r : ctx->base_.relations()) {
    if (r.lhs == r.rhs) continue;
    ctx->rules_[r.lhs.front()].emplace_back(r.lhs, r.rhs);
    ctx->rules_[r.rhs.front()].emplace_back(r.rhs, r.lhs);
  }
  if (complemented) {
    if (!same_alphabet(ctx->base_, *complemented))
      throw InputError("complemented presentation must use the same alphabet");
    ctx->complemented_ = std::move(complemented);
    ctx->certify_fast_path();
  }
  return ctx;
}

void MonoidContext::certify_fast_path() {
  auto table = std::make_shared<ThetaTable const>(*complemented_);
  c1_ = is_homogeneous(*complemented_) && check_C1(*table).pass;
  theta_ = std::make_unique<ThetaEngine>(table, budgets_.theta_steps, 0);
  if (!c1_ || !homogeneous_) {
    equivalent_ = false;
    equivalence_detail_ = c1_ ? "base presentation is not homogeneous" : "complemented presentation fails C1";
    return;
  }
  // Relations of the base hold in the complemented monoid (complement test),
  // and relations of the complemented presentation hold in the base monoid
  // (rewriting closure of the base).
  for (auto const& r : base_.relations()) {
    auto rev = theta_->reverse(r.lhs, r.rhs);
    if (rev.status == ThetaStatus::budget_exceeded) {
      equivalence_detail_ = "budget exceeded on " + base_.format(r);
      return;
    }
    if (!rev.theta_uv.empty() || !rev.theta_vu.empty() || rev.status != ThetaStatus::defined) {
      equivalence_detail_ = "base relation fails in the complemented presentation: " + base_.format(r);
      return;
    }
  }
  for (auto const& r : complemented_->relations()) {
    if (!words_equal(r.lhs, r.rhs, EqMode::brute)) {
      equivalence_detail_ = "complemented relation fails in the base presentation: " + base_.format(r);
      return;
    }
  }
  equivalent_ = true;
  equivalence_detail_ = "both presentations present the same monoid";
}

std::shared_ptr<MonoidContext> MonoidContext::for_params(BraidParams params, Budgets budgets) {
  params.validate();
  BraidParams p = params;
  p.variant = Variant::base;
  Presentation base = build_presentation(p);
  p.variant = Variant::enlarged;
  Presentation enlarged = build_presentation(p);
  auto ctx = create(base, enlarged, budgets);
  p.variant = Variant::enlarged_opposite;
  Presentation raw = build_presentation(p);
  Presentation op_enlarged = relabel(raw, opposite_relabeling(raw, p));
  auto op = create(opposite_presentation(base), op_enlarged, budgets);
  if (!op->theta_ready() && params.flavor != Flavor::star_star) {
    // Killing letters in the enlarged opposite presentation need not give the
    // opposite monoid; use M^op = M through a rotation or reflection of indices.
    int const nx = params.kind == Kind::classical ? params.n : params.m;
    for (auto const& perm : index_symmetries(enlarged, nx, params.m)) {
      try {
        auto cand = create(opposite_presentation(base), relabel(enlarged, perm), budgets);
        if (cand->theta_ready()) {
          op = cand;
          break;
        }
      } catch (BudgetExceeded const&) {
      }
    }
  }
  ctx->opposite_ = op;
  return ctx;
}

std::shared_ptr<MonoidContext> MonoidContext::for_presentation(Presentation p, Budgets budgets) {
  bool const full = ThetaTable(p).classification() == Classification::right_full;
  auto ctx = create(p, full ? std::optional<Presentation>(p) : std::nullopt, budgets);
  Presentation op = opposite_presentation(p);
  bool const op_full = ThetaTable(op).classification() == Classification::right_full;
  ctx->opposite_ = create(op, op_full ? std::optional<Presentation>(op) : std::nullopt, budgets);
  return ctx;
}

std::vector<Word> MonoidContext::closure(Word const& w) const {
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> order{w};
  for (std::size_t head = 0; head < order.size(); ++head) {
    Word const cur = order[head];
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (auto const& [from, to] : rules_[cur[i]]) {
        if (i + from.size() > cur.size()) continue;
        if (!std::equal(from.begin(), from.end(), cur.begin() + static_cast<std::ptrdiff_t>(i))) continue;
        Word next = cur.prefix(i);
        next += to;
        next += cur.suffix_from(i + from.size());
        if (seen.insert(next).second) {
          if (seen.size() > budgets_.class_size)
            throw BudgetExceeded("rewriting class of " + base_.format(w) + " exceeds " +
                                 std::to_string(budgets_.class_size) + " words");
          order.push_back(std::move(next));
        }
      }
    }
  }
  return order;
}

bool MonoidContext::use_theta(EqMode mode) const {
  if (mode == EqMode::theta) {
    if (!theta_ready()) throw NotCertified("complement fast path needs a certified C1 presentation");
    return true;
  }
  return mode == EqMode::automatic && theta_ready();
}

namespace {

Reversal checked(ThetaEngine const& e, Word const& u, Word const& v) {
  auto r = e.reverse(u, v);
  if (r.status == ThetaStatus::budget_exceeded)
    throw BudgetExceeded("word reversing exceeded " + std::to_string(e.step_budget()) + " steps");
  return r;
}

}  // namespace

bool MonoidContext::words_equal(Word const& u, Word const& v, EqMode mode) const {
  if (base_.weight(u) != base_.weight(v)) return homogeneous_ ? false : canonical_brute(u) == canonical_brute(v);
  if (u == v) return true;
  if (use_theta(mode)) {
    auto r = checked(*theta_, u, v);
    return r.status == ThetaStatus::defined && r.theta_uv.empty() && r.theta_vu.empty();
  }
  auto cls = closure(u);
  return std::find(cls.begin(), cls.end(), v) != cls.end();
}

Word MonoidContext::canonical_brute(Word const& w) const {
  auto cls = closure(w);
  return *std::min_element(cls.begin(), cls.end());
}

Word MonoidContext::canonical_theta(Word const& w) const {
  Word out, rest = w;
  while (!rest.empty()) {
    bool found = false;
    for (Letter s = 0; s < rest.front(); ++s) {
      auto r = checked(*theta_, Word{s}, rest);
      if (r.status == ThetaStatus::defined && r.theta_vu.empty()) {
        out.push_back(s);
        rest = std::move(r.theta_uv);
        found = true;
        break;
      }
    }
    if (!found) {
      out.push_back(rest.front());
      rest = rest.suffix_from(1);
    }
  }
  return out;
}

Word MonoidContext::canonical(Word const& w, EqMode mode) const {
  bool const theta = use_theta(mode);
  if (mode == EqMode::automatic) {
    std::lock_guard lock(mutex_);
    if (auto it = canon_cache_.find(w); it != canon_cache_.end()) return it->second;
  }
  Word c = theta ? canonical_theta(w) : canonical_brute(w);
  if (mode == EqMode::automatic) {
    std::lock_guard lock(mutex_);
    if (canon_cache_.size() > (1u << 20)) canon_cache_.clear();
    canon_cache_.emplace(w, c);
  }
  return c;
}

Division MonoidContext::divides_left(Word const& u, Word const& v, EqMode mode) const {
  if (homogeneous_ && base_.weight(u) > base_.weight(v)) return {};
  if (use_theta(mode)) {
    auto r = checked(*theta_, u, v);
    if (r.status != ThetaStatus::defined || !r.theta_vu.empty()) return {};
    return {true, canonical(r.theta_uv, mode)};
  }
  auto cu = closure(u);
  std::unordered_set<Word, WordHash> us(cu.begin(), cu.end());
  auto const wu = base_.weight(u);
  for (auto const& x : closure(v)) {
    std::size_t len = 0;
    unsigned long acc = 0;
    while (len < x.size() && acc < wu) acc += base_.weight(x[len++]);
    if (acc != wu) continue;
    if (us.count(x.prefix(len))) return {true, canonical_brute(x.suffix_from(len))};
  }
  return {};
}

bool MonoidContext::left_divides(Word const& u, Word const& v) const {
  if (homogeneous_ && base_.weight(u) > base_.weight(v)) return false;
  if (!theta_ready()) return divides_left(u, v).divides;
  auto r = checked(*theta_, u, v);
  return r.status == ThetaStatus::defined && r.theta_vu.empty();
}

Division MonoidContext::divides_right(Word const& u, Word const& v) const {
  if (opposite_) {
    auto d = opposite_->divides_left(u.reversed(), v.reversed());
    if (!d.divides) return {};
    return {true, canonical(d.quotient.reversed())};
  }
  if (homogeneous_ && base_.weight(u) > base_.weight(v)) return {};
  auto cu = closure(u);
  std::unordered_set<Word, WordHash> us(cu.begin(), cu.end());
  auto const wu = base_.weight(u);
  for (auto const& x : closure(v)) {
    std::size_t len = 0;
    unsigned long acc = 0;
    while (len < x.size() && acc < wu) acc += base_.weight(x[x.size() - 1 - len++]);
    if (acc != wu) continue;
    if (us.count(x.suffix_from(x.size() - len))) return {true, canonical_brute(x.prefix(x.size() - len))};
  }
  return {};
}

std::optional<std::pair<Word, Word>> MonoidContext::right_lcm(Word const& u, Word const& v) const {
  if (!theta_ready()) throw NotCertified("right lcm needs a certified C1 presentation");
  auto r = checked(*theta_, u, v);
  if (r.status != ThetaStatus::defined) return std::nullopt;
  return std::make_pair(r.theta_uv, r.theta_vu);
}

namespace {

std::vector<Letter> atoms_of(MonoidContext const& ctx) {
  std::vector<Letter> atoms;
  for (std::size_t i = 0; i < ctx.presentation().size(); ++i) {
    auto s = static_cast<Letter>(i);
    auto cls = ctx.closure(Word{s});
    if (cls.size() == 1) atoms.push_back(s);
  }
  return atoms;
}

// Sorts members shortlex and renumbers the edges.
DivisorSet finish(Side side, Word of, std::vector<Word> members, std::set<std::pair<std::size_t, std::size_t>> edges) {
  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return shortlex_less(members[a], members[b]); });
  std::vector<std::size_t> pos(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  DivisorSet d;
  d.side = side;
  d.of = std::move(of);
  for (auto i : order) d.members.push_back(members[i]);
  for (auto [a, b] : edges) d.edges.emplace_back(pos[a], pos[b]);
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

}  // namespace

DivisorSet MonoidContext::left_divisors(Word const& v, DivMode mode) const {
  auto const atoms = atoms_of(*this);
  auto const wv = base_.weight(v);
  std::map<Word, std::size_t> index;
  std::vector<Word> members;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  auto add = [&](Word const& c) {
    auto [it, fresh] = index.emplace(c, members.size());
    if (fresh) {
      members.push_back(c);
      if (members.size() > budgets_.divisor_nodes)
        throw BudgetExceeded("divisor enumeration exceeds " + std::to_string(budgets_.divisor_nodes) + " nodes");
    }
    return it->second;
  };
  if (mode == DivMode::theta_bfs) {
    add(Word{});
    for (std::size_t head = 0; head < members.size(); ++head) {
      Word const u = members[head];
      for (std::size_t i = 0; i < base_.size(); ++i) {
        auto s = static_cast<Letter>(i);
        Word us = u;
        us.push_back(s);
        if (homogeneous_ && base_.weight(us) > wv) continue;
        if (!left_divides(us, v)) continue;
        auto j = add(theta_ready() ? canonical_theta(us) : canonical(us));
        if (std::find(atoms.begin(), atoms.end(), s) != atoms.end()) edges.emplace(head, j);
      }
    }
    return finish(Side::left, canonical(v), std::move(members), std::move(edges));
  }
  // Prefix oracle: every prefix of every word of the class of v.
  std::unordered_set<Word, WordHash> prefixes;
  for (auto const& x : closure(v))
    for (std::size_t len = 0; len <= x.size(); ++len) prefixes.insert(x.prefix(len));
  for (auto const& p : prefixes) add(canonical_brute(p));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Letter a : atoms) {
      Word ua = members[i];
      ua.push_back(a);
      if (homogeneous_ && base_.weight(ua) > wv) continue;
      if (!prefixes.count(ua) && !divides_left(ua, v, EqMode::brute).divides) continue;
      auto it = index.find(canonical_brute(ua));
      if (it != index.end()) edges.emplace(i, it->second);
    }
  return finish(Side::left, canonical_brute(v), std::move(members), std::move(edges));
}

DivisorSet MonoidContext::right_divisors(Word const& v) const {
  if (opposite_) {
    auto d = opposite_->left_divisors(v.reversed());
    std::vector<Word> members;
    for (auto const& m : d.members) members.push_back(canonical(m.reversed()));
    std::set<std::pair<std::size_t, std::size_t>> edges(d.edges.begin(), d.edges.end());
    return finish(Side::right, canonical(v), std::move(members), std::move(edges));
  }
  // Suffix oracle.
  auto const atoms = atoms_of(*this);
  std::unordered_set<Word, WordHash> suffixes;
  for (auto const& x : closure(v))
    for (std::size_t pos = 0; pos <= x.size(); ++pos) suffixes.insert(x.suffix_from(pos));
  std::map<Word, std::size_t> index;
  std::vector<Word> members;
  for (auto const& s : suffixes) {
    auto c = canonical(s);
    if (index.emplace(c, members.size()).second) members.push_back(c);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Letter a : atoms) {
      Word au{a};
      au += members[i];
      if (homogeneous_ && base_.weight(au) > base_.weight(v)) continue;
      auto it = index.find(canonical(au));
      if (it != index.end() && divides_right(au, v).divides) edges.emplace(i, it->second);
    }
  return finish(Side::right, canonical(v), std::move(members), std::move(edges));
}

GarsideCertificate verify_garside(MonoidContext const& ctx, Word const& Delta, CertifyOptions const& options) {
  GarsideCertificate cert;
  cert.budgets = ctx.budgets();
  auto const& p = ctx.presentation();
  auto add = [&](std::string name, bool pass, std::string detail, bool inferred = false) {
    cert.evidence.push_back({std::move(name), pass, inferred, std::move(detail)});
  };
  cert.Delta = ctx.canonical(Delta);
  add("homogeneity", ctx.homogeneous(), ctx.homogeneous() ? "every relation preserves the weight" : "not homogeneous");
  add("C1-of-presentation", ctx.theta_ready(),
      ctx.complemented() ? (ctx.c1() ? "C1 holds; " : "C1 fails; ") + ctx.equivalence_detail()
                         : "no complemented presentation");
  auto op = ctx.opposite();
  bool const op_ok = op && op->theta_ready();
  add("C1-of-opposite", op_ok,
      !op ? "no opposite context"
          : (op->c1() ? "C1 holds; " : "C1 fails; ") + op->equivalence_detail());

  std::string central_detail = "Delta commutes with every generator";
  bool central = true;
  for (std::size_t i = 0; i < p.size() && central; ++i) {
    Word s{static_cast<Letter>(i)};
    if (!ctx.words_equal(s + Delta, Delta + s)) {
      central = false;
      central_detail = p.format(s) + ".Delta != Delta." + p.format(s);
    }
  }
  add("Delta-central", central, central_detail);

  bool gens = true;
  std::string gens_detail = "every generator divides Delta on both sides";
  for (std::size_t i = 0; i < p.size() && gens; ++i) {
    Word s{static_cast<Letter>(i)};
    if (!ctx.left_divides(s, Delta) || !ctx.divides_right(s, Delta).divides) {
      gens = false;
      gens_detail = p.format(s) + " does not divide Delta";
    }
  }
  add("generators-divide", gens, gens_detail);
  add("finite-divisors", ctx.homogeneous(), "homogeneous presentation over a finite alphabet", true);

  if (!options.enumerate_simples) return cert;

  bool const fast = ctx.theta_ready() && op_ok;
  if (!fast) {
    add("DivL-eq-DivR", false, "simples are only enumerated over a certified C1 presentation and its opposite");
    return cert;
  }
  cert.simples = ctx.left_divisors(Delta);
  // Right divisors are left divisors in the opposite monoid. Equal sizes and
  // Div_R(Delta) inside Div_L(Delta) give equality.
  auto right = op->left_divisors(Delta.reversed());
  cert.right_simple_count = right.members.size();
  bool same = right.members.size() == cert.simples.members.size();
  std::string outsider;
  for (auto const& r : right.members) {
    if (!same) break;
    if (!ctx.left_divides(r.reversed(), Delta)) {
      same = false;
      outsider = p.format(r.reversed());
    }
  }
  add("DivL-eq-DivR", same,
      std::to_string(cert.simples.members.size()) + " left and " + std::to_string(right.members.size()) +
          " right divisors" + (same ? ", equal sets" : outsider.empty() ? ", sizes differ" : ", " + outsider + " is only a right divisor"));

  // Lattice spot-check on sampled pairs of simples: the greedy gcd g and the
  // complement lcm l must bound every probed common divisor / multiple.
  auto const& S = cert.simples.members;
  std::mt19937 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, S.size() - 1);
  std::vector<std::size_t> probe;
  if (S.size() <= options.lattice_probe) {
    for (std::size_t i = 0; i < S.size(); ++i) probe.push_back(i);
  } else {
    for (std::size_t i = 0; i < options.lattice_probe; ++i) probe.push_back(pick(rng));
  }
  auto left_gcd = [&](Word const& a, Word const& b) {
    Word g;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < p.size(); ++i) {
        Word h = g;
        h.push_back(static_cast<Letter>(i));
        if (ctx.left_divides(h, a) && ctx.left_divides(h, b)) {
          g = std::move(h);
          grew = true;
          break;
        }
      }
    }
    return g;
  };
  bool lattice = true;
  std::string lattice_detail;
  std::size_t const samples = options.lattice_samples;
  for (std::size_t k = 0; k < samples && lattice; ++k) {
    Word const& a = S[pick(rng)];
    Word const& b = S[pick(rng)];
    Word const g = left_gcd(a, b);
    auto lcm = ctx.right_lcm(a, b);
    if (!lcm || !ctx.left_divides(a + lcm->first, Delta)) {
      lattice = false;
      lattice_detail = "pair (" + p.format(a) + ", " + p.format(b) + ") has no lcm among simples";
      break;
    }
    Word const l = a + lcm->first;
    for (auto i : probe) {
      Word const& c = S[i];
      if (ctx.left_divides(c, a) && ctx.left_divides(c, b) && !ctx.left_divides(c, g)) {
        lattice = false;
        lattice_detail = "pair (" + p.format(a) + ", " + p.format(b) + "): common left divisor " + p.format(c) +
                         " does not divide the gcd " + p.format(g);
        break;
      }
      if (ctx.left_divides(a, c) && ctx.left_divides(b, c) && !ctx.left_divides(l, c)) {
        lattice = false;
        lattice_detail = "pair (" + p.format(a) + ", " + p.format(b) + "): common multiple " + p.format(c) +
                         " is not a multiple of the lcm " + p.format(l);
        break;
      }
    }
  }
  if (lattice)
    lattice_detail = std::to_string(samples) + " sampled pairs, each against " + std::to_string(probe.size()) +
                     " simples: gcd and lcm are unique";
  add("lattice-spotcheck", lattice, lattice_detail);
  add("lattices", ctx.theta_ready() && op_ok && same && central && gens,
      "C1 on both sides with a Garside element gives conditional lcms and gcds on both sides, hence lattices",
      true);

  auto canc = cancellative_oracle(ctx, options.cancellation_length);
  add("brute-cancellativity", canc.pass,
      canc.pass ? "no violation among " + std::to_string(canc.classes) + " classes up to weight " +
                      std::to_string(options.cancellation_length)
                : canc.violation);
  return cert;
}

std::vector<Word> greedy_nf(MonoidContext const& ctx, Word const& Delta, Word const& u) {
  if (!ctx.theta_ready()) throw NotCertified("normal forms need a certified C1 presentation");
  std::vector<Word> out;
  Word rest = u;
  auto const n = ctx.presentation().size();
  while (!rest.empty()) {
    Word head;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < n; ++i) {
        Word h = head;
        h.push_back(static_cast<Letter>(i));
        if (ctx.left_divides(h, Delta) && ctx.left_divides(h, rest)) {
          head = std::move(h);
          grew = true;
          break;
        }
      }
    }
    if (head.empty()) throw Error("no simple divides " + ctx.presentation().format(rest));
    rest = ctx.divides_left(head, rest).quotient;
    out.push_back(ctx.canonical(head));
  }
  return out;
}

std::vector<Word> greedy_nf_scan(MonoidContext const& ctx, DivisorSet const& simples, Word const& u) {
  std::vector<Word> order = simples.members;
  auto const& p = ctx.presentation();
  std::stable_sort(order.begin(), order.end(), [&](Word const& a, Word const& b) {
    auto wa = p.weight(a), wb = p.weight(b);
    if (wa != wb) return wa > wb;
    return a < b;
  });
  std::vector<Word> out;
  Word rest = u;
  while (!rest.empty()) {
    bool found = false;
    for (auto const& s : order) {
      if (s.empty()) continue;
      auto d = ctx.divides_left(s, rest);
      if (d.divides) {
        out.push_back(s);
        rest = d.quotient;
        found = true;
        break;
      }
    }
    if (!found) throw Error("no simple divides " + p.format(rest));
  }
  return out;
}

namespace {

struct Levels {
  std::vector<std::vector<Word>> levels;
  std::string violation;
};

// Builds classes level by level; every class of weight k is a.b for some
// generator a, and b.a for some generator a. Stops at the first collision.
Levels build_levels(MonoidContext const& ctx, std::size_t max_weight, bool check) {
  auto const& p = ctx.presentation();
  Levels out;
  out.levels.assign(max_weight + 1, {});
  out.levels[0].push_back(Word{});
  for (std::size_t k = 1; k <= max_weight; ++k) {
    std::set<Word> level;
    for (int side = 0; side < 2; ++side) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        auto a = static_cast<Letter>(i);
        auto wa = p.weight(a);
        if (wa > k) continue;
        std::map<Word, Word> image;
        for (auto const& b : out.levels[k - wa]) {
          Word ab = side == 0 ? Word{a} + b : b + Word{a};
          Word c = ctx.canonical(ab, EqMode::brute);
          auto [it, fresh] = image.emplace(c, b);
          if (!fresh && check && out.violation.empty()) {
            Word const& b0 = it->second;
            out.violation = side == 0 ? p.format(Word{a}) + "." + p.format(b0) + " ~ " + p.format(Word{a}) + "." +
                                            p.format(b) + " with " + p.format(b0) + " != " + p.format(b)
                                      : p.format(b0) + "." + p.format(Word{a}) + " ~ " + p.format(b) + "." +
                                            p.format(Word{a}) + " with " + p.format(b0) + " != " + p.format(b);
          }
          level.insert(std::move(c));
        }
      }
      if (!ctx.homogeneous()) break;
    }
    out.levels[k].assign(level.begin(), level.end());
    if (!out.violation.empty()) {
      out.levels.resize(k + 1);
      return out;
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Word>> enumerate_classes(MonoidContext const& ctx, std::size_t max_weight) {
  return build_levels(ctx, max_weight, false).levels;
}

CancellationReport cancellative_oracle(MonoidContext const& ctx, std::size_t max_length) {
  auto lv = build_levels(ctx, max_length, true);
  CancellationReport rep;
  for (auto const& l : lv.levels) rep.classes += l.size();
  rep.pass = lv.violation.empty();
  rep.violation = lv.violation;
  return rep;
}

EqualityOracle monoid_equality_oracle(Budgets budgets) {
  struct Cache {
    std::mutex mutex;
    std::map<std::string, ContextPtr> contexts;
  };
  auto cache = std::make_shared<Cache>();
  return [cache, budgets](Presentation const& p, Word const& u, Word const& v) -> std::optional<bool> {
    auto key = serialize(p);
    ContextPtr ctx;
    {
      std::lock_guard lock(cache->mutex);
      auto it = cache->contexts.find(key);
      if (it != cache->contexts.end()) ctx = it->second;
    }
    try {
      if (!ctx) {
        ctx = MonoidContext::for_presentation(drop_trivial(p), budgets);
        std::lock_guard lock(cache->mutex);
        cache->contexts.emplace(key, ctx);
      }
      return ctx->words_equal(u, v);
    } catch (BudgetExceeded const&) {
      return std::nullopt;
    }
  };
}

}  // namespace jgar
