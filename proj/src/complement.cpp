#include "jgarside/complement.hpp"

#include <algorithm>

#include "jgarside/errors.hpp"

namespace jgar {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::not_right_complemented: return "not-right-complemented";
    case Classification::right_complemented: return "right-complemented";
    case Classification::right_full: return "right-full";
  }
  return "?";
}

ThetaTable::ThetaTable(Presentation p) : p_(std::move(p)) {
  auto const n = p_.size();
  table_.assign(n * n, std::nullopt);
  std::vector<int> count(n * n, 0);
  bool complemented = true;
  for (auto const& r : p_.relations()) {
    if (r.lhs.empty() || r.rhs.empty()) {
      problems_.push_back("empty side in " + p_.format(r));
      complemented = false;
      continue;
    }
    Letter s = r.lhs.front(), t = r.rhs.front();
    if (s == t) {
      problems_.push_back("relation with equal first letters: " + p_.format(r));
      complemented = false;
      continue;
    }
    ++count[t * n + s];
    if (++count[s * n + t] > 1) {
      problems_.push_back("two relations for the pair {" + p_.name(s) + ", " + p_.name(t) + "}");
      complemented = false;
      continue;
    }
    table_[s * n + t] = r.lhs.suffix_from(1);
    table_[t * n + s] = r.rhs.suffix_from(1);
  }
  // Pairs hit twice stay undefined.
  for (std::size_t i = 0; i < n * n; ++i)
    if (count[i] > 1) table_[i].reset();
  if (!complemented) {
    classification_ = Classification::not_right_complemented;
    return;
  }
  classification_ = Classification::right_full;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t)
      if (!table_[s * n + t]) {
        classification_ = Classification::right_complemented;
        problems_.push_back("no relation for the pair {" + p_.name(static_cast<Letter>(s)) + ", " +
                            p_.name(static_cast<Letter>(t)) + "}");
      }
}

Word const* ThetaTable::entry(Letter s, Letter t) const {
  if (s == t) return &empty_;
  auto const& e = table_[s * p_.size() + t];
  return e ? &*e : nullptr;
}

ThetaTable build_theta(Presentation const& p) { return ThetaTable(p); }

Reversal reverse(ThetaTable const& t, Word const& u, Word const& v, std::size_t budget) {
  // Signed letters packed as letter | (negative << 8). The input is a stack
  // whose top is the next letter to read; `out` holds a word of the form P N^-1.
  constexpr unsigned neg = 1u << 8;
  thread_local std::vector<unsigned> in, out;
  in.clear();
  out.clear();
  for (auto it = v.letters().rbegin(); it != v.letters().rend(); ++it) in.push_back(*it);
  for (Letter s : u) in.push_back(s | neg);
  Reversal res;
  while (!in.empty()) {
    unsigned x = in.back();
    in.pop_back();
    if ((x & neg) || out.empty() || !(out.back() & neg)) {
      out.push_back(x);
      continue;
    }
    auto s = static_cast<Letter>(out.back() & 0xff);
    auto tt = static_cast<Letter>(x);
    out.pop_back();
    if (++res.steps > budget) {
      res.status = ThetaStatus::budget_exceeded;
      return res;
    }
    if (s == tt) continue;
    Word const* e = t.entry(s, tt);
    Word const* f = t.entry(tt, s);
    if (!e || !f) {
      res.status = ThetaStatus::undefined;
      return res;
    }
    for (Letter c : *f) in.push_back(c | neg);
    for (auto it = e->letters().rbegin(); it != e->letters().rend(); ++it) in.push_back(*it);
  }
  std::vector<Letter> pos, negs;
  for (unsigned x : out) {
    if (x & neg) negs.push_back(static_cast<Letter>(x & 0xff));
    else pos.push_back(static_cast<Letter>(x));
  }
  res.status = ThetaStatus::defined;
  res.theta_uv = Word(std::move(pos));
  res.theta_vu = Word(negs.rbegin(), negs.rend());
  return res;
}

ThetaResult theta_extend(ThetaTable const& t, Word const& u, Word const& v, std::size_t budget) {
  auto r = reverse(t, u, v, budget);
  return {r.status, r.theta_uv};
}

ThetaEngine::ThetaEngine(std::shared_ptr<ThetaTable const> table, std::size_t step_budget,
                         std::size_t cache_limit)
    : table_(std::move(table)), budget_(step_budget), cache_limit_(cache_limit) {}

Reversal ThetaEngine::reverse(Word const& u, Word const& v) const {
  if (cache_limit_ == 0) return jgar::reverse(*table_, u, v, budget_);
  Key key{u, v};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto r = jgar::reverse(*table_, u, v, budget_);
  std::lock_guard lock(mutex_);
  if (cache_.size() >= cache_limit_) cache_.clear();
  cache_.emplace(std::move(key), r);
  return r;
}

namespace {

ThetaResult compose(ThetaTable const& t, Letter a, Letter b, Letter c, std::size_t budget) {
  Word const* ab = t.entry(a, b);
  Word const* ac = t.entry(a, c);
  if (!ab || !ac) return {ThetaStatus::undefined, {}};
  return theta_extend(t, *ab, *ac, budget);
}

}  // namespace

CubeReport check_cube_sharp(ThetaTable const& t, std::size_t budget) {
  CubeReport rep;
  auto const n = static_cast<Letter>(t.size());
  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b)
      for (Letter c = 0; c < n; ++c) {
        if (a == b || a == c || b == c) continue;
        auto lhs = compose(t, a, b, c, budget);
        auto rhs = compose(t, b, a, c, budget);
        if (lhs.status == ThetaStatus::budget_exceeded || rhs.status == ThetaStatus::budget_exceeded) {
          rep.inconclusive = true;
          rep.pass = false;
          rep.failures.push_back({a, b, c, lhs, rhs});
          continue;
        }
        bool ok = lhs.status == rhs.status && (!lhs.defined() || lhs.word == rhs.word);
        if (!ok) {
          rep.pass = false;
          rep.failures.push_back({a, b, c, lhs, rhs});
        }
      }
  return rep;
}

CubeReport check_cube_sharp(Presentation const& p, std::size_t budget) {
  return check_cube_sharp(ThetaTable(p), budget);
}

namespace {

std::optional<Word> c1_witness(ThetaTable const& t, Letter a1, Letter a2, Letter a3) {
  Word const* t13 = t.entry(a1, a3);
  Word const* t12 = t.entry(a1, a2);
  Word const* t23 = t.entry(a2, a3);
  Word const* t21 = t.entry(a2, a1);
  Word const* t31 = t.entry(a3, a1);
  Word const* t32 = t.entry(a3, a2);
  if (!t13 || !t12 || !t23 || !t21 || !t31 || !t32) return std::nullopt;
  if (!t13->starts_with(*t12)) return std::nullopt;
  Word u = t13->suffix_from(t12->size());
  if (*t23 != *t21 + u) return std::nullopt;
  if (*t31 != *t32) return std::nullopt;
  return u;
}

}  // namespace

bool C1Report::replay(ThetaTable const& t) const {
  for (auto const& l : labelings) {
    auto u = c1_witness(t, l.a1, l.a2, l.a3);
    if (!u || *u != l.u) return false;
  }
  return pass == (right_full && failing_subsets.empty());
}

C1Report check_C1(ThetaTable const& t) {
  C1Report rep;
  if (t.classification() != Classification::right_full) {
    rep.pass = false;
    rep.right_full = false;
    rep.problems = t.problems();
    if (rep.problems.empty()) rep.problems.push_back("not right-full");
    return rep;
  }
  auto const n = static_cast<Letter>(t.size());
  for (Letter p = 0; p < n; ++p)
    for (Letter q = p + 1; q < n; ++q)
      for (Letter r = q + 1; r < n; ++r) {
        std::array<Letter, 3> lab{p, q, r};
        bool found = false;
        do {
          if (auto u = c1_witness(t, lab[0], lab[1], lab[2])) {
            rep.labelings.push_back({lab[0], lab[1], lab[2], *u});
            found = true;
            break;
          }
        } while (std::next_permutation(lab.begin(), lab.end()));
        if (!found) {
          rep.pass = false;
          rep.failing_subsets.push_back({p, q, r});
        }
      }
  return rep;
}

C1Report check_C1(Presentation const& p) { return check_C1(ThetaTable(p)); }

Presentation sub_X_presentation(Presentation const& p, LetterSet const& X) {
  ThetaTable t(p);
  if (t.classification() != Classification::right_full)
    throw InputError("sub_X needs a right-full presentation");
  for (Letter x : X)
    if (x >= p.size()) throw InputError("letter outside the alphabet");
  Presentation out;
  std::vector<Letter> newid(p.size(), 0);
  std::vector<Letter> kept;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto s = static_cast<Letter>(i);
    if (X.count(s)) continue;
    newid[i] = out.add_letter(p.name(s), p.weight(s));
    kept.push_back(s);
  }
  auto map = [&](Word const& w) {
    Word o;
    for (Letter s : w)
      if (!X.count(s)) o.push_back(newid[s]);
    return o;
  };
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      Letter u = kept[i], v = kept[j];
      Word lhs{newid[u]};
      lhs += map(*t.entry(u, v));
      Word rhs{newid[v]};
      rhs += map(*t.entry(v, u));
      out.add_relation(std::move(lhs), std::move(rhs));
    }
  return out;
}

C2Report check_C2(Presentation const& p, LetterSet const& X, EqualityOracle const& oracle_sub,
                  EqualityOracle const& oracle_quot) {
  C2Report rep;
  auto c1 = check_C1(p);
  if (!c1.pass) {
    rep.c1.pass = false;
    rep.c1.detail = c1.right_full ? std::to_string(c1.failing_subsets.size()) + " failing triple(s)"
                                  : "presentation is not right-full";
  }
  for (auto const& r : p.relations()) {
    unsigned long wl = 0, wr = 0;
    for (Letter s : r.lhs)
      if (X.count(s)) wl += p.weight(s);
    for (Letter s : r.rhs)
      if (X.count(s)) wr += p.weight(s);
    if (wl != wr) {
      rep.weights.pass = false;
      rep.weights.detail = "unbalanced: " + p.format(r);
      break;
    }
  }
  if (!c1.right_full) {
    rep.isomorphism.pass = false;
    rep.isomorphism.detail = "sub_X undefined on a presentation that is not right-full";
  } else {
    Presentation sub = sub_X_presentation(p, X);
    Presentation quot = remove_letters(p, X).presentation;
    auto holds = [&](Presentation const& in, EqualityOracle const& oracle, Presentation const& from,
                     char const* where) {
      for (auto const& r : from.relations()) {
        if (r.lhs == r.rhs) continue;
        auto verdict = oracle(in, r.lhs, r.rhs);
        if (!verdict) {
          rep.isomorphism.inconclusive = true;
          rep.isomorphism.pass = false;
          rep.isomorphism.detail = std::string("oracle gave up on ") + from.format(r) + " in " + where;
          return false;
        }
        if (!*verdict) {
          rep.isomorphism.pass = false;
          rep.isomorphism.detail = from.format(r) + " fails in " + where;
          return false;
        }
      }
      return true;
    };
    // Same alphabet and letter order on both sides, so words transfer as is.
    if (holds(sub, oracle_sub, quot, "<S|R>_X")) holds(quot, oracle_quot, sub, "<S|R>/X");
  }
  rep.inconclusive = rep.isomorphism.inconclusive;
  rep.pass = rep.c1.pass && rep.weights.pass && rep.isomorphism.pass;
  return rep;
}

}  // namespace jgar
