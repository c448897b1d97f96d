#include "jgarside/group.hpp"

#include <charconv>

#include "jgarside/errors.hpp"
#include "jgarside/jbraid.hpp"

namespace jgar {

SignedWord::SignedWord(Word const& w) {
  letters_.reserve(w.size());
  for (Letter s : w) letters_.push_back({s, false});
}

SignedWord SignedWord::inverse() const {
  std::vector<SignedLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return SignedWord(std::move(out));
}

SignedWord SignedWord::pow(long k) const {
  SignedWord base = k < 0 ? inverse() : *this;
  SignedWord out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out += base;
  return out;
}

SignedWord SignedWord::freely_reduced() const {
  std::vector<SignedLetter> st;
  for (auto l : letters_) {
    if (!st.empty() && st.back().letter == l.letter && st.back().inverse != l.inverse)
      st.pop_back();
    else
      st.push_back(l);
  }
  return SignedWord(std::move(st));
}

bool SignedWord::positive() const {
  for (auto l : letters_)
    if (l.inverse) return false;
  return true;
}

Word SignedWord::to_word() const {
  Word w;
  for (auto l : letters_) {
    if (l.inverse) throw InputError("word is not positive");
    w.push_back(l.letter);
  }
  return w;
}

SignedWord parse_signed(Presentation const& alphabet, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  SignedWord out;
  if (text.empty() || text == "1") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto dot = text.find('.', pos);
    auto tok = trim(text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos));
    if (tok.empty()) throw InputError("empty letter in '" + std::string(text) + "'");
    long e = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      auto num = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), e);
      if (ec != std::errc() || ptr != num.data() + num.size())
        throw InputError("bad exponent in '" + std::string(tok) + "'");
      tok = tok.substr(0, caret);
    }
    SignedWord one;
    if (tok != "1") one.push_back({alphabet.letter(tok), false});
    out += one.pow(e);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return out;
}

std::string format_signed(Presentation const& alphabet, SignedWord const& w) {
  if (w.empty()) return "1";
  std::string out;
  auto const& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long run = static_cast<long>(j - i);
    if (!out.empty()) out += '.';
    out += alphabet.name(ls[i].letter);
    long e = ls[i].inverse ? -run : run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Presentation group_alphabet(std::vector<std::string> const& names) {
  Presentation p;
  for (auto const& n : names) p.add_letter(n);
  return p;
}

Presentation g33_presentation() {
  Presentation p = group_alphabet({"s", "t", "u"});
  p.add_relation("s.t.u", "t.u.s");
  p.add_relation("t.u.s", "u.s.t");
  return p;
}

Presentation dihedral_presentation(int d) {
  Presentation p = group_alphabet({"a", "b"});
  p.add_relation(Word::power(p.parse_word("a.b"), d), Word::power(p.parse_word("b.a"), d));
  return p;
}

Presentation circular_presentation(int n, int m) {
  Presentation p = g33_presentation();
  long e = m - inv_mod(n, m);
  p.add_relation(Word::power(p.parse_word("t"), m), Word::power(p.parse_word("u.s.t"), static_cast<std::size_t>(e)));
  return p;
}

// Fractions

FractionEngine::FractionEngine(ContextPtr ctx, GarsideCertificate const& cert) : ctx_(std::move(ctx)) {
  for (auto const* name : {"homogeneity", "C1-of-presentation", "C1-of-opposite", "Delta-central", "generators-divide"}) {
    auto const* e = cert.find(name);
    if (!e || !e->pass) throw NotCertified(std::string("fractions need passing evidence '") + name + "'");
  }
  Delta_ = cert.Delta;
  auto const n = ctx_->presentation().size();
  complements_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto d = ctx_->divides_left(Word{static_cast<Letter>(i)}, Delta_);
    if (!d.divides) throw NotCertified("generator does not divide Delta");
    complements_.push_back(d.quotient);
  }
}

Fraction FractionEngine::reduce(Fraction a) const {
  if (a.k < 0) {
    a.p = Word::power(Delta_, static_cast<std::size_t>(-a.k)) + a.p;
    a.k = 0;
  }
  while (a.k > 0 && ctx_->left_divides(Delta_, a.p)) {
    a.p = ctx_->divides_left(Delta_, a.p).quotient;
    --a.k;
  }
  return a;
}

Fraction FractionEngine::of(SignedWord const& w) const {
  Fraction f;
  for (auto l : w) {
    if (l.inverse) {
      f.p += complements_.at(l.letter);
      f.k += 1;
      f = reduce(std::move(f));
    } else {
      f.p.push_back(l.letter);
    }
  }
  return reduce(std::move(f));
}

Fraction FractionEngine::multiply(Fraction const& a, Fraction const& b) const {
  return reduce({a.k + b.k, a.p + b.p});
}

Fraction FractionEngine::inverse(Fraction const& a) const {
  Fraction f;
  for (auto it = a.p.letters().rbegin(); it != a.p.letters().rend(); ++it) f.p += complements_.at(*it);
  f.k = static_cast<long>(a.p.size()) - a.k;
  return reduce(std::move(f));
}

bool FractionEngine::equal(Fraction const& a, Fraction const& b) const {
  auto lift = [&](long k, Word const& p) { return Word::power(Delta_, static_cast<std::size_t>(k)) + p; };
  return ctx_->words_equal(lift(b.k, a.p), lift(a.k, b.p));
}

SignedWord FractionEngine::word(Fraction const& f) const {
  return SignedWord(Delta_).pow(-f.k) + SignedWord(f.p);
}

bool group_equal(FractionEngine const& engine, SignedWord const& u, SignedWord const& v) {
  return engine.equal(u, v);
}

// G(3,3)

G33Form g33_form(SignedWord const& w) {
  constexpr Letter s = 0, t = 1, u = 2;
  G33Form f;
  SignedWord raw;
  for (auto l : w) {
    if (l.letter != u) {
      raw.push_back(l);
    } else if (!l.inverse) {
      raw.push_back({t, true});
      raw.push_back({s, true});
      ++f.k;
    } else {
      raw.push_back({s, false});
      raw.push_back({t, false});
      --f.k;
    }
  }
  f.free = raw.freely_reduced();
  return f;
}

std::string format_g33(G33Form const& f) {
  static Presentation const alpha = g33_presentation();
  return "(" + format_signed(alpha, f.free) + ", " + std::to_string(f.k) + ")";
}

// Homomorphisms

HomSpec HomSpec::from_text(Presentation source, OraclePtr target,
                           std::vector<std::pair<std::string, std::string>> const& images) {
  HomSpec h;
  h.images.assign(source.size(), SignedWord());
  std::vector<bool> set(source.size(), false);
  for (auto const& [name, text] : images) {
    Letter s = source.letter(name);
    h.images[s] = parse_signed(target->alphabet(), text);
    set[s] = true;
  }
  for (std::size_t i = 0; i < set.size(); ++i)
    if (!set[i]) throw InputError("no image for letter '" + source.name(static_cast<Letter>(i)) + "'");
  h.source = std::move(source);
  h.target = std::move(target);
  return h;
}

SignedWord HomSpec::apply(SignedWord const& w) const {
  SignedWord out;
  for (auto l : w) out += l.inverse ? images.at(l.letter).inverse() : images.at(l.letter);
  return out;
}

bool HomReport::pass() const {
  for (auto const& r : relations)
    if (!r.pass) return false;
  return true;
}

HomReport check_hom(HomSpec const& h) {
  if (h.images.size() != h.source.size()) throw InputError("homomorphism is not total on the source alphabet");
  HomReport report;
  for (auto const& rel : h.source.relations()) {
    RelationVerdict v;
    v.relation = h.source.format(rel);
    try {
      v.pass = h.target->equal(h.apply(rel.lhs), h.apply(rel.rhs));
      if (!v.pass)
        v.detail = format_signed(h.target->alphabet(), h.apply(rel.lhs)) + " != " +
                   format_signed(h.target->alphabet(), h.apply(rel.rhs));
    } catch (BudgetExceeded const& e) {
      v.budget_exceeded = true;
      v.detail = e.what();
    }
    report.relations.push_back(std::move(v));
  }
  return report;
}

}  // namespace jgar
