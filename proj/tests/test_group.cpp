#include <random>

#include "doctest.h"
#include "jgarside/errors.hpp"
#include "jgarside/group.hpp"
#include "jgarside/jbraid.hpp"

using namespace jgar;

namespace {

BraidParams P(int n, int m, Flavor f = Flavor::star_star, Kind k = Kind::classical) {
  return {n, m, f, k, Variant::base};
}

std::shared_ptr<FractionEngine const> engine_for(BraidParams const& params) {
  auto ctx = MonoidContext::for_params(params);
  CertifyOptions light;
  light.enumerate_simples = false;
  auto cert = verify_garside(*ctx, special_words(params).Delta, light);
  return std::make_shared<FractionEngine const>(ctx, cert);
}

SignedWord random_signed(std::mt19937& rng, std::size_t letters, std::size_t len) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(letters) - 1);
  std::bernoulli_distribution inv(0.4);
  SignedWord w;
  for (std::size_t i = 0; i < len; ++i) w.push_back({static_cast<Letter>(d(rng)), inv(rng)});
  return w;
}

}  // namespace

TEST_CASE("signed word text") {
  auto A = g33_presentation();
  auto w = parse_signed(A, "s.t^-1.u^3");
  CHECK(w.size() == 5);
  CHECK(format_signed(A, w) == "s.t^-1.u^3");
  CHECK(parse_signed(A, "1").empty());
  CHECK(format_signed(A, parse_signed(A, "s.s^-1").freely_reduced()) == "1");
  CHECK(parse_signed(A, "s^-2") == parse_signed(A, "s^-1.s^-1"));
  CHECK_THROWS_AS(parse_signed(A, "s.v"), InputError);
  CHECK_THROWS_AS(parse_signed(A, "s^x"), InputError);
  CHECK(w.inverse().inverse() == w);
  CHECK(parse_signed(A, "s.t").pow(-1) == parse_signed(A, "t^-1.s^-1"));
}

TEST_CASE("fractions of small words") {
  auto F = engine_for(P(1, 1));
  auto const& p = F->context().presentation();
  auto id = F->of(parse_signed(p, "x.x^-1"));
  CHECK(id.k == 0);
  CHECK(id.p.empty());

  auto zi = F->of(parse_signed(p, "z^-1"));
  CHECK(zi.k == 1);
  CHECK(F->context().words_equal(zi.p, p.parse_word("x.y")));

  auto D = F->of(SignedWord(F->Delta()));
  CHECK(D.k == 0);
  CHECK(F->context().words_equal(D.p, F->Delta()));
}

TEST_CASE("group equality examples") {
  auto F = engine_for(P(2, 3));
  auto const& p = F->context().presentation();
  CHECK(F->equal(parse_signed(p, "x1.x2.y.z"), parse_signed(p, "z.x1.x2.y")));
  auto D = SignedWord(F->Delta());
  auto x = parse_signed(p, "x1");
  CHECK(F->equal(D + x + D.inverse(), x));

  auto F11 = engine_for(P(1, 1));
  auto const& q = F11->context().presentation();
  CHECK_FALSE(F11->equal(parse_signed(q, "x"), parse_signed(q, "y")));
  CHECK(group_equal(*F11, parse_signed(q, "x.y^-1.y"), parse_signed(q, "x")));
}

TEST_CASE("fraction laws") {
  for (auto params : {P(1, 1), P(1, 2), P(2, 3, Flavor::star, Kind::dual)}) {
    auto F = engine_for(params);
    auto n = F->context().presentation().size();
    std::mt19937 rng(21);
    Fraction one;
    for (int i = 0; i < 60; ++i) {
      auto a = F->of(random_signed(rng, n, 5)), b = F->of(random_signed(rng, n, 5)), c = F->of(random_signed(rng, n, 5));
      CHECK(F->equal(F->multiply(F->multiply(a, b), c), F->multiply(a, F->multiply(b, c))));
      CHECK(F->equal(F->multiply(one, a), a));
      CHECK(F->equal(F->multiply(a, one), a));
      auto w = random_signed(rng, n, 6);
      CHECK(F->equal(F->multiply(F->of(w), F->of(w.inverse())), one));
      CHECK(F->equal(F->multiply(F->inverse(F->of(w)), F->of(w)), one));
      CHECK(F->equal(F->of(F->word(F->of(w))), F->of(w)));
    }
  }
}

TEST_CASE("group equality on positive words is monoid equality") {
  auto params = P(1, 2);
  auto F = engine_for(params);
  auto const& ctx = F->context();
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(0, 2);
  for (int i = 0; i < 150; ++i) {
    Word u, v;
    for (int k = 0; k < 5; ++k) u.push_back(static_cast<Letter>(d(rng)));
    auto cls = ctx.closure(u);
    if (i % 2) v = cls[rng() % cls.size()];
    else
      for (int k = 0; k < 5; ++k) v.push_back(static_cast<Letter>(d(rng)));
    CHECK(group_equal(*F, SignedWord(u), SignedWord(v)) == ctx.words_equal(u, v));
  }
}

TEST_CASE("G(3,3) normal form") {
  auto A = g33_presentation();
  CHECK(g33_form(parse_signed(A, "s.t.u")) == G33Form{SignedWord(), 1});
  CHECK(g33_form(parse_signed(A, "t.u.s")) == G33Form{SignedWord(), 1});
  CHECK(g33_form(parse_signed(A, "u.s.t")) == G33Form{SignedWord(), 1});
  auto s = g33_form(parse_signed(A, "s"));
  CHECK(format_signed(A, s.free) == "s");
  CHECK(s.k == 0);
  CHECK(g33_form(parse_signed(A, "u.u^-1")) == G33Form{});
}

TEST_CASE("G(3,3) normal form agrees with fractions over M**(1,1)") {
  auto F = engine_for(P(1, 1));
  auto const& p = F->context().presentation();
  // x, y, z of M**(1,1) correspond to u, s, t.
  std::vector<Letter> to_g33{2, 0, 1};
  auto translate = [&](SignedWord const& w) {
    SignedWord out;
    for (auto l : w) out.push_back({to_g33[l.letter], l.inverse});
    return out;
  };
  std::mt19937 rng(13);
  int equal_pairs = 0;
  for (int i = 0; i < 200; ++i) {
    auto u = random_signed(rng, p.size(), 6);
    SignedWord v = (i % 2) ? u + parse_signed(p, "x.y.z.y^-1.x^-1.z^-1") : random_signed(rng, p.size(), 6);
    bool a = F->equal(u, v);
    bool b = g33_form(translate(u)) == g33_form(translate(v));
    CHECK(a == b);
    equal_pairs += a;
  }
  CHECK(equal_pairs >= 100);
}

TEST_CASE("homomorphism checks") {
  auto G = std::make_shared<G33Oracle const>();
  Presentation src;
  src.add_letter("x");
  src.add_letter("y");
  src.add_letter("z");
  src.add_relation("x.y.z", "z.x.y");
  src.add_relation("x.y.z.x.y", "y.z.x.y.x");
  auto bad = HomSpec::from_text(src, G, {{"x", "s"}, {"y", "t"}, {"z", "s"}});
  auto rep = check_hom(bad);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.relations.at(0).pass);

  auto A = g33_presentation();
  HomSpec id;
  id.source = A;
  id.target = G;
  for (Letter s = 0; s < A.size(); ++s) id.images.push_back(SignedWord(Word{s}));
  CHECK(check_hom(id).pass());
}

TEST_CASE("dihedral and circular presentations") {
  auto D = dihedral_presentation(3);
  CHECK(D.size() == 2);
  CHECK(D.format(D.relations().at(0)) == "a.b.a.b.a.b = b.a.b.a.b.a");
  auto C = circular_presentation(2, 3);
  CHECK(C.size() == 3);
  CHECK(C.relations().size() == 3);
}
