#include <random>

#include "doctest.h"
#include "jgarside/complement.hpp"
#include "jgarside/errors.hpp"
#include "jgarside/jbraid.hpp"
#include "jgarside/monoid.hpp"

using namespace jgar;

namespace {

Presentation letters(std::initializer_list<char const*> names) {
  Presentation p;
  for (auto n : names) p.add_letter(n);
  return p;
}

Presentation aba_bb() {
  auto p = letters({"a", "b"});
  p.add_relation("a.b.a", "b.b");
  return p;
}

Presentation free_abelian() {
  auto p = letters({"a", "b", "c"});
  p.add_relation("a.b", "b.a");
  p.add_relation("a.c", "c.a");
  p.add_relation("b.c", "c.b");
  return p;
}

std::string theta(ThetaTable const& t, char const* u, char const* v) {
  auto const& p = t.presentation();
  auto r = theta_extend(t, p.parse_word(u), p.parse_word(v), 100000);
  if (!r.defined()) return "<undefined>";
  return r.word.empty() ? "1" : p.format(r.word);
}

Presentation enlarged(int n, int m, Kind k = Kind::classical) {
  return build_presentation({n, m, Flavor::star_star, k, Variant::enlarged});
}

}  // namespace

TEST_CASE("complement table of aba = bb") {
  ThetaTable t(aba_bb());
  CHECK(t.classification() == Classification::right_full);
  CHECK(theta(t, "a", "b") == "b.a");
  CHECK(theta(t, "b", "a") == "b");
}

TEST_CASE("complement table of enlarged (2,3)") {
  ThetaTable t(enlarged(2, 3));
  CHECK(t.classification() == Classification::right_full);
  CHECK(theta(t, "z", "x1") == "x1.x2.y");
  CHECK(theta(t, "x1", "z") == "x2.y.z");
}

TEST_CASE("two relations on one pair") {
  auto p = letters({"a", "b"});
  p.add_relation("a.b", "b.a");
  p.add_relation("a.b", "b.a.a");
  ThetaTable t(p);
  CHECK(t.classification() == Classification::not_right_complemented);
  CHECK_FALSE(t.problems().empty());
}

TEST_CASE("missing pair is right-complemented but not right-full") {
  auto p = letters({"a", "b", "c"});
  p.add_relation("a.b", "b.a");
  ThetaTable t(p);
  CHECK(t.classification() == Classification::right_complemented);
  CHECK(theta(t, "a", "c") == "<undefined>");
}

TEST_CASE("word extension rules") {
  ThetaTable t(aba_bb());
  CHECK(theta(t, "a", "a") == "1");
  CHECK(theta(t, "b", "b") == "1");
  CHECK(theta(t, "1", "a") == "a");
  CHECK(theta(t, "a", "1") == "1");
  CHECK(theta(t, "a.b", "b") == "a");
}

TEST_CASE("budget exhaustion is distinct from undefined") {
  auto p = letters({"a", "b"});
  p.add_relation("a.b", "b.a.a");
  ThetaTable t(p);
  auto r = theta_extend(t, p.parse_word("a"), Word(std::vector<Letter>(12, 1)), 50);
  CHECK(theta_extend(t, p.parse_word("a"), Word(std::vector<Letter>(12, 1)), 5000).defined());
  CHECK(r.status == ThetaStatus::budget_exceeded);
}

TEST_CASE("sharp cube condition") {
  CHECK(check_cube_sharp(free_abelian()).pass);
  CHECK(check_cube_sharp(aba_bb()).pass);
  auto p = letters({"a", "b", "c"});
  p.add_relation("a.b", "b.a");
  p.add_relation("a.c", "c.a");
  p.add_relation("b.c", "c.a");
  auto rep = check_cube_sharp(p);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("C1 on the enlarged presentations at (2,3)") {
  auto c = check_C1(enlarged(2, 3));
  CHECK(c.pass);
  CHECK(c.labelings.size() == 4);
  CHECK(c.replay(ThetaTable(enlarged(2, 3))));
  CHECK(check_C1(enlarged(2, 3, Kind::dual)).pass);
}

TEST_CASE("C1 is not necessary: free abelian fails C1 but passes the cube") {
  auto p = free_abelian();
  CHECK_FALSE(check_C1(p).pass);
  CHECK(check_cube_sharp(p).pass);
}

TEST_CASE("C1 implies the sharp cube condition") {
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 3}, {1, 4}, {3, 4}})
    for (auto k : {Kind::classical, Kind::dual})
      for (auto v : {Variant::enlarged, Variant::enlarged_opposite}) {
        auto p = build_presentation({n, m, Flavor::star_star, k, v});
        auto c1 = check_C1(p);
        CHECK(c1.pass);
        if (c1.pass) CHECK(check_cube_sharp(p).pass);
      }
}

TEST_CASE("sub_X of aba = bb by a") {
  auto q = sub_X_presentation(aba_bb(), {0});
  CHECK(q.size() == 1);
  CHECK(q.relations().empty());
}

TEST_CASE("sub_X with nothing removed keeps the relations") {
  auto p = enlarged(2, 3);
  CHECK(canonical_form(sub_X_presentation(p, {})) == canonical_form(p));
  CHECK_THROWS_AS(sub_X_presentation(letters({"a", "b"}), {}), InputError);
}

TEST_CASE("sub_X by z gives the quotient family") {
  for (auto [n, m] : {std::pair{1, 2}, {2, 3}, {2, 5}, {3, 4}}) {
    auto p = enlarged(n, m);
    auto sub = sub_X_presentation(p, {p.letter("z")});
    auto built = build_presentation({n, m, Flavor::star, Kind::classical, Variant::enlarged});
    CHECK(canonical_form(drop_trivial(sub)) == canonical_form(drop_trivial(built)));
  }
}

TEST_CASE("sub_X commutes with theta on letters") {
  auto p = enlarged(2, 3);
  Letter z = p.letter("z");
  ThetaTable t(p);
  auto sub = sub_X_presentation(p, {z});
  ThetaTable ts(sub);
  for (Letter a = 0; a < p.size(); ++a)
    for (Letter b = 0; b < p.size(); ++b) {
      if (a == z || b == z || a == b) continue;
      Letter sa = sub.letter(p.name(a)), sb = sub.letter(p.name(b));
      REQUIRE(ts.entry(sa, sb) != nullptr);
      auto expect = remove_letters(*t.entry(a, b), {z});
      std::vector<std::string> got, want;
      for (Letter s : *ts.entry(sa, sb)) got.push_back(sub.name(s));
      for (Letter s : expect) want.push_back(p.name(s));
      CHECK(got == want);
    }
}

TEST_CASE("C2") {
  auto oracle = monoid_equality_oracle();
  auto p = enlarged(2, 3);
  CHECK(check_C2(p, {p.letter("z")}, oracle, oracle).pass);

  auto d = enlarged(2, 3, Kind::dual);
  LetterSet Z{d.letter("z1"), d.letter("z2"), d.letter("z3")};
  CHECK(check_C2(d, Z, oracle, oracle).pass);

  auto bad = check_C2(aba_bb(), {0}, oracle, oracle);
  CHECK_FALSE(bad.pass);
  CHECK(bad.c1.pass);
  CHECK(bad.weights.pass == false);
}

TEST_CASE("complements give common multiples") {
  auto p = enlarged(2, 3);
  ThetaTable t(p);
  auto ctx = MonoidContext::for_presentation(p);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(p.size()) - 1), len(1, 3);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    Word u, v;
    for (int k = len(rng); k > 0; --k) u.push_back(static_cast<Letter>(letter(rng)));
    for (int k = len(rng); k > 0; --k) v.push_back(static_cast<Letter>(letter(rng)));
    auto r = reverse(t, u, v, 100000);
    if (r.status != ThetaStatus::defined) continue;
    ++checked;
    CHECK(ctx->words_equal(u + r.theta_uv, v + r.theta_vu, EqMode::brute));
  }
  CHECK(checked > 30);
}
