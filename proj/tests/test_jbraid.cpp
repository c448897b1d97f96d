#include "doctest.h"
#include "jgarside/complement.hpp"
#include "jgarside/errors.hpp"
#include "jgarside/jbraid.hpp"

using namespace jgar;

namespace {

BraidParams P(int n, int m, Flavor f = Flavor::star_star, Kind k = Kind::classical, Variant v = Variant::base) {
  return {n, m, f, k, v};
}

long brute_inverse(long n, long m) {
  if (m == 1) return 1;
  for (long k = 1; k < m; ++k)
    if ((n * k) % m == 1) return k;
  return 0;
}

long gcd(long a, long b) { return b == 0 ? a : gcd(b, a % b); }

std::string words(Presentation const& p, Word const& w) { return p.format(w); }

}  // namespace

TEST_CASE("modular inverse against brute search") {
  CHECK(inv_mod(2, 3) == 2);
  CHECK(inv_mod(7, 1) == 1);
  CHECK(inv_mod(3, 5) == 2);
  CHECK(3 * 2 + 5 * inv_mod(5, 3) == 16);
  for (long n = 1; n <= 20; ++n)
    for (long m = 1; m <= 20; ++m)
      if (gcd(n, m) == 1) {
        CHECK(inv_mod(n, m) == brute_inverse(n, m));
        CHECK(inverse_identity_holds(n, m));
      }
}

TEST_CASE("extended gcd") {
  for (long a = 1; a < 30; ++a)
    for (long b = 1; b < 30; ++b) {
      auto e = extended_gcd(a, b);
      CHECK(e.g == gcd(a, b));
      CHECK(a * e.x + b * e.y == e.g);
    }
}

TEST_CASE("classical star-star at (1,2)") {
  auto p = build_presentation(P(1, 2));
  auto expect = parse_presentation("letter x\nletter y\nletter z\nrel z.x.y = x.y.z\nrel x.y.z.x.y = y.z.x.y.x\n");
  CHECK(canonical_form(p) == canonical_form(expect));
}

TEST_CASE("classical star at (2,3) is the G13 text") {
  auto p = build_presentation(P(2, 3, Flavor::star));
  auto expect = parse_presentation(
      "letter x1\nletter x2\nletter y\nrel x1.x2.y.x1 = x2.y.x1.x2\nrel x2.y.x1.x2.y = y.x1.x2.y.x1\n");
  CHECK(canonical_form(p) == canonical_form(expect));
}

TEST_CASE("dual star-star (1,d) matches the G(2cd,2d,2) table") {
  for (int d = 2; d <= 5; ++d) {
    auto name = "G(2cd,2d,2)-dual(" + std::to_string(d) + ")";
    auto built = build_presentation(P(1, d, Flavor::star_star, Kind::dual));
    CHECK(canonical_form(built) == canonical_form(parse_presentation(preset_text(name))));
  }
}

TEST_CASE("presets agree with the builds") {
  for (auto name : {"G15-classical", "G15-dual", "G13-classical", "G13-dual", "G(3c,3,2)-classical", "example-4.3",
                    "G(cd,d,2)-dual(3)", "G(cd,d,2)-dual(5)", "G(2cd,2d,2)-dual(4)"}) {
    CAPTURE(name);
    auto p = preset_table(name);
    CHECK(canonical_form(p) == canonical_form(build_presentation(preset_params(name))));
  }
  CHECK(canonical_form(preset_table("G(3c,3,2)-classical")) ==
        canonical_form(build_presentation(P(2, 3, Flavor::upper_star))));
  CHECK_THROWS_AS(preset_table("G99"), InputError);
}

TEST_CASE("G13 dual fixture") {
  auto p = build_presentation(P(2, 3, Flavor::star, Kind::dual));
  auto expect = parse_presentation(
      "letter x1\nletter x2\nletter x3\nletter z1\nletter z2\nletter z3\n"
      "rel x1.z2 = z1.x1\nrel x2.z3 = z2.x2\nrel x3.z1 = z3.x3\nrel z1.x1.x2 = z2.x2.x3 = z3.x3.x1\n");
  CHECK(canonical_form(p) == canonical_form(expect));
}

TEST_CASE("special words") {
  auto p = build_presentation(P(1, 2));
  auto s = special_words(P(1, 2));
  CHECK(words(p, s.delta) == "x.y");
  CHECK(words(p, s.Delta) == "x.y.x.y.z");

  auto ps = build_presentation(P(1, 2, Flavor::star));
  CHECK(words(ps, special_words(P(1, 2, Flavor::star)).Delta) == "x.y.x.y");

  auto pd = build_presentation(P(1, 2, Flavor::star_star, Kind::dual));
  auto sd = special_words(P(1, 2, Flavor::star_star, Kind::dual));
  CHECK(words(pd, sd.w) == "z1.x1");
  CHECK(words(pd, sd.W) == "z2.x2.y");
  CHECK(words(pd, sd.Delta) == "z1.x1.z2.x2.y");
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_presentation(P(2, 1)), InputError);
  CHECK_THROWS_AS(build_presentation(P(2, 4)), InputError);
  CHECK_THROWS_AS(build_presentation(P(0, 3)), InputError);
  CHECK_THROWS_AS(parse_flavor("sparkly"), InputError);
  CHECK(parse_flavor("upper-star") == Flavor::upper_star);
  CHECK(parse_variant("enlarged-opposite") == Variant::enlarged_opposite);
}

TEST_CASE("every build is valid and homogeneous") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= m; ++n) {
      if (gcd(n, m) != 1) continue;
      for (auto k : {Kind::classical, Kind::dual})
        for (auto f : {Flavor::star_star, Flavor::star, Flavor::upper_star, Flavor::plain})
          for (auto v : {Variant::base, Variant::enlarged, Variant::enlarged_opposite}) {
            auto params = P(n, m, f, k, v);
            try {
              params.validate();
            } catch (InputError const&) {
              continue;
            }
            CAPTURE(params.label());
            CAPTURE(to_string(v));
            auto p = build_presentation(params);
            auto rep = validate_presentation(p);
            CHECK(rep.valid);
            CHECK(is_homogeneous(p));
          }
    }
}

TEST_CASE("enlarged classical (2,3) sums letter counts equally") {
  auto p = build_presentation(P(2, 3, Flavor::star_star, Kind::classical, Variant::enlarged));
  for (auto const& r : p.relations()) CHECK(r.lhs.size() == r.rhs.size());
}

TEST_CASE("enlarged classical presentation is right-full, one relation per pair") {
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}) {
    auto p = build_presentation(P(n, m, Flavor::star_star, Kind::classical, Variant::enlarged));
    CHECK(p.size() == static_cast<std::size_t>(n + 2));
    CHECK(p.relations().size() == p.size() * (p.size() - 1) / 2);
    for (auto const& r : p.relations()) CHECK(r.lhs.front() != r.rhs.front());
    CHECK(ThetaTable(p).classification() == Classification::right_full);
  }
}

TEST_CASE("quotient square of classical flavors") {
  for (auto [n, m] : {std::pair{2, 3}, {3, 5}, {2, 5}, {3, 4}}) {
    auto ss = build_presentation(P(n, m));
    Letter y = ss.letter("y"), z = ss.letter("z");
    auto check = [&](Flavor f, LetterSet X) {
      auto q = drop_trivial(remove_letters(ss, X).presentation);
      auto built = drop_trivial(build_presentation(P(n, m, f)));
      CHECK(canonical_form(q) == canonical_form(built));
    };
    check(Flavor::star, {z});
    check(Flavor::upper_star, {y});
    check(Flavor::plain, {y, z});
  }
}
