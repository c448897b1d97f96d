#include "doctest.h"
#include "jgarside/errors.hpp"
#include "jgarside/iso.hpp"

using namespace jgar;

namespace {

long gcd(long a, long b) { return b == 0 ? a : gcd(b, a % b); }

Check const* find(VerificationReport const& r, std::string const& name) {
  for (auto const& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("G(3,3) isomorphism") {
  Workbench bench;
  for (auto [n, m] : {std::pair{1, 1}, {2, 3}, {3, 5}, {1, 4}}) {
    auto r = verify_thm_3_18(n, m, bench);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(r.pass());
    CHECK(r.scenario == "g33-iso");
    auto c = find(r, "phi(Delta) = stu");
    REQUIRE(c);
    CHECK(c->pass);
    for (auto name : {"psi(s)psi(t)psi(u) = Delta", "psi(t)psi(u)psi(s) = Delta", "psi(u)psi(s)psi(t) = Delta"}) {
      REQUIRE(find(r, name));
      CHECK(find(r, name)->pass);
    }
  }
}

TEST_CASE("degenerate phi at (1,1)") {
  Presentation src;
  src.add_letter("x");
  src.add_letter("y");
  src.add_letter("z");
  auto phi = phi_classical(1, 1, src);
  auto const& A = phi.target->alphabet();
  CHECK(phi.target->equal(phi.images[0], parse_signed(A, "u")));
  CHECK(phi.target->equal(phi.images[1], parse_signed(A, "s")));
  CHECK(phi.target->equal(phi.images[2], parse_signed(A, "t")));
}

TEST_CASE("dihedral isomorphism") {
  Workbench bench;
  for (auto [n, m] : {std::pair{1, 2}, {2, 3}, {1, 3}, {3, 4}})
    CHECK(verify_thm_3_27(n, m, bench).pass());
  auto r = verify_thm_3_27(1, 2, bench);
  auto bz = find(r, "Bezout pair");
  REQUIRE(bz);
  CHECK(bz->witness == "1*1 + 0*1");
  CHECK_THROWS_AS(verify_thm_3_27(1, 1, bench), InputError);
  CHECK_THROWS_AS(verify_thm_3_27(2, 4, bench), InputError);
}

TEST_CASE("dual presentation isomorphism") {
  Workbench bench;
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 3}}) CHECK(verify_prop_4_6(n, m, bench).pass());
}

TEST_CASE("word identities") {
  Workbench bench;
  for (auto [n, m] : {std::pair{1, 2}, {2, 3}, {3, 4}, {1, 1}}) {
    auto r = verify_word_identities(n, m, bench);
    CHECK(r.pass());
  }
  auto r = verify_word_identities(2, 3, bench);
  REQUIRE(find(r, "x_i w = w x_(i+r) i=1"));
  CHECK(find(r, "x_i w = w x_(i+r) i=1")->pass);
  auto d = verify_word_identities(1, 2, bench);
  REQUIRE(find(d, "z_i w = w z_(i+n) i=1"));
  CHECK(find(d, "z_i w = w z_(i+n) i=1")->pass);
  REQUIRE(find(d, "w^(n-r) W^r = delta^m z^n"));
}

TEST_CASE("reflection isomorphism") {
  Workbench bench;
  auto r = verify_prop_3_37(1, 2, bench);
  CHECK(r.pass());
  REQUIRE(find(r, "theta(phi(y)) = phi'(q^-1)"));
  CHECK(verify_prop_3_37(2, 3, bench).pass());
  CHECK(verify_prop_3_37(1, 1, bench).pass());
  CHECK_THROWS_AS(verify_prop_3_37(2, 4, bench), InputError);
}

TEST_CASE("scenarios are deterministic") {
  Workbench a, b;
  for (auto const& name : scenario_names()) {
    auto r1 = run_scenario(name, 2, 3, a);
    auto r2 = run_scenario(name, 2, 3, b);
    r1.elapsed_ms = r2.elapsed_ms = 0;
    CHECK(r1 == r2);
  }
  CHECK_THROWS_AS(run_scenario("nope", 1, 1, a), InputError);
}

TEST_CASE("budget exhaustion is reported") {
  Budgets tiny;
  tiny.class_size = 3;
  Workbench bench(tiny);
  auto r = verify_word_identities(2, 3, bench);
  CHECK(r.budget_exceeded);
  CHECK_FALSE(r.pass());
}

TEST_CASE("all small coprime pairs pass every scenario") {
  Workbench bench;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= m; ++n) {
      if (gcd(n, m) != 1) continue;
      for (auto const& name : scenario_names()) {
        if (name == "dihedral-iso" && n >= m) continue;
        CAPTURE(name);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(run_scenario(name, n, m, bench).pass());
      }
    }
}
