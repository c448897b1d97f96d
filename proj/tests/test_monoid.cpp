#include <algorithm>
#include <random>

#include "doctest.h"
#include "jgarside/errors.hpp"
#include "jgarside/jbraid.hpp"
#include "jgarside/monoid.hpp"

using namespace jgar;

namespace {

BraidParams P(int n, int m, Flavor f = Flavor::star_star, Kind k = Kind::classical) {
  return {n, m, f, k, Variant::base};
}

std::vector<std::string> names(MonoidContext const& ctx, std::vector<Word> const& ws) {
  std::vector<std::string> out;
  for (auto const& w : ws) out.push_back(ctx.presentation().format(w));
  return out;
}

Presentation two(char const* lhs, char const* rhs) {
  Presentation p;
  p.add_letter("a");
  p.add_letter("b");
  if (lhs) p.add_relation(lhs, rhs);
  return p;
}

Word random_word(std::mt19937& rng, std::size_t letters, std::size_t len) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(letters) - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(d(rng)));
  return w;
}

}  // namespace

TEST_CASE("word problem examples") {
  auto m11 = MonoidContext::for_params(P(1, 1));
  auto const& p = m11->presentation();
  CHECK(m11->words_equal(p.parse_word("x.y.z"), p.parse_word("z.x.y")));
  CHECK_FALSE(m11->words_equal(p.parse_word("x.y"), p.parse_word("y.x")));
  CHECK(m11->closure(p.parse_word("x.y")).size() == 1);
  CHECK(m11->closure(p.parse_word("x.y.z")).size() == 3);

  auto m12 = MonoidContext::for_params(P(1, 2, Flavor::star));
  auto const& q = m12->presentation();
  CHECK(m12->words_equal(q.parse_word("x.y.x.y"), q.parse_word("y.x.y.x")));
}

TEST_CASE("divisibility") {
  auto ctx = MonoidContext::for_params(P(2, 3));
  auto const& p = ctx->presentation();
  auto sw = special_words(P(2, 3));
  CHECK(ctx->left_divides(p.parse_word("x1"), sw.Delta));
  CHECK(ctx->left_divides(p.parse_word("z"), sw.Delta));
  CHECK_FALSE(ctx->left_divides(sw.Delta + p.parse_word("x1"), sw.Delta));
  // w divides Delta = w^(n-r) W^r with quotient w^(n-r-1) W^r; here n - r = 1.
  auto d = ctx->divides_left(sw.w, sw.Delta);
  REQUIRE(d.divides);
  CHECK(ctx->words_equal(d.quotient, sw.W));
  CHECK(ctx->words_equal(sw.w + d.quotient, sw.Delta));
}

TEST_CASE("prefix oracle divisor counts") {
  auto m11 = MonoidContext::for_params(P(1, 1));
  auto set = m11->left_divisors(special_words(P(1, 1)).Delta, DivMode::prefix_oracle);
  CHECK(names(*m11, set.members) ==
        std::vector<std::string>{"1", "x", "y", "z", "x.y", "y.z", "z.x", "x.y.z"});
  CHECK(set.edges.size() == 9);

  auto m12 = MonoidContext::for_params(P(1, 2, Flavor::star));
  CHECK(m12->left_divisors(special_words(P(1, 2, Flavor::star)).Delta, DivMode::prefix_oracle).members.size() == 8);

  auto single = m11->left_divisors(m11->presentation().parse_word("y"));
  CHECK(names(*m11, single.members) == std::vector<std::string>{"1", "y"});
}

TEST_CASE("divisor modes agree") {
  for (auto params : {P(1, 1), P(1, 2), P(1, 3, Flavor::star), P(1, 2, Flavor::star, Kind::dual), P(1, 2, Flavor::star_star, Kind::dual)}) {
    CAPTURE(params.label());
    auto ctx = MonoidContext::for_params(params);
    auto Delta = special_words(params).Delta;
    auto a = ctx->left_divisors(Delta, DivMode::theta_bfs);
    auto b = ctx->left_divisors(Delta, DivMode::prefix_oracle);
    CHECK(a.members == b.members);
    CHECK(a.edges == b.edges);
  }
}

TEST_CASE("opposite symmetry of simples") {
  for (auto params : {P(1, 2), P(2, 3), P(1, 3, Flavor::star_star, Kind::dual)}) {
    auto ctx = MonoidContext::for_params(params);
    auto Delta = special_words(params).Delta;
    auto right = ctx->right_divisors(Delta);
    auto op = ctx->opposite();
    REQUIRE(op);
    auto left_op = op->left_divisors(Delta.reversed());
    std::vector<Word> reversed;
    for (auto const& w : left_op.members) reversed.push_back(ctx->canonical(w.reversed()));
    std::sort(reversed.begin(), reversed.end(), shortlex_less);
    auto mine = right.members;
    for (auto& w : mine) w = ctx->canonical(w);
    std::sort(mine.begin(), mine.end(), shortlex_less);
    CHECK(mine == reversed);
  }
}

TEST_CASE("Garside certificates") {
  auto m23 = MonoidContext::for_params(P(2, 3));
  auto cert = verify_garside(*m23, special_words(P(2, 3)).Delta);
  CHECK(cert.valid());
  CHECK(cert.simples.members.size() == 304);

  auto d12 = MonoidContext::for_params(P(1, 2, Flavor::star_star, Kind::dual));
  auto dcert = verify_garside(*d12, special_words(P(1, 2, Flavor::star_star, Kind::dual)).Delta);
  CHECK(dcert.valid());
  CHECK(dcert.find("DivL-eq-DivR")->pass);
}

TEST_CASE("b squared is not central in aba = bb") {
  auto ctx = MonoidContext::for_presentation(two("a.b.a", "b.b"));
  auto const& p = ctx->presentation();
  CHECK_FALSE(ctx->words_equal(p.parse_word("b.b.a"), p.parse_word("a.b.b")));
  auto cert = verify_garside(*ctx, p.parse_word("b.b"));
  CHECK_FALSE(cert.valid());
  auto central = cert.find("Delta-central");
  REQUIRE(central);
  CHECK_FALSE(central->pass);
}

TEST_CASE("greedy normal form") {
  auto ctx = MonoidContext::for_params(P(1, 1));
  auto const& p = ctx->presentation();
  auto Delta = special_words(P(1, 1)).Delta;
  auto nf = greedy_nf(*ctx, Delta, p.parse_word("x.y.z.x"));
  REQUIRE(nf.size() == 2);
  CHECK(ctx->words_equal(nf[0], Delta));
  CHECK(p.format(nf[1]) == "x");
  auto whole = greedy_nf(*ctx, Delta, Delta);
  REQUIRE(whole.size() == 1);
  CHECK(ctx->words_equal(whole[0], Delta));
  auto atom = greedy_nf(*ctx, Delta, p.parse_word("y"));
  REQUIRE(atom.size() == 1);
  CHECK(p.format(atom[0]) == "y");
}

TEST_CASE("greedy normal form agrees with the scan") {
  auto params = P(1, 2);
  auto ctx = MonoidContext::for_params(params);
  auto Delta = special_words(params).Delta;
  auto simples = ctx->left_divisors(Delta);
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto w = random_word(rng, ctx->presentation().size(), 1 + i % 9);
    auto a = greedy_nf(*ctx, Delta, w);
    auto b = greedy_nf_scan(*ctx, simples, w);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(ctx->words_equal(a[k], b[k]));
    Word product;
    for (auto const& f : a) product += f;
    CHECK(ctx->words_equal(product, w));
  }
}

TEST_CASE("equality modes agree") {
  for (auto params : {P(1, 2), P(2, 3), P(2, 3, Flavor::star, Kind::dual)}) {
    auto ctx = MonoidContext::for_params(params);
    REQUIRE(ctx->theta_ready());
    auto const& p = ctx->presentation();
    std::mt19937 rng(9);
    for (int i = 0; i < 150; ++i) {
      auto u = random_word(rng, p.size(), 6);
      auto closure = ctx->closure(u);
      Word v = (i % 2) ? closure[rng() % closure.size()] : random_word(rng, p.size(), 6);
      bool brute = ctx->words_equal(u, v, EqMode::brute);
      CHECK(brute == ctx->words_equal(u, v, EqMode::theta));
    }
  }
}

TEST_CASE("cancellativity oracle") {
  auto m23 = MonoidContext::for_params(P(2, 3));
  CHECK(cancellative_oracle(*m23, 6).pass);

  auto bad = MonoidContext::for_presentation(two("a.b", "a.a"));
  auto rep = cancellative_oracle(*bad, 2);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.violation.empty());

  auto free2 = MonoidContext::for_presentation(two(nullptr, nullptr));
  auto f = cancellative_oracle(*free2, 5);
  CHECK(f.pass);
  CHECK(f.classes == 63);
}

TEST_CASE("centrality transfer on w and W") {
  for (auto params : {P(1, 2), P(2, 3), P(2, 5), P(3, 4)}) {
    auto ctx = MonoidContext::for_params(params);
    auto sw = special_words(params);
    CHECK(ctx->words_equal(sw.w + sw.W, sw.W + sw.w));
  }
}

TEST_CASE("Delta words agree") {
  for (auto [n, m] : {std::pair{1, 2}, {2, 3}, {3, 4}, {2, 5}, {1, 3}}) {
    auto params = P(n, m);
    auto ctx = MonoidContext::for_params(params);
    auto sw = special_words(params);
    int r = m % n;
    Word alt = Word::power(sw.w, static_cast<std::size_t>(n - r)) + Word::power(sw.W, static_cast<std::size_t>(r));
    CHECK(ctx->words_equal(alt, sw.Delta));
  }
}

TEST_CASE("class budget") {
  Budgets tiny;
  tiny.class_size = 2;
  auto p = build_presentation(P(1, 1));
  CHECK_THROWS_AS(MonoidContext::for_params(P(1, 1), tiny)->closure(p.parse_word("x.y.z")), BudgetExceeded);
}

TEST_CASE("class enumeration") {
  auto ctx = MonoidContext::for_params(P(1, 1));
  auto classes = enumerate_classes(*ctx, 3);
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].size() == 1);
  CHECK(classes[1].size() == 3);
  CHECK(classes[2].size() == 9);
  CHECK(classes[3].size() == 25);
}
