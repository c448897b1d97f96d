#include "jgarside/iso.hpp"

#include <chrono>
#include <functional>
#include <numeric>

#include "jgarside/errors.hpp"

namespace jgar {

bool VerificationReport::pass() const {
  if (checks.empty() || budget_exceeded) return false;
  for (auto const& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok, std::move(witness)});
}

ContextPtr Workbench::context(BraidParams const& params) {
  auto key = params.label() + "/" + to_string(params.variant);
  {
    std::lock_guard lock(mutex_);
    if (auto it = contexts_.find(key); it != contexts_.end()) return it->second;
  }
  ContextPtr ctx = MonoidContext::for_params(params, budgets_);
  std::lock_guard lock(mutex_);
  return contexts_.emplace(key, ctx).first->second;
}

std::shared_ptr<FractionEngine const> Workbench::engine(BraidParams const& params) {
  auto key = params.label();
  {
    std::lock_guard lock(mutex_);
    if (auto it = engines_.find(key); it != engines_.end()) return it->second;
  }
  auto ctx = context(params);
  CertifyOptions light;
  light.enumerate_simples = false;
  auto cert = verify_garside(*ctx, special_words(params).Delta, light);
  auto engine = std::make_shared<FractionEngine const>(ctx, cert);
  std::lock_guard lock(mutex_);
  return engines_.emplace(key, engine).first->second;
}

OraclePtr Workbench::oracle(BraidParams const& params) {
  return std::make_shared<FractionOracle const>(engine(params), params.label() + " fractions");
}

namespace {

using Clock = std::chrono::steady_clock;

// Signed words by letter name.
struct Names {
  Presentation const& p;
  SignedWord operator()(std::string const& name) const { return SignedWord(Word{p.letter(name)}); }
  SignedWord seq(std::function<std::string(int)> const& name, int a, int b) const {
    SignedWord w;
    for (int i = a; i <= b; ++i) w += (*this)(name(i));
    return w;
  }
};

SignedWord pw(SignedWord const& w, long k) { return w.pow(k); }

void group_check(VerificationReport& rep, std::string name, GroupOracle const& o, SignedWord const& u,
                 SignedWord const& v) {
  auto const& a = o.alphabet();
  std::string witness = format_signed(a, u) + " = " + format_signed(a, v);
  try {
    rep.add(std::move(name), o.equal(u, v), std::move(witness));
  } catch (BudgetExceeded const& e) {
    rep.budget_exceeded = true;
    rep.add(std::move(name), false, witness + " [" + e.what() + "]");
  }
}

void monoid_check(VerificationReport& rep, std::string name, MonoidContext const& ctx, Word const& u,
                  Word const& v) {
  auto const& p = ctx.presentation();
  std::string witness = p.format(u) + " = " + p.format(v);
  try {
    rep.add(std::move(name), ctx.words_equal(u, v), std::move(witness));
  } catch (BudgetExceeded const& e) {
    rep.budget_exceeded = true;
    rep.add(std::move(name), false, witness + " [" + e.what() + "]");
  }
}

void hom_checks(VerificationReport& rep, std::string const& prefix, HomSpec const& h) {
  auto report = check_hom(h);
  for (auto const& r : report.relations) {
    if (r.budget_exceeded) rep.budget_exceeded = true;
    rep.add(prefix + ": " + r.relation, r.pass, r.detail);
  }
}

template <class F>
VerificationReport scenario(std::string id, int n, int m, Workbench& bench, F&& body) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.scenario = std::move(id);
  rep.n = n;
  rep.m = m;
  rep.budgets = bench.budgets();
  try {
    body(rep);
  } catch (BudgetExceeded const& e) {
    rep.budget_exceeded = true;
    rep.add("budget", false, e.what());
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return rep;
}

void require_coprime(int n, int m) {
  if (n < 1 || m < 1) throw InputError("n and m must be positive");
  if (n > 60 || m > 60) throw InputError("n and m are limited to 60");
  if (std::gcd(n, m) != 1) throw InputError("n and m must be coprime");
}

BraidParams params(int n, int m, Flavor f, Kind k) {
  BraidParams p{n, m, f, k, Variant::base};
  p.validate();
  return p;
}

std::string idx(std::string const& stem, int i) { return stem + " i=" + std::to_string(i); }

}  // namespace

HomSpec phi_classical(int n, int m, Presentation const& source) {
  if (static_cast<int>(source.size()) != n + 2) throw InputError("phi needs n x-letters, y and z");
  auto G = std::make_shared<G33Oracle const>();
  Names A{G->alphabet()};
  auto s = A("s"), t = A("t"), u = A("u");
  auto c = u + s + t;
  long const nm = inv_mod(n, m), mn = inv_mod(m, n);
  HomSpec h;
  h.source = source;
  h.target = G;
  for (int i = 1; i <= n; ++i) h.images.push_back(pw(s, i - 1) + u + pw(s, 1 - i));
  h.images.push_back(pw(s, n) + pw(c, mn - n));
  h.images.push_back(pw(t, m) + pw(c, nm - m));
  return h;
}

VerificationReport verify_thm_3_18(int n, int m, Workbench& bench) {
  auto P = params(n, m, Flavor::star_star, Kind::classical);
  return scenario("g33-iso", n, m, bench, [&](VerificationReport& rep) {
    auto ctx = bench.context(P);
    auto F = bench.oracle(P);
    Presentation const& B = ctx->presentation();
    Names X{B};
    auto x = [&](int i) { return x_name(P, i); };
    int const q = P.q(), r = P.r();
    long const nm = inv_mod(n, m), mn = inv_mod(m, n);

    auto phi = phi_classical(n, m, B);
    auto const& G = *phi.target;
    Names A{G.alphabet()};
    auto s = A("s"), t = A("t"), u = A("u");
    hom_checks(rep, "phi respects", phi);

    Word const Delta = special_words(P).Delta;
    auto fD = g33_form(phi.apply(Delta));
    rep.add("phi(Delta) = stu", fD == G33Form{SignedWord(), 1}, format_g33(fD));

    auto y = X("y"), z = X("z");
    auto delta = X.seq(x, 1, n) + y;
    HomSpec psi;
    psi.source = G.alphabet();
    psi.target = F;
    psi.images = {X.seq(x, 2, n) + y + pw(z, n - mn) + pw(delta, nm - 1), pw(z, mn) + pw(delta, m - nm), X(x(1))};
    auto ps = psi.images[0].to_word(), pt = psi.images[1].to_word(), pu = psi.images[2].to_word();
    monoid_check(rep, "psi(s)psi(t)psi(u) = Delta", *ctx, ps + pt + pu, Delta);
    monoid_check(rep, "psi(t)psi(u)psi(s) = Delta", *ctx, pt + pu + ps, Delta);
    monoid_check(rep, "psi(u)psi(s)psi(t) = Delta", *ctx, pu + ps + pt, Delta);
    hom_checks(rep, "psi respects", psi);

    char const* gen[] = {"s", "t", "u"};
    for (int g = 0; g < 3; ++g)
      group_check(rep, std::string("phi(psi(") + gen[g] + ")) = " + gen[g], G, phi.apply(psi.images[g]), A(gen[g]));

    // Surjectivity of psi, as written in the proof.
    auto c = u + s + t;
    auto T = pw(t, m) + pw(c, nm - m);
    group_check(rep, "psi(t^m (ust)^(n_(m)-m)) = z", *F, psi.apply(T), z);
    group_check(rep, "z^-m_(n) psi(t) = delta^(m-n_(m))", *F, pw(z, -mn) + psi.images[1], pw(delta, m - nm));
    group_check(rep, "z^-n psi(ust) = delta^m", *F, pw(z, -n) + psi.apply(c), pw(delta, m));
    auto bz = extended_gcd(m - nm, m);
    rep.add("gcd(m, m-n_(m)) = 1", bz.g == 1, std::to_string(bz.x) + "*(m-n_(m)) + " + std::to_string(bz.y) + "*m");
    group_check(rep, "delta from its two powers", *F, pw(pw(delta, m - nm), bz.x) + pw(pw(delta, m), bz.y), delta);
    auto Wd = pw(pw(T, -mn) + t, bz.x) + pw(pw(T, -n) + c, bz.y);
    group_check(rep, "delta in the image of psi", *F, psi.apply(Wd), delta);
    group_check(rep, "x2..xn y in the image of psi", *F, psi.apply(u.inverse() + Wd), X.seq(x, 2, n) + y);

    // Small generating sets.
    auto Xi = [&](int i) {
      i = ((i - 1) % n + n) % n + 1;
      return X.seq(x, 1, i - 1) + X.seq(x, i + 1, n) + y;
    };
    for (int i = 1; i <= n - r; ++i)
      group_check(rep, idx("X_i z delta^q = z delta^q X_(i+r)", i), *F, Xi(i) + z + pw(delta, q),
                  z + pw(delta, q) + Xi(i + r));
    for (int i = n - r + 1; i <= n; ++i)
      group_check(rep, idx("X_i z delta^(q+1) = z delta^(q+1) X_(i+r-n)", i), *F, Xi(i) + z + pw(delta, q + 1),
                  z + pw(delta, q + 1) + Xi(i + r - n));
    for (int i = 1; i <= n - 1; ++i) {
      auto head = X.seq(x, 1, i);
      group_check(rep, idx("x_(i+1) from X_1, X_(i+1)", i), *F,
                  head.inverse() + X(x(1)) + Xi(1) + Xi(i + 1).inverse() + head, X(x(i + 1)));
    }
  });
}

VerificationReport verify_thm_3_27(int n, int m, Workbench& bench) {
  require_coprime(n, m);
  if (m < 2 || n >= m) throw InputError("this scenario needs n < m and m >= 2");
  auto PB = params(n, m, Flavor::star, Kind::classical);
  auto PA = params(1, m, Flavor::star, Kind::classical);
  return scenario("dihedral-iso", n, m, bench, [&](VerificationReport& rep) {
    long const nm = inv_mod(n, m);
    long const L = m - nm;

    // B_*(n, m) through the generators s, t, u of the circular presentation.
    auto FB = bench.oracle(PB);
    Names X{FB->alphabet()};
    auto x = [&](int i) { return x_name(PB, i); };
    auto delta = X.seq(x, 1, n) + X("y");
    Presentation C = circular_presentation(n, m);
    HomSpec tau;
    tau.source = C;
    tau.target = FB;
    tau.images = {X.seq(x, 2, n) + X("y") + pw(delta, nm - 1), pw(delta, L), X(x(1))};
    hom_checks(rep, "circular presentation holds in " + PB.label(), tau);
    auto OB = std::make_shared<TranslatedOracle const>(tau, PB.label() + " via s, t, u");

    // G(2, 2m) through M_*(1, m): a = x, b = y.
    auto FA = bench.oracle(PA);
    Presentation D = dihedral_presentation(m);
    auto sigma = HomSpec::from_text(D, FA, {{"a", x_name(PA, 1)}, {"b", "y"}});
    hom_checks(rep, "dihedral relation holds in " + PA.label(), sigma);
    auto OA = std::make_shared<TranslatedOracle const>(sigma, "G(2," + std::to_string(2 * m) + ") via " + PA.label());

    Names S{C}, Dn{D};
    auto s = S("s"), t = S("t"), u = S("u");
    auto a = Dn("a"), b = Dn("b");
    auto e = extended_gcd(nm, L);
    long bx = ((e.x % L) + L) % L;
    if (bx == 0) bx = L;
    long by = (1 - bx * nm) / L;
    rep.add("Bezout pair", bx * nm + by * L == 1,
            std::to_string(bx) + "*" + std::to_string(nm) + " + " + std::to_string(by) + "*" + std::to_string(L));

    auto phi_with = [&](long px, long py) {
      HomSpec h;
      h.source = D;
      h.target = OB;
      h.images = {pw(u + s, px) + pw(t, py) + s.inverse(), s};
      return h;
    };
    auto phi = phi_with(bx, by);
    hom_checks(rep, "phi respects", phi);

    HomSpec psi;
    psi.source = C;
    psi.target = OA;
    psi.images = {b, pw(a + b, L), pw(a + b, nm) + b.inverse()};
    hom_checks(rep, "psi respects", psi);

    char const* cg[] = {"s", "t", "u"};
    for (int g = 0; g < 3; ++g)
      group_check(rep, std::string("phi(psi(") + cg[g] + ")) = " + cg[g], *OB, phi.apply(psi.images[g]), S(cg[g]));
    char const* dg[] = {"a", "b"};
    for (int g = 0; g < 2; ++g)
      group_check(rep, std::string("psi(phi(") + dg[g] + ")) = " + dg[g], *OA, psi.apply(phi.images[g]), Dn(dg[g]));

    auto phi2 = phi_with(bx + L, by - nm);
    group_check(rep, "phi(a) does not depend on the Bezout pair", *OB, phi2.images[0], phi.images[0]);
    group_check(rep, "(us)^(mx) t^(my) = ust", *OB, pw(u + s, m * bx) + pw(t, m * by), u + s + t);
    group_check(rep, "t^n_(m) = (us)^(m-n_(m))", *OB, pw(t, nm), pw(u + s, L));
    group_check(rep, "psi(ust) = (ab)^m", *OA, psi.apply(u + s + t), pw(a + b, m));
    group_check(rep, "phi((ab)^m) = ust", *OB, phi.apply(pw(a + b, m)), u + s + t);
  });
}

namespace {

// phi_(m,n) on the alphabet a_1..a_m, p, q of B**(m, n).
Presentation swapped_alphabet(int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
  names.push_back("p");
  names.push_back("q");
  return group_alphabet(names);
}

}  // namespace

VerificationReport verify_prop_4_6(int n, int m, Workbench& bench) {
  auto PD = params(n, m, Flavor::star_star, Kind::dual);
  return scenario("dual-presentation", n, m, bench, [&](VerificationReport& rep) {
    auto FD = bench.oracle(PD);
    Presentation const& Dd = FD->alphabet();
    Names Dn{Dd};
    auto phi_mn = phi_classical(m, n, swapped_alphabet(m));
    auto const& G = *phi_mn.target;
    Names A{G.alphabet()};
    auto ai = [&](int i) { return phi_mn.images.at(static_cast<std::size_t>(i - 1)); };
    auto const& py = phi_mn.images.at(static_cast<std::size_t>(m));
    auto const& pz = phi_mn.images.at(static_cast<std::size_t>(m + 1));

    HomSpec h1;
    h1.source = Dd;
    h1.target = phi_mn.target;
    h1.images.assign(Dd.size(), SignedWord());
    SignedWord head;
    for (int i = 1; i <= m; ++i) {
      h1.images[Dd.letter("x" + std::to_string(i))] = ai(i);
      h1.images[Dd.letter(z_name(i))] = head.inverse() + pz + head;
      head += ai(i);
    }
    h1.images[Dd.letter("y")] = py;
    hom_checks(rep, "h1 respects", h1);

    long const nm = inv_mod(n, m), mn = inv_mod(m, n);
    auto xs = [&](int a, int b) { return Dn.seq([](int i) { return "x" + std::to_string(i); }, a, b); };
    auto y = Dn("y"), z1 = Dn(z_name(1));
    auto delta = xs(1, m) + y;
    HomSpec h2;
    h2.source = G.alphabet();
    h2.target = FD;
    h2.images = {xs(2, m) + y + pw(z1, m - nm) + pw(delta, mn - 1), pw(z1, nm) + pw(delta, n - mn), xs(1, 1)};
    hom_checks(rep, "h2 respects", h2);

    char const* gen[] = {"s", "t", "u"};
    for (int g = 0; g < 3; ++g)
      group_check(rep, std::string("h1(h2(") + gen[g] + ")) = " + gen[g], G, h1.apply(h2.images[g]), A(gen[g]));

    auto f = g33_form(h1.apply(special_words(PD).Delta));
    rep.add("h1(Delta) is a positive power of stu", f.free.empty() && f.k >= 1, format_g33(f));
  });
}

VerificationReport verify_word_identities(int n, int m, Workbench& bench) {
  auto PC = params(n, m, Flavor::star_star, Kind::classical);
  auto PD = params(n, m, Flavor::star_star, Kind::dual);
  return scenario("word-identities", n, m, bench, [&](VerificationReport& rep) {
    int const q = PC.q(), r = PC.r();
    {
      auto ctx = bench.context(PC);
      Presentation const& B = ctx->presentation();
      auto L = [&](std::string const& name) { return Word{B.letter(name)}; };
      auto x = [&](int i) { return L(x_name(PC, ((i - 1) % n + n) % n + 1)); };
      auto xs = [&](int a, int b) {
        Word w;
        for (int i = a; i <= b; ++i) w += x(i);
        return w;
      };
      auto y = L("y"), z = L("z");
      auto sw = special_words(PC);
      auto const& delta = sw.delta;
      auto const& w = sw.w;
      auto const& W = sw.W;
      for (int i = 1; i <= n - r + 1; ++i)
        monoid_check(rep, idx("w = x_i..x_n y z delta^(q-1) x_1..x_(i+r-1)", i), *ctx,
                     xs(i, n) + y + z + Word::power(delta, q - 1) + xs(1, i + r - 1), w);
      for (int i = n - r + 1; i <= n + 1; ++i)
        monoid_check(rep, idx("W = x_i..x_n y z delta^q x_1..x_(i+r-n-1)", i), *ctx,
                     xs(i, n) + y + z + Word::power(delta, q) + xs(1, i + r - n - 1), W);
      for (int i = 1; i <= n - r; ++i)
        monoid_check(rep, idx("x_i w = w x_(i+r)", i), *ctx, x(i) + w, w + x(i + r));
      monoid_check(rep, "y w = w y", *ctx, y + w, w + y);
      for (int k = 1; k <= r; ++k)
        monoid_check(rep, idx("x_(n-r+k) W = W x_k", k), *ctx, x(n - r + k) + W, W + x(k));
      monoid_check(rep, "y W = W y", *ctx, y + W, W + y);
      monoid_check(rep, "w^(n-r) W^r = delta^m z^n", *ctx, Word::power(w, n - r) + Word::power(W, r),
                   Word::power(delta, m) + Word::power(z, n));
      for (std::size_t i = 0; i < B.size(); ++i) {
        Word s{static_cast<Letter>(i)};
        monoid_check(rep, "classical Delta commutes with " + B.name(s[0]), *ctx, s + sw.Delta, sw.Delta + s);
      }
    }
    {
      auto ctx = bench.context(PD);
      Presentation const& D = ctx->presentation();
      auto L = [&](std::string const& name) { return Word{D.letter(name)}; };
      auto wrap = [&](int i) { return ((i - 1) % m + m) % m + 1; };
      auto x = [&](int i) { return L("x" + std::to_string(wrap(i))); };
      auto z = [&](int i) { return L(z_name(wrap(i))); };
      auto xs = [&](int a, int b) {
        Word out;
        for (int i = a; i <= b; ++i) out += x(i);
        return out;
      };
      auto y = L("y");
      auto sw = special_words(PD);
      auto const& w = sw.w;
      auto const& W = sw.W;
      for (int i = 1; i <= m - n + 1; ++i)
        monoid_check(rep, idx("w = z_i x_i..x_(i+n-1)", i), *ctx, z(i) + xs(i, i + n - 1), w);
      for (int i = 1; i <= m - n; ++i)
        monoid_check(rep, idx("w = x_i z_(i+1) x_(i+1)..x_(i+n-1)", i), *ctx, x(i) + z(i + 1) + xs(i + 1, i + n - 1), w);
      for (int i = m - n + 1; i <= m; ++i)
        monoid_check(rep, idx("W = z_i x_i..x_m y x_1..x_(i+n-m-1)", i), *ctx, z(i) + xs(i, m) + y + xs(1, i + n - m - 1),
                     W);
      for (int i = m - n + 1; i <= m - 1; ++i)
        monoid_check(rep, idx("W = x_i z_(i+1) x_(i+1)..x_m y x_1..x_(i+n-m-1)", i), *ctx,
                     x(i) + z(i + 1) + xs(i + 1, m) + y + xs(1, i + n - m - 1), W);
      monoid_check(rep, "W = x_m y z_1 x_1..x_(n-1)", *ctx, x(m) + y + z(1) + xs(1, n - 1), W);
      monoid_check(rep, "W = y z_1 x_1..x_n", *ctx, y + z(1) + xs(1, n), W);
      for (int i = 1; i <= m - n; ++i) {
        monoid_check(rep, idx("x_i w = w x_(i+n)", i), *ctx, x(i) + w, w + x(i + n));
        monoid_check(rep, idx("z_i w = w z_(i+n)", i), *ctx, z(i) + w, w + z(i + n));
      }
      monoid_check(rep, "dual y w = w y", *ctx, y + w, w + y);
      for (int i = m - n + 1; i <= m; ++i) {
        monoid_check(rep, idx("x_i W = W x_(i+n)", i), *ctx, x(i) + W, W + x(i + n));
        monoid_check(rep, idx("z_i W = W z_(i+n)", i), *ctx, z(i) + W, W + z(i + n));
      }
      monoid_check(rep, "w W = W w", *ctx, w + W, W + w);
      for (std::size_t i = 0; i < D.size(); ++i) {
        Word s{static_cast<Letter>(i)};
        monoid_check(rep, "dual Delta commutes with " + D.name(s[0]), *ctx, s + sw.Delta, sw.Delta + s);
      }
    }
    {
      // Opposite dual monoid, written in the letters of its enlarged presentation.
      BraidParams PO = PD;
      PO.variant = Variant::enlarged_opposite;
      auto ctx = MonoidContext::for_presentation(build_presentation(PO), bench.budgets());
      Presentation const& O = ctx->presentation();
      auto L = [&](std::string const& name) { return Word{O.letter(name)}; };
      auto x = [&](int i) { return L("x" + std::to_string(i)); };
      auto z = [&](int i) { return L(z_name(i)); };
      auto xs = [&](int a, int b) {
        Word out;
        for (int i = a; i <= b; ++i) out += x(i);
        return out;
      };
      auto y = L("y");
      for (int i = 1; i <= m - n + 1; ++i)
        monoid_check(rep, idx("op: x_i..x_(i+n-1) z_(i+n-1) = x_i z_i x_(i+1)..x_(i+n-1)", i), *ctx,
                     xs(i, i + n - 1) + z(i + n - 1), x(i) + z(i) + xs(i + 1, i + n - 1));
      // i = m-n+1 would need z_0; that case is the previous family at i = m-n+1.
      for (int i = m - n + 2; i <= m; ++i)
        monoid_check(rep, idx("op: x_i..x_m y x_1..x_j z_j = x_i z_i x_(i+1)..x_m y x_1..x_j", i), *ctx,
                     xs(i, m) + y + xs(1, i + n - m - 1) + z(i + n - m - 1),
                     x(i) + z(i) + xs(i + 1, m) + y + xs(1, i + n - m - 1));
      monoid_check(rep, "op: y x_1..x_n z_n = y x_1 z_1 x_2..x_n", *ctx, y + xs(1, n) + z(n), y + x(1) + z(1) + xs(2, n));
    }
  });
}

VerificationReport verify_prop_3_37(int n, int m, Workbench& bench) {
  require_coprime(n, m);
  return scenario("reflection-iso", n, m, bench, [&](VerificationReport& rep) {
    std::vector<std::string> src_names;
    for (int i = 1; i <= n; ++i) src_names.push_back("x" + std::to_string(i));
    src_names.push_back("y");
    src_names.push_back("z");
    auto phi_nm = phi_classical(n, m, group_alphabet(src_names));
    Presentation const tgt = swapped_alphabet(m);
    auto phi_mn = phi_classical(m, n, tgt);
    auto const& G = *phi_nm.target;
    Names A{G.alphabet()}, T{tgt};
    auto s = A("s"), t = A("t"), u = A("u");

    auto theta = HomSpec::from_text(G.alphabet(), phi_nm.target, {{"s", "t^-1"}, {"t", "s^-1"}, {"u", "u^-1"}});
    hom_checks(rep, "theta respects", theta);
    for (auto g : {"s", "t", "u"}) group_check(rep, std::string("theta(theta(") + g + ")) = " + g, G, theta.apply(theta.apply(A(g))), A(g));

    auto cycle = T.seq([](int i) { return "a" + std::to_string(i); }, 1, m) + T("p");
    for (int i = 1; i <= n; ++i) {
      int const g = (i - 1) / m, h = (i - 1) % m;
      auto C = pw(cycle, g) + T.seq([](int k) { return "a" + std::to_string(k); }, 1, h);
      auto image = C + T("a" + std::to_string(h + 1)).inverse() + C.inverse();
      group_check(rep, idx("theta(phi(x_i)) = phi'(conjugate of a_(h+1)^-1)", i), G,
                  theta.apply(phi_nm.images[static_cast<std::size_t>(i - 1)]), phi_mn.apply(image));
      group_check(rep, idx("phi'(conjugate) = (us)^(i-1) u^-1 (us)^(1-i)", i), G, phi_mn.apply(image),
                  pw(u + s, i - 1) + u.inverse() + pw(u + s, 1 - i));
    }
    group_check(rep, "theta(phi(y)) = phi'(q^-1)", G, theta.apply(phi_nm.images[static_cast<std::size_t>(n)]),
                phi_mn.apply(T("q").inverse()));
    group_check(rep, "theta(phi(z)) = phi'(p^-1)", G, theta.apply(phi_nm.images[static_cast<std::size_t>(n + 1)]),
                phi_mn.apply(T("p").inverse()));
    for (int N = 0; N <= n; ++N)
      group_check(rep, "t^-N u^-1 t^N = (us)^N u^-1 (us)^-N, N=" + std::to_string(N), G,
                  pw(t, -N) + u.inverse() + pw(t, N), pw(u + s, N) + u.inverse() + pw(u + s, -N));
  });
}

std::vector<std::string> scenario_names() {
  return {"g33-iso", "dihedral-iso", "dual-presentation", "word-identities", "reflection-iso"};
}

VerificationReport run_scenario(std::string const& name, int n, int m, Workbench& bench) {
  if (name == "g33-iso") return verify_thm_3_18(n, m, bench);
  if (name == "dihedral-iso") return verify_thm_3_27(n, m, bench);
  if (name == "dual-presentation") return verify_prop_4_6(n, m, bench);
  if (name == "word-identities") return verify_word_identities(n, m, bench);
  if (name == "reflection-iso") return verify_prop_3_37(n, m, bench);
  throw InputError("unknown scenario '" + name + "'");
}

}  // namespace jgar
