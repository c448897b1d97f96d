#include "jgarside/jbraid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "jgarside/complement.hpp"
#include "jgarside/errors.hpp"

namespace jgar {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::star_star: return "star-star";
    case Flavor::star: return "star";
    case Flavor::upper_star: return "upper-star";
    case Flavor::plain: return "plain";
  }
  return "?";
}

std::string to_string(Kind k) { return k == Kind::classical ? "classical" : "dual"; }

std::string to_string(Variant v) {
  switch (v) {
    case Variant::base: return "base";
    case Variant::enlarged: return "enlarged";
    case Variant::enlarged_opposite: return "enlarged-opposite";
  }
  return "?";
}

Flavor parse_flavor(std::string_view s) {
  if (s == "star-star") return Flavor::star_star;
  if (s == "star") return Flavor::star;
  if (s == "upper-star") return Flavor::upper_star;
  if (s == "plain") return Flavor::plain;
  throw InputError("unknown flavor '" + std::string(s) + "'");
}

Kind parse_kind(std::string_view s) {
  if (s == "classical") return Kind::classical;
  if (s == "dual") return Kind::dual;
  throw InputError("unknown kind '" + std::string(s) + "'");
}

Variant parse_variant(std::string_view s) {
  if (s == "base") return Variant::base;
  if (s == "enlarged") return Variant::enlarged;
  if (s == "enlarged-opposite") return Variant::enlarged_opposite;
  throw InputError("unknown variant '" + std::string(s) + "'");
}

void BraidParams::validate() const {
  if (n < 1 || m < 1) throw InputError("n and m must be positive");
  if (std::gcd(n, m) != 1) throw InputError("n and m must be coprime");
  if (n > m) throw InputError("n > m is not supported (swap the parameters)");
  if (m > 60) throw InputError("m too large");
  if (flavor == Flavor::star && m < 2) throw InputError("flavor star needs m >= 2");
  if (flavor == Flavor::upper_star && n < 2) throw InputError("flavor upper-star needs n >= 2");
  if (flavor == Flavor::plain && (n < 2 || m < 2)) throw InputError("flavor plain needs n, m >= 2");
}

std::string BraidParams::label() const {
  std::string f;
  switch (flavor) {
    case Flavor::star_star: f = "**"; break;
    case Flavor::star: f = "_*"; break;
    case Flavor::upper_star: f = "^*"; break;
    case Flavor::plain: f = ""; break;
  }
  return std::string(kind == Kind::classical ? "M" : "D") + f + "(" + std::to_string(n) + "," +
         std::to_string(m) + ")";
}

Bezout extended_gcd(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long qq = old_r / r;
    long tmp = old_r - qq * r;
    old_r = r;
    r = tmp;
    tmp = old_s - qq * s;
    old_s = s;
    s = tmp;
    tmp = old_t - qq * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

long inv_mod(long n, long m) {
  if (n < 1 || m < 1) throw InputError("inv_mod needs positive arguments");
  if (std::gcd(n, m) != 1) throw InputError("inv_mod needs coprime arguments");
  if (m == 1) return 1;
  long x = extended_gcd(n, m).x % m;
  if (x < 0) x += m;
  return x;
}

bool inverse_identity_holds(long n, long m) {
  return n * inv_mod(n, m) + m * inv_mod(m, n) == n * m + 1;
}

std::string x_name(BraidParams const& params, int i) {
  if (params.kind == Kind::classical && params.n == 1) return "x";
  return "x" + std::to_string(i);
}

std::string z_name(int i) { return "z" + std::to_string(i); }

namespace {

// Word builder over a braid alphabet. Letters that are absent in the current
// flavor are silently skipped: quotient presentations delete the killed
// generator from every word.
class Alpha {
 public:
  explicit Alpha(BraidParams const& params, bool with_y, bool with_z) : params_(params) {
    int const nx = params.kind == Kind::classical ? params.n : params.m;
    for (int i = 1; i <= nx; ++i) x_.push_back(p_.add_letter(x_name(params, i)));
    if (with_y) y_ = p_.add_letter("y");
    if (with_z) {
      if (params.kind == Kind::classical) {
        z_.push_back(p_.add_letter("z"));
      } else {
        for (int i = 1; i <= params.m; ++i) z_.push_back(p_.add_letter(z_name(i)));
      }
    }
  }

  Word x(int i) const { return Word{x_.at(static_cast<std::size_t>(i - 1))}; }
  // x_a ... x_b, empty when b < a. Indices must already lie in range.
  Word xs(int a, int b) const {
    Word w;
    for (int i = a; i <= b; ++i) w += x(i);
    return w;
  }
  // x_i ... x_{i+len-1} with indices taken modulo the number of x letters.
  Word window(int i, int len) const {
    Word w;
    int const k = static_cast<int>(x_.size());
    for (int j = 0; j < len; ++j) w += x(((i - 1 + j) % k + k) % k + 1);
    return w;
  }
  Word y() const { return y_ ? Word{*y_} : Word{}; }
  Word z() const { return z_.empty() ? Word{} : Word{z_.front()}; }
  Word z(int i) const { return z_.empty() ? Word{} : Word{z_.at(static_cast<std::size_t>(i - 1))}; }

  void rel(Word const& a, Word const& b) { p_.add_relation(a, b); }
  Presentation take() { return drop_trivial(p_); }

 private:
  BraidParams params_;
  Presentation p_;
  std::vector<Letter> x_;
  std::optional<Letter> y_;
  std::vector<Letter> z_;
};

Word pw(Word const& w, int k) { return Word::power(w, static_cast<std::size_t>(std::max(k, 0))); }

bool has_y(BraidParams const& p) {
  if (p.kind == Kind::classical) return p.flavor == Flavor::star_star || p.flavor == Flavor::star;
  return p.flavor == Flavor::star_star || p.flavor == Flavor::upper_star;
}

bool has_z(BraidParams const& p) {
  if (p.kind == Kind::classical) return p.flavor == Flavor::star_star || p.flavor == Flavor::upper_star;
  return p.flavor == Flavor::star_star || p.flavor == Flavor::star;
}

// Classical base presentations with y and/or z.
Presentation classical_base(BraidParams const& p) {
  Alpha a(p, has_y(p), has_z(p));
  int const n = p.n, q = p.q(), r = p.r();
  Word const delta = a.xs(1, n) + a.y();
  Word const core = a.y() + a.z();
  if (!a.z().empty()) a.rel(a.xs(1, n) + core, a.z() + a.xs(1, n) + a.y());
  for (int i = 1; i <= n - r; ++i)
    a.rel(a.xs(i + 1, n) + core + pw(delta, q - 1) + a.xs(1, i + r),
          a.xs(i, n) + core + pw(delta, q - 1) + a.xs(1, i + r - 1));
  for (int i = n - r + 1; i <= n; ++i)
    a.rel(a.xs(i + 1, n) + core + pw(delta, q) + a.xs(1, i + r - n),
          a.xs(i, n) + core + pw(delta, q) + a.xs(1, i + r - n - 1));
  return a.take();
}

// Plain classical: all windows of length m in x_1..x_n are equal.
Presentation classical_plain(BraidParams const& p) {
  Alpha a(p, false, false);
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j) a.rel(a.window(i, p.m), a.window(j, p.m));
  return a.take();
}

// Enlarged classical presentation.
Presentation classical_enlarged(BraidParams const& p) {
  Alpha a(p, true, true);
  int const n = p.n, q = p.q(), r = p.r();
  Word const delta = a.xs(1, n) + a.y();
  Word const Y = a.y(), Z = a.z();
  auto Wi = [&](int i) { return a.xs(i, n) + Y + Z + pw(delta, q - 1) + a.xs(1, i + r - 1); };
  auto Vi = [&](int i) { return a.xs(i, n) + Y + Z + pw(delta, q) + a.xs(1, i + r - n - 1); };
  a.rel(Z + delta, delta + Z);
  for (int i = 1; i <= n - r + 1; ++i)
    for (int j = i + 1; j <= n - r + 1; ++j) a.rel(Wi(i), Wi(j));
  for (int i = n - r + 2; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) a.rel(Vi(i), Vi(j));
  for (int i = 1; i <= n - r + 1; ++i)
    for (int j = n - r + 2; j <= n + 1; ++j) a.rel(Wi(i) + Y, Vi(j));
  for (int i = 2; i <= n - r + 1; ++i) a.rel(Wi(i), Z + pw(delta, q) + a.xs(1, r));
  for (int i = n - r + 2; i <= n + 1; ++i) a.rel(Vi(i), Z + pw(delta, q) + a.xs(1, r) + Y);
  return a.take();
}

// Enlarged classical opposite, letters in reversed order (see opposite_relabeling).
Presentation classical_enlarged_opposite(BraidParams const& p) {
  Alpha a(p, true, true);
  int const n = p.n, q = p.q(), r = p.r();
  Word const Y = a.y(), Z = a.z();
  Word const delta = Y + a.xs(1, n);
  auto Ai = [&](int i) { return a.xs(i, n) + Z + pw(delta, q - 1) + Y + a.xs(1, i + r - 1); };
  auto Bi = [&](int i) { return a.xs(i, n) + delta + Z + pw(delta, q - 1) + Y + a.xs(1, i + r - n - 1); };
  a.rel(Z + delta, delta + Z);
  for (int i = 1; i <= n - r + 1; ++i)
    for (int j = i + 1; j <= n - r + 1; ++j) a.rel(Ai(i), Ai(j));
  for (int i = n - r + 2; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) a.rel(Bi(i), Bi(j));
  for (int i = 1; i <= n - r + 1; ++i)
    for (int j = n - r + 2; j <= n + 1; ++j) a.rel(Ai(i) + Y, Bi(j));
  if (r == 0) {
    // n = 1: A(2) already starts with z, so (b) covers {x, z} and (e) is its
    // consequence. The pair {x, y} gets A(1) = delta z delta^(q-1).
    a.rel(Ai(1), delta + Z + pw(delta, q - 1));
    return a.take();
  }
  for (int i = 1; i <= n - r + 1; ++i) a.rel(Ai(i) + Y, Z + pw(delta, q) + Y + a.xs(1, r));
  for (int i = n - r + 2; i <= n; ++i) a.rel(Bi(i), Z + pw(delta, q) + Y + a.xs(1, r));
  return a.take();
}

// Dual base presentation.
Presentation dual_base_star_star(BraidParams const& p) {
  Alpha a(p, true, true);
  int const n = p.n, m = p.m;
  Word const Y = a.y();
  for (int i = 1; i <= m - 1; ++i) a.rel(a.x(i) + a.z(i + 1), a.z(i) + a.x(i));
  a.rel(a.x(m) + Y + a.z(1), a.z(m) + a.x(m) + Y);
  for (int i = 1; i <= m - n; ++i)
    a.rel(a.z(i + 1) + a.xs(i + 1, i + n), a.z(i) + a.xs(i, i + n - 1));
  for (int i = m - n + 1; i <= m - 1; ++i)
    a.rel(a.z(i + 1) + a.xs(i + 1, m) + Y + a.xs(1, i + n - m),
          a.z(i) + a.xs(i, m) + Y + a.xs(1, i + n - m - 1));
  a.rel(Y + a.z(1) + a.xs(1, n), a.z(m) + a.x(m) + Y + a.xs(1, n - 1));
  return a.take();
}

// Dual, y killed.
Presentation dual_base_star(BraidParams const& p) {
  Alpha a(p, false, true);
  int const n = p.n, m = p.m;
  for (int i = 1; i <= m - 1; ++i) a.rel(a.x(i) + a.z(i + 1), a.z(i) + a.x(i));
  a.rel(a.x(m) + a.z(1), a.z(m) + a.x(m));
  for (int i = 1; i <= m - 1; ++i) a.rel(a.z(i + 1) + a.window(i + 1, n), a.z(i) + a.window(i, n));
  return a.take();
}

// Dual, z letters killed.
Presentation dual_base_upper_star(BraidParams const& p) {
  Alpha a(p, true, false);
  int const n = p.n, m = p.m;
  Word const Y = a.y();
  for (int i = 1; i <= m - n; ++i) a.rel(a.xs(i + 1, i + n), a.xs(i, i + n - 1));
  for (int i = m - n + 1; i <= m - 1; ++i)
    a.rel(a.xs(i + 1, m) + Y + a.xs(1, i + n - m), a.xs(i, m) + Y + a.xs(1, i + n - m - 1));
  a.rel(Y + a.xs(1, n), a.x(m) + Y + a.xs(1, n - 1));
  return a.take();
}

// The plain dual monoid: all windows of length n in x_1..x_m are equal.
Presentation dual_base_plain(BraidParams const& p) {
  Alpha a(p, false, false);
  for (int i = 1; i <= p.m; ++i)
    for (int j = i + 1; j <= p.m; ++j) a.rel(a.window(i, p.n), a.window(j, p.n));
  return a.take();
}

// Enlarged dual, n >= 2.
Presentation dual_enlarged_general(BraidParams const& p) {
  Alpha a(p, true, true);
  int const n = p.n, m = p.m;
  Word const Y = a.y();
  auto C = [&](int i) { return a.z(i) + a.xs(i, i + n - 1); };
  auto D = [&](int i) { return a.z(i) + a.xs(i, m) + Y + a.xs(1, i + n - m - 1); };
  Word const E = Y + a.z(1) + a.xs(1, n);
  Word const F = a.z(m) + a.x(m) + Y + a.xs(1, n - 1);
  auto XC = [&](int i) { return a.x(i) + a.z(i + 1) + a.xs(i + 1, i + n - 1); };
  auto XD = [&](int i) { return a.x(i) + a.z(i + 1) + a.xs(i + 1, m) + Y + a.xs(1, i + n - m - 1); };
  Word const G = a.x(m) + Y + a.z(1) + a.xs(1, n - 1);
  int const lo = m - n + 1;  // last index of the first block
  for (int i = 1; i <= m - 1; ++i) a.rel(a.x(i) + a.z(i + 1), a.z(i) + a.x(i));       // a
  a.rel(a.x(m) + Y + a.z(1), a.z(m) + a.x(m) + Y);                                      // b
  for (int i = 1; i <= lo; ++i)
    for (int j = i + 1; j <= lo; ++j) a.rel(C(i), C(j));                                // c
  for (int i = lo + 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) a.rel(D(i), D(j));                                 // d
  a.rel(E, F);                                                                          // e
  for (int i = 1; i <= lo; ++i)
    for (int j = 1; j <= lo; ++j)
      if (i != j) a.rel(XC(i), C(j));                                                   // f
  for (int i = 1; i <= lo; ++i)
    for (int j = i + 1; j <= lo; ++j) a.rel(XC(i), XC(j));                              // g
  for (int i = 1; i <= lo; ++i)
    for (int j = lo + 1; j <= m; ++j) a.rel(XC(i) + Y, D(j));                           // h
  for (int i = 1; i <= lo; ++i)
    for (int j = lo + 1; j <= m - 1; ++j) a.rel(XC(i) + Y, XD(j));                      // i
  for (int i = 1; i <= lo; ++i) a.rel(XC(i) + Y, G);                                    // j
  for (int i = 1; i <= lo; ++i) a.rel(XC(i) + Y, E);                                    // k
  for (int i = lo + 1; i <= m - 1; ++i)
    for (int j = 1; j <= lo; ++j) a.rel(XD(i), C(j) + Y);                               // l
  for (int i = lo + 1; i <= m - 1; ++i)
    for (int j = lo + 1; j <= m; ++j)
      if (i != j) a.rel(XD(i), D(j));                                                   // m
  for (int i = lo + 1; i <= m - 1; ++i)
    for (int j = i + 1; j <= m - 1; ++j) a.rel(XD(i), XD(j));                           // n
  for (int i = lo + 1; i <= m - 1; ++i) a.rel(XD(i), G);                                // o
  for (int i = lo + 1; i <= m - 1; ++i) a.rel(XD(i), E);                                // p
  for (int i = 1; i <= lo; ++i)
    for (int j = lo + 1; j <= m; ++j) a.rel(C(i) + Y, D(j));                            // q
  for (int i = 1; i <= lo; ++i) a.rel(C(i) + Y, G);                                     // r
  for (int i = 1; i <= lo; ++i) a.rel(C(i) + Y, E);                                     // s
  for (int i = lo + 1; i <= m - 1; ++i) a.rel(D(i), G);                                 // t
  for (int i = lo + 1; i <= m - 1; ++i) a.rel(D(i), E);                                 // u
  a.rel(E, G);                                                                          // v
  return a.take();
}

// Enlarged dual, n = 1.
Presentation dual_enlarged_one(BraidParams const& p) {
  Alpha a(p, true, true);
  int const m = p.m;
  Word const Y = a.y();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) a.rel(a.z(i) + a.x(i), a.z(j) + a.x(j));
  for (int i = 1; i <= m - 1; ++i)
    for (int j = 1; j <= m; ++j) a.rel(a.x(i) + a.z(i + 1), a.z(j) + a.x(j));
  for (int i = 1; i <= m - 1; ++i)
    for (int j = i + 1; j <= m - 1; ++j) a.rel(a.x(i) + a.z(i + 1), a.x(j) + a.z(j + 1));
  for (int i = 1; i <= m; ++i) {
    a.rel(a.z(i) + a.x(i) + Y, Y + a.z(1) + a.x(1));
    a.rel(a.z(i) + a.x(i) + Y, a.x(m) + Y + a.z(1));
  }
  for (int i = 1; i <= m - 1; ++i) {
    a.rel(a.x(i) + a.z(i + 1) + Y, Y + a.z(1) + a.x(1));
    a.rel(a.x(i) + a.z(i + 1) + Y, a.x(m) + Y + a.z(1));
  }
  a.rel(a.x(m) + Y + a.z(1), Y + a.z(1) + a.x(1));
  return a.take();
}

// Enlarged dual opposite, letters in reversed order. The tail of family (d)
// is x_1 ... x_{i+n-m-1}, as in family (n).
Presentation dual_enlarged_opposite(BraidParams const& p) {
  Alpha a(p, true, true);
  int const n = p.n, m = p.m;
  Word const Y = a.y();
  auto P = [&](int i) { return a.x(i) + a.z(i) + a.xs(i + 1, i + n - 1); };
  auto Q = [&](int i) { return a.x(i) + a.z(i) + a.xs(i + 1, m) + Y + a.xs(1, i + n - m - 1); };
  auto R = [&](int j) { return a.z(j) + a.xs(j + 1, j + n); };
  auto S = [&](int j) { return a.z(j) + a.xs(j + 1, m) + Y + a.xs(1, j + n - m); };
  Word const T = Y + a.x(1) + a.z(1) + a.xs(2, n);
  int const lo = m - n + 1;
  for (int i = 1; i <= m - 1; ++i) a.rel(a.z(i) + a.x(i + 1), a.x(i + 1) + a.z(i + 1));  // a
  a.rel(a.z(m) + Y + a.x(1), Y + a.x(1) + a.z(1));                                        // b
  for (int i = 1; i <= lo; ++i)
    for (int j = i + 1; j <= lo; ++j) a.rel(P(i), P(j));                                   // c
  for (int i = lo + 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) a.rel(Q(i), Q(j));                                    // d
  for (int i = 1; i <= lo; ++i)
    for (int j = 1; j <= m - n; ++j)
      if (i != j + 1) a.rel(P(i), R(j));                                                   // e
  for (int i = 1; i <= lo; ++i)
    for (int j = lo; j <= m; ++j) a.rel(P(i) + Y, S(j));                                   // f
  for (int i = 1; i <= lo; ++i)
    for (int j = lo + 1; j <= m; ++j) a.rel(P(i) + Y, Q(j));                               // g
  for (int i = lo + 1; i <= m; ++i)
    for (int j = 1; j <= m - n; ++j) a.rel(Q(i), R(j) + Y);                                // h
  for (int i = lo + 1; i <= m; ++i)
    for (int j = lo; j <= m; ++j)
      if (i != j + 1) a.rel(Q(i), S(j));                                                   // i
  for (int i = 1; i <= m - n; ++i)
    for (int j = i + 1; j <= m - n; ++j) a.rel(R(i), R(j));                                // j
  for (int i = 1; i <= m - n; ++i)
    for (int j = lo; j <= m; ++j) a.rel(R(i) + Y, S(j));                                   // k
  for (int i = lo; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) a.rel(S(i), S(j));                                    // l
  for (int i = 1; i <= lo; ++i) a.rel(T, P(i) + Y);                                        // m
  for (int i = lo + 1; i <= m; ++i) a.rel(T, Q(i));                                        // n
  for (int i = 1; i <= m - n; ++i) a.rel(T, R(i) + Y);                                     // o
  // i = m is (b) times x_2..x_n, a second relation on {y, z_m}.
  for (int i = lo; i <= m - 1; ++i) a.rel(T, S(i));                                        // p
  return a.take();
}

LetterSet killed_letters(Presentation const& full, BraidParams const& p) {
  LetterSet X;
  auto kill = [&](std::string const& name) { X.insert(full.letter(name)); };
  if (!has_y(p)) kill("y");
  if (!has_z(p)) {
    if (p.kind == Kind::classical) kill("z");
    else
      for (int i = 1; i <= p.m; ++i) kill(z_name(i));
  }
  return X;
}

}  // namespace

Presentation build_presentation(BraidParams const& params) {
  params.validate();
  BraidParams full = params;
  full.flavor = Flavor::star_star;
  if (params.variant == Variant::base) {
    if (params.kind == Kind::classical)
      return params.flavor == Flavor::plain ? classical_plain(params) : classical_base(params);
    switch (params.flavor) {
      case Flavor::star_star: return dual_base_star_star(params);
      case Flavor::star: return dual_base_star(params);
      case Flavor::upper_star: return dual_base_upper_star(params);
      case Flavor::plain: return dual_base_plain(params);
    }
  }
  Presentation big;
  if (params.kind == Kind::classical) {
    big = params.variant == Variant::enlarged ? classical_enlarged(full) : classical_enlarged_opposite(full);
  } else if (params.variant == Variant::enlarged) {
    big = params.n >= 2 ? dual_enlarged_general(full) : dual_enlarged_one(full);
  } else {
    big = dual_enlarged_opposite(full);
  }
  if (params.flavor == Flavor::star_star) return big;
  return sub_X_presentation(big, killed_letters(big, params));
}

std::vector<Letter> opposite_relabeling(Presentation const& p, BraidParams const& params) {
  int const nx = params.kind == Kind::classical ? params.n : params.m;
  std::vector<Letter> perm(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    auto const& name = p.names()[s];
    std::string target = name;
    if (name.size() > 1 && (name[0] == 'x' || name[0] == 'z')) {
      int k = std::stoi(name.substr(1));
      target = name.substr(0, 1) + std::to_string(nx + 1 - k);
    }
    perm[s] = p.letter(target);
  }
  return perm;
}

SpecialWords special_words(BraidParams const& params) {
  params.validate();
  BraidParams full = params;
  full.flavor = Flavor::star_star;
  full.variant = Variant::base;
  Presentation const big = build_presentation(full);
  // Words are built over the star-star alphabet, then the killed letters are
  // deleted and the ids are mapped into the flavor's alphabet.
  auto L = [&](std::string const& name) { return Word{big.letter(name)}; };
  auto xs = [&](int a, int b) {
    Word w;
    for (int i = a; i <= b; ++i) w += L(x_name(full, i));
    return w;
  };
  SpecialWords sw;
  int const n = params.n, m = params.m;
  if (params.kind == Kind::classical) {
    int const q = params.q(), r = params.r();
    sw.delta = xs(1, n) + L("y");
    sw.w = L("z") + pw(sw.delta, q) + xs(1, r);
    sw.W = sw.w + L("y");
    sw.Delta = pw(sw.delta, m) + pw(L("z"), n);
  } else {
    sw.delta = xs(1, m) + L("y");
    sw.w = L(z_name(1)) + xs(1, n);
    sw.W = L(z_name(m - n + 1)) + xs(m - n + 1, m) + L("y");
    sw.Delta = pw(sw.w, m - n) + pw(sw.W, n);
  }
  if (params.flavor == Flavor::star_star) return sw;
  BraidParams target = params;
  target.variant = Variant::base;
  Presentation const small = build_presentation(target);
  auto shrink = [&](Word const& w) {
    Word out;
    for (Letter s : w)
      if (auto t = small.find(big.name(s))) out.push_back(*t);
    return out;
  };
  return {shrink(sw.delta), shrink(sw.w), shrink(sw.W), shrink(sw.Delta)};
}

namespace {

struct Preset {
  std::string name;
  BraidParams params;
  std::string text;
};

std::string letters_text(std::vector<std::string> const& names) {
  std::string out;
  for (auto const& s : names) out += "letter " + s + "\n";
  return out;
}

Preset make_preset(std::string_view name) {
  auto with_d = [&](std::string_view prefix) -> std::optional<int> {
    if (name.substr(0, prefix.size()) != prefix || name.back() != ')') return std::nullopt;
    auto inner = std::string(name.substr(prefix.size(), name.size() - prefix.size() - 1));
    try {
      std::size_t used = 0;
      int d = std::stoi(inner, &used);
      if (used != inner.size()) throw InputError("bad preset parameter");
      return d;
    } catch (std::exception const&) {
      throw InputError("bad preset parameter in '" + std::string(name) + "'");
    }
  };
  auto X = [](int i) { return "x" + std::to_string(i); };
  auto Z = [](int i) { return "z" + std::to_string(i); };
  if (name == "G15-classical")
    return {std::string(name), {1, 2, Flavor::star_star, Kind::classical, Variant::base},
            "letter x\nletter y\nletter z\nrel z.x.y = x.y.z\nrel x.y.z.x.y = y.z.x.y.x\n"};
  if (name == "example-4.3")
    return {std::string(name), {2, 3, Flavor::star_star, Kind::classical, Variant::base},
            "letter x1\nletter x2\nletter y\nletter z\n"
            "rel z.x1.x2.y = x1.x2.y.z\n"
            "rel x1.x2.y.z.x1 = x2.y.z.x1.x2\n"
            "rel x2.y.z.x1.x2.y = y.z.x1.x2.y.x1\n"};
  if (name == "G13-classical")
    return {std::string(name), {2, 3, Flavor::star, Kind::classical, Variant::base},
            "letter x1\nletter x2\nletter y\n"
            "rel x1.x2.y.x1 = x2.y.x1.x2\n"
            "rel x2.y.x1.x2.y = y.x1.x2.y.x1\n"};
  if (name == "G(3c,3,2)-classical")
    return {std::string(name), {2, 3, Flavor::upper_star, Kind::classical, Variant::base},
            "letter x1\nletter x2\nletter z\n"
            "rel z.x1.x2 = x1.x2.z\n"
            "rel x1.x2.z.x1 = x2.z.x1.x2 = z.x1.x2.x1\n"};
  if (name == "G15-dual")
    return {std::string(name), {1, 2, Flavor::star_star, Kind::dual, Variant::base},
            "letter x1\nletter x2\nletter y\nletter z1\nletter z2\n"
            "rel z1.x1 = z2.x2 = x1.z2\n"
            "rel x2.y.z1 = y.z1.x1 = z2.x2.y\n"};
  if (name == "G13-dual")
    return {std::string(name), {2, 3, Flavor::star, Kind::dual, Variant::base},
            "letter x1\nletter x2\nletter x3\nletter z1\nletter z2\nletter z3\n"
            "rel x1.z2 = z1.x1\nrel x2.z3 = z2.x2\nrel x3.z1 = z3.x3\n"
            "rel z1.x1.x2 = z2.x2.x3 = z3.x3.x1\n"};
  if (auto d = with_d("G(cd,d,2)-dual(")) {
    Preset p{std::string(name), {2, *d, Flavor::upper_star, Kind::dual, Variant::base}, {}};
    p.params.validate();
    std::vector<std::string> names;
    for (int i = 1; i <= *d; ++i) names.push_back(X(i));
    names.push_back("y");
    p.text = letters_text(names);
    for (int i = 1; i <= *d - 1; ++i)
      for (int j = i + 1; j <= *d - 1; ++j)
        p.text += "rel " + X(i) + "." + X(i + 1) + " = " + X(j) + "." + X(j + 1) + "\n";
    p.text += "rel " + X(*d - 1) + "." + X(*d) + ".y = " + X(*d) + ".y." + X(1) + " = y." + X(1) + "." + X(2) + "\n";
    return p;
  }
  if (auto d = with_d("G(2cd,2d,2)-dual(")) {
    Preset p{std::string(name), {1, *d, Flavor::star_star, Kind::dual, Variant::base}, {}};
    p.params.validate();
    std::vector<std::string> names;
    for (int i = 1; i <= *d; ++i) names.push_back(X(i));
    names.push_back("y");
    for (int i = 1; i <= *d; ++i) names.push_back(Z(i));
    p.text = letters_text(names);
    for (int i = 1; i <= *d - 1; ++i)
      p.text += "rel " + X(i) + "." + Z(i + 1) + " = " + Z(i) + "." + X(i) + " = " + Z(i + 1) + "." + X(i + 1) + "\n";
    p.text += "rel " + X(*d) + ".y." + Z(1) + " = y." + Z(1) + "." + X(1) + " = " + Z(*d) + "." + X(*d) + ".y\n";
    return p;
  }
  throw InputError("unknown preset '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"G15-classical", "G15-dual",           "G13-classical",       "G13-dual",
          "G(cd,d,2)-dual(d)", "G(2cd,2d,2)-dual(d)", "G(3c,3,2)-classical", "example-4.3"};
}

BraidParams preset_params(std::string_view name) { return make_preset(name).params; }

std::string preset_text(std::string_view name) { return make_preset(name).text; }

Presentation preset_table(std::string_view name) {
  auto preset = make_preset(name);
  Presentation fixture = parse_presentation(preset.text);
  Presentation built = build_presentation(preset.params);
  if (canonical_form(fixture) != canonical_form(built))
    throw Error("preset '" + preset.name + "' differs from build_presentation(" + preset.params.label() + ")");
  return fixture;
}

}  // namespace jgar
