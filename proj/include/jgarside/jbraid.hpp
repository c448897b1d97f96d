#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jgarside/word.hpp"

namespace jgar {

enum class Flavor { star_star, star, upper_star, plain };
enum class Kind { classical, dual };
enum class Variant { base, enlarged, enlarged_opposite };

std::string to_string(Flavor f);
std::string to_string(Kind k);
std::string to_string(Variant v);
Flavor parse_flavor(std::string_view s);
Kind parse_kind(std::string_view s);
Variant parse_variant(std::string_view s);

struct BraidParams {
  int n = 1;
  int m = 1;
  Flavor flavor = Flavor::star_star;
  Kind kind = Kind::classical;
  Variant variant = Variant::base;

  // m = q n + r with 0 <= r < n.
  int q() const { return m / n; }
  int r() const { return m % n; }
  // Throws InputError unless 1 <= n <= m, gcd(n, m) = 1 and the flavor exists.
  void validate() const;
  std::string label() const;  // e.g. "M**(2,3)" or "D_*(2,3)"
};

// Extended Euclid: a x + b y = gcd(a, b).
struct Bezout {
  long g, x, y;
};
Bezout extended_gcd(long a, long b);

// n_(m): the inverse of n modulo m in [1, m-1], and 1 when m = 1.
long inv_mod(long n, long m);
// n n_(m) + m m_(n) == n m + 1.
bool inverse_identity_holds(long n, long m);

Presentation build_presentation(BraidParams const& params);

// The enlarged opposite presentations are built with the x letters (and z
// letters in the dual case) listed in reverse order. This
// returns the letter permutation that turns build_presentation(params) for
// variant enlarged_opposite into a presentation of the opposite monoid over
// the original letter names.
std::vector<Letter> opposite_relabeling(Presentation const& p, BraidParams const& params);

struct SpecialWords {
  Word delta;
  Word w;
  Word W;
  Word Delta;
};
SpecialWords special_words(BraidParams const& params);

// Alphabet-level helpers shared with the scenario code.
std::string x_name(BraidParams const& params, int i);
std::string z_name(int i);

std::vector<std::string> preset_names();
// Parameters of a preset, with d substituted where the name carries one,
// e.g. "G(2cd,2d,2)-dual(3)".
BraidParams preset_params(std::string_view name);
// The fixture text of a preset. Throws Error if it differs from
// the parametrized build after canonical serialization.
Presentation preset_table(std::string_view name);
// The literal text of a preset fixture.
std::string preset_text(std::string_view name);

}  // namespace jgar
