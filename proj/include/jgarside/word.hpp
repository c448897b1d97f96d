#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace jgar {

using Letter = std::uint8_t;
using LetterSet = std::set<Letter>;

// A finite sequence of letter ids. The empty word is the identity.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  template <class It>
  Word(It first, It last) : letters_(first, last) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  std::vector<Letter> const& letters() const { return letters_; }

  void push_back(Letter s) { letters_.push_back(s); }
  Word& operator+=(Word const& other) {
    letters_.insert(letters_.end(), other.begin(), other.end());
    return *this;
  }
  friend Word operator+(Word lhs, Word const& rhs) { return lhs += rhs; }

  Word reversed() const { return Word(letters_.rbegin(), letters_.rend()); }
  Word prefix(std::size_t len) const { return Word(begin(), begin() + static_cast<std::ptrdiff_t>(len)); }
  Word suffix_from(std::size_t pos) const { return Word(begin() + static_cast<std::ptrdiff_t>(pos), end()); }
  bool starts_with(Word const& p) const;
  // Number of occurrences of s.
  std::size_t count(Letter s) const;

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;

  static Word power(Word const& w, std::size_t k);

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

struct Relation {
  Word lhs;
  Word rhs;
  friend bool operator==(Relation const&, Relation const&) = default;
};

// A positive monoid presentation <S | R> with a weight function on S.
class Presentation {
 public:
  Presentation() = default;

  // Appends a letter and returns its id. Throws InputError on a duplicate name.
  Letter add_letter(std::string name, unsigned weight = 1);
  void set_weight(Letter s, unsigned weight);
  void add_relation(Word lhs, Word rhs);
  // Adds a relation written with letter names, e.g. "x1.y" and "y.x1".
  void add_relation(std::string_view lhs, std::string_view rhs);

  std::size_t size() const { return names_.size(); }
  std::vector<std::string> const& names() const { return names_; }
  std::vector<unsigned> const& weights() const { return weights_; }
  std::vector<Relation> const& relations() const { return relations_; }
  std::vector<Relation>& relations() { return relations_; }

  std::string const& name(Letter s) const { return names_.at(s); }
  std::optional<Letter> find(std::string_view name) const;
  Letter letter(std::string_view name) const;  // throws InputError
  unsigned weight(Letter s) const { return weights_.at(s); }
  unsigned long weight(Word const& w) const;

  // "x1.y.z"; the empty word is "1".
  Word parse_word(std::string_view text) const;
  std::string format(Word const& w) const;
  std::string format(Relation const& r) const;

  // Every letter, in declaration order.
  LetterSet all_letters() const;

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> weights_;
  std::vector<Relation> relations_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> issues;
};

ValidationReport validate_presentation(Presentation const& p);
bool is_homogeneous(Presentation const& p);
Presentation opposite_presentation(Presentation const& p);

Word remove_letters(Word const& w, LetterSet const& X);

// The quotient presentation p/X. Relation indices whose sides became empty or
// identical are reported so that callers can decide what to do with them.
struct QuotientPresentation {
  Presentation presentation;
  std::vector<std::size_t> empty_sided;
  std::vector<std::size_t> trivial;
  // Letter id in p for each letter of the quotient.
  std::vector<Letter> kept;
};
QuotientPresentation remove_letters(Presentation const& p, LetterSet const& X);

// Drops relations of the form w = w and exact duplicates (up to orientation).
Presentation drop_trivial(Presentation const& p);

// Renames letters through a permutation of ids: letter s of p becomes perm[s].
// The alphabet order and names of p are kept.
Presentation relabel(Presentation const& p, std::vector<Letter> const& perm);
Word relabel(Word const& w, std::vector<Letter> const& perm);

// Text format: "letter <name>", "weight <name> <k>", "rel <w1> = <w2> [= <w3> ...]".
// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(std::string_view text);
std::string serialize(Presentation const& p);

// Order-independent serialization. Relations are merged into connected
// components of the graph on words, each component printed as a sorted chain.
// Two presentations with the same alphabet and the same relation components
// serialize identically.
std::string canonical_form(Presentation const& p);

// Shortlex order: shorter first, then lexicographic by id.
bool shortlex_less(Word const& a, Word const& b);

}  // namespace jgar
