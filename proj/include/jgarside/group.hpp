#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jgarside/monoid.hpp"
#include "jgarside/word.hpp"

namespace jgar {

struct SignedLetter {
  Letter letter = 0;
  bool inverse = false;
  friend bool operator==(SignedLetter const&, SignedLetter const&) = default;
  friend auto operator<=>(SignedLetter const&, SignedLetter const&) = default;
};

// A group word. Letters index the alphabet of some presentation.
class SignedWord {
 public:
  SignedWord() = default;
  explicit SignedWord(std::vector<SignedLetter> letters) : letters_(std::move(letters)) {}
  // The positive word w.
  explicit SignedWord(Word const& w);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::vector<SignedLetter> const& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(SignedLetter l) { letters_.push_back(l); }
  SignedWord& operator+=(SignedWord const& o) {
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }
  friend SignedWord operator+(SignedWord a, SignedWord const& b) { return a += b; }
  friend bool operator==(SignedWord const&, SignedWord const&) = default;

  SignedWord inverse() const;
  // Integer power; negative exponents use the inverse.
  SignedWord pow(long k) const;
  SignedWord freely_reduced() const;
  bool positive() const;
  // The underlying positive word. Throws InputError if a letter is inverted.
  Word to_word() const;

 private:
  std::vector<SignedLetter> letters_;
};

// "x1.y^-1.z", "x^3", "1" for the empty word.
SignedWord parse_signed(Presentation const& alphabet, std::string_view text);
std::string format_signed(Presentation const& alphabet, SignedWord const& w);

// A presentation read as a group presentation on the given letter names.
Presentation group_alphabet(std::vector<std::string> const& names);

// <s, t, u | stu = tus = ust>
Presentation g33_presentation();
// <a, b | (ab)^d = (ba)^d>
Presentation dihedral_presentation(int d);
// <s, t, u | stu = tus = ust, t^m = (ust)^(m - n_(m))>
Presentation circular_presentation(int n, int m);

// Delta^-k p with Delta central.
struct Fraction {
  long k = 0;
  Word p;
};

// Group word problem over a monoid with a central Garside element. Needs the
// light evidence of a certificate: homogeneity, C1 on both sides, Delta
// central and every generator dividing Delta.
class FractionEngine {
 public:
  FractionEngine(ContextPtr ctx, GarsideCertificate const& cert);

  MonoidContext const& context() const { return *ctx_; }
  Word const& Delta() const { return Delta_; }
  // c with s.c = Delta.
  Word const& complement(Letter s) const { return complements_.at(s); }

  Fraction of(SignedWord const& w) const;
  Fraction multiply(Fraction const& a, Fraction const& b) const;
  Fraction inverse(Fraction const& a) const;
  Fraction reduce(Fraction a) const;
  bool equal(Fraction const& a, Fraction const& b) const;
  bool equal(SignedWord const& u, SignedWord const& v) const { return equal(of(u), of(v)); }
  // A signed word of the fraction: Delta^-k p.
  SignedWord word(Fraction const& f) const;

 private:
  ContextPtr ctx_;
  Word Delta_;
  std::vector<Word> complements_;
};

bool group_equal(FractionEngine const& engine, SignedWord const& u, SignedWord const& v);

// Element of G(3,3) = F(s, t) x <c>, c = stu central, u = t^-1 s^-1 c.
struct G33Form {
  SignedWord free;  // freely reduced, letters 0 = s and 1 = t
  long k = 0;
  friend bool operator==(G33Form const&, G33Form const&) = default;
};

// w is over the alphabet of g33_presentation().
G33Form g33_form(SignedWord const& w);
std::string format_g33(G33Form const& f);

// A decision procedure for equality in some group.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual Presentation const& alphabet() const = 0;
  virtual bool equal(SignedWord const& u, SignedWord const& v) const = 0;
  virtual std::string name() const = 0;
};

using OraclePtr = std::shared_ptr<GroupOracle const>;

class G33Oracle : public GroupOracle {
 public:
  G33Oracle() : alphabet_(g33_presentation()) {}
  Presentation const& alphabet() const override { return alphabet_; }
  bool equal(SignedWord const& u, SignedWord const& v) const override { return g33_form(u) == g33_form(v); }
  std::string name() const override { return "G(3,3) free-by-center model"; }

 private:
  Presentation alphabet_;
};

class FractionOracle : public GroupOracle {
 public:
  FractionOracle(std::shared_ptr<FractionEngine const> engine, std::string label)
      : engine_(std::move(engine)), label_(std::move(label)) {}
  Presentation const& alphabet() const override { return engine_->context().presentation(); }
  bool equal(SignedWord const& u, SignedWord const& v) const override { return engine_->equal(u, v); }
  std::string name() const override { return label_; }
  FractionEngine const& engine() const { return *engine_; }

 private:
  std::shared_ptr<FractionEngine const> engine_;
  std::string label_;
};

// Group homomorphism from the group presented by `source` into the group of
// the target oracle.
struct HomSpec {
  Presentation source;
  OraclePtr target;
  std::vector<SignedWord> images;  // one per source letter, over target letters

  // Images given as text over the target alphabet, keyed by source letter name.
  static HomSpec from_text(Presentation source, OraclePtr target,
                           std::vector<std::pair<std::string, std::string>> const& images);
  SignedWord apply(SignedWord const& w) const;
  SignedWord apply(Word const& w) const { return apply(SignedWord(w)); }
};

// Equality in `target` after pushing words through `translation`: the oracle
// of a group given by generators written in another group.
class TranslatedOracle : public GroupOracle {
 public:
  explicit TranslatedOracle(HomSpec translation, std::string label)
      : h_(std::move(translation)), label_(std::move(label)) {}
  Presentation const& alphabet() const override { return h_.source; }
  bool equal(SignedWord const& u, SignedWord const& v) const override {
    return h_.target->equal(h_.apply(u), h_.apply(v));
  }
  std::string name() const override { return label_; }
  HomSpec const& translation() const { return h_; }

 private:
  HomSpec h_;
  std::string label_;
};

struct RelationVerdict {
  std::string relation;  // source text
  bool pass = false;
  bool budget_exceeded = false;
  std::string detail;
};

struct HomReport {
  std::vector<RelationVerdict> relations;
  bool pass() const;
};

// Each relation l = r of the source must hold as h(l) = h(r) in the target.
HomReport check_hom(HomSpec const& h);

}  // namespace jgar
