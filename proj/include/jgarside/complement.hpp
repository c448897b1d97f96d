#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jgarside/word.hpp"

namespace jgar {

enum class Classification { not_right_complemented, right_complemented, right_full };
std::string to_string(Classification c);

// Syntactic right complement of a presentation on letter pairs.
class ThetaTable {
 public:
  explicit ThetaTable(Presentation p);

  Presentation const& presentation() const { return p_; }
  Classification classification() const { return classification_; }
  // Reasons for not being right-complemented, or missing pairs when not right-full.
  std::vector<std::string> const& problems() const { return problems_; }

  // theta(s, t) on letters; the empty word when s == t; nullptr when undefined.
  Word const* entry(Letter s, Letter t) const;
  std::size_t size() const { return p_.size(); }

 private:
  Presentation p_;
  Classification classification_ = Classification::right_full;
  std::vector<std::optional<Word>> table_;
  std::vector<std::string> problems_;
  Word empty_;
};

ThetaTable build_theta(Presentation const& p);

enum class ThetaStatus { defined, undefined, budget_exceeded };

struct ThetaResult {
  ThetaStatus status = ThetaStatus::undefined;
  Word word;
  bool defined() const { return status == ThetaStatus::defined; }
};

// Both complements at once: uv' = vu' with u' = theta(u, v), v' = theta(v, u).
struct Reversal {
  ThetaStatus status = ThetaStatus::undefined;
  Word theta_uv;
  Word theta_vu;
  std::size_t steps = 0;
};

// Computes theta(u, v) and theta(v, u) by right reversing of u^-1 v. A
// missing letter pair makes the result undefined; more than `budget`
// elementary steps makes it budget_exceeded.
Reversal reverse(ThetaTable const& t, Word const& u, Word const& v, std::size_t budget);

ThetaResult theta_extend(ThetaTable const& t, Word const& u, Word const& v, std::size_t budget);

// Memoizing wrapper used by the monoid engine. Thread safe.
class ThetaEngine {
 public:
  ThetaEngine(std::shared_ptr<ThetaTable const> table, std::size_t step_budget,
              std::size_t cache_limit = 1u << 18);

  ThetaTable const& table() const { return *table_; }
  std::size_t step_budget() const { return budget_; }
  Reversal reverse(Word const& u, Word const& v) const;

 private:
  struct Key {
    Word u, v;
    bool operator==(Key const&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(Key const& k) const noexcept {
      WordHash h;
      return h(k.u) * 1000003u ^ h(k.v);
    }
  };
  std::shared_ptr<ThetaTable const> table_;
  std::size_t budget_;
  std::size_t cache_limit_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Key, Reversal, KeyHash> cache_;
};

struct CubeFailure {
  Letter a, b, c;
  ThetaResult lhs;  // theta(theta(a,b), theta(a,c))
  ThetaResult rhs;  // theta(theta(b,a), theta(b,c))
};

struct CubeReport {
  bool pass = true;
  bool inconclusive = false;
  std::vector<CubeFailure> failures;
};

CubeReport check_cube_sharp(Presentation const& p, std::size_t budget = 1000000);
CubeReport check_cube_sharp(ThetaTable const& t, std::size_t budget = 1000000);

struct C1Labeling {
  Letter a1, a2, a3;
  Word u;
};

struct C1Report {
  bool pass = true;
  bool right_full = true;
  std::vector<std::string> problems;  // right-fullness problems
  std::vector<C1Labeling> labelings;  // one per 3-subset that succeeded
  std::vector<std::array<Letter, 3>> failing_subsets;
  // Replays the recorded labelings against a table; true iff all hold.
  bool replay(ThetaTable const& t) const;
};

C1Report check_C1(Presentation const& p);
C1Report check_C1(ThetaTable const& t);

// One relation u.(theta(u,v)/X) = v.(theta(v,u)/X) per unordered pair of
// remaining letters. Throws InputError when p is not right-full.
Presentation sub_X_presentation(Presentation const& p, LetterSet const& X);

// Decides equality of two words in the monoid presented by a presentation.
// Returns nullopt when the oracle gives up.
using EqualityOracle = std::function<std::optional<bool>(Presentation const&, Word const&, Word const&)>;

struct C2Bullet {
  bool pass = true;
  bool inconclusive = false;
  std::string detail;
};

struct C2Report {
  bool pass = true;
  bool inconclusive = false;
  C2Bullet c1;           // (a) C1 for p
  C2Bullet weights;      // (b) X-weight balanced in every relation
  C2Bullet isomorphism;  // (c) <S|R>_X and <S|R>/X present the same monoid
};

// oracle_sub decides equality in <S|R>_X, oracle_quot in <S|R>/X.
C2Report check_C2(Presentation const& p, LetterSet const& X, EqualityOracle const& oracle_sub,
                  EqualityOracle const& oracle_quot);

}  // namespace jgar
