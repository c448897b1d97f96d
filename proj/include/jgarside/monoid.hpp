#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jgarside/complement.hpp"
#include "jgarside/jbraid.hpp"
#include "jgarside/word.hpp"

namespace jgar {

struct Budgets {
  std::size_t class_size = 200000;    // words per rewriting class
  std::size_t theta_steps = 1000000;  // reversing steps per complement computation
  std::size_t divisor_nodes = 50000;  // nodes per divisor enumeration
  friend bool operator==(Budgets const&, Budgets const&) = default;
};

enum class EqMode { automatic, brute, theta };
enum class DivMode { theta_bfs, prefix_oracle };
enum class Side { left, right };

std::string to_string(Side s);

struct DivisorSet {
  Side side = Side::left;
  Word of;                                             // canonical word of the element
  std::vector<Word> members;                           // canonical words, shortlex sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // Hasse edges, indices into members
};

struct Division {
  bool divides = false;
  Word quotient;  // canonical; u * quotient = v when divides
};

struct Evidence {
  std::string name;
  bool pass = false;
  bool inferred = false;  // true when the verdict follows from other checks
  std::string detail;
};

struct GarsideCertificate {
  Word Delta;
  DivisorSet simples;
  std::size_t right_simple_count = 0;
  std::vector<Evidence> evidence;
  Budgets budgets;
  bool valid() const;
  Evidence const* find(std::string const& name) const;
};

struct CertifyOptions {
  bool enumerate_simples = true;
  std::size_t lattice_samples = 60;
  std::size_t lattice_probe = 3000;  // simples probed per sampled pair
  std::size_t cancellation_length = 4;
  unsigned seed = 1;
};

struct CancellationReport {
  bool pass = true;
  std::size_t classes = 0;  // classes enumerated up to the bound
  std::string violation;    // "a.b ~ a.c" style witness
};

// A homogeneous monoid given by a presentation, optionally with a second
// presentation of the same monoid that is right-complemented and satisfies
// C1. The second one drives the complement-based fast paths.
class MonoidContext {
 public:
  // `complemented` must use the same alphabet (same names, same order).
  // Nothing is assumed: C1 and the equivalence of both presentations are
  // checked here.
  static std::shared_ptr<MonoidContext> create(Presentation base, std::optional<Presentation> complemented,
                                               Budgets budgets = {});
  // Context for a braid monoid family member (variant is ignored: the base
  // presentation is used and the enlarged one drives the fast paths). The
  // opposite context is attached as well.
  static std::shared_ptr<MonoidContext> for_params(BraidParams params, Budgets budgets = {});
  // Generic context: p itself is the complemented presentation when it
  // satisfies C1; the opposite context is built the same way.
  static std::shared_ptr<MonoidContext> for_presentation(Presentation p, Budgets budgets = {});

  Presentation const& presentation() const { return base_; }
  Presentation const* complemented() const { return complemented_ ? &*complemented_ : nullptr; }
  Budgets const& budgets() const { return budgets_; }

  bool homogeneous() const { return homogeneous_; }
  bool c1() const { return c1_; }
  bool equivalent() const { return equivalent_; }
  std::string const& equivalence_detail() const { return equivalence_detail_; }
  // C1 holds for the complemented presentation and it presents this monoid.
  bool theta_ready() const { return homogeneous_ && c1_ && equivalent_; }

  std::shared_ptr<MonoidContext const> opposite() const { return opposite_; }
  void set_opposite(std::shared_ptr<MonoidContext const> op) { opposite_ = std::move(op); }

  // Rewriting class of w (all words equal to w). Throws BudgetExceeded.
  std::vector<Word> closure(Word const& w) const;

  bool words_equal(Word const& u, Word const& v, EqMode mode = EqMode::automatic) const;
  // Lexicographically least word of the class (alphabet order).
  Word canonical(Word const& w, EqMode mode = EqMode::automatic) const;
  Division divides_left(Word const& u, Word const& v, EqMode mode = EqMode::automatic) const;
  Division divides_right(Word const& u, Word const& v) const;
  // u <=_L v without computing the quotient.
  bool left_divides(Word const& u, Word const& v) const;
  // Right lcm data: u * first = v * second, both undefined when there is no
  // common right multiple. Requires theta_ready.
  std::optional<std::pair<Word, Word>> right_lcm(Word const& u, Word const& v) const;

  DivisorSet left_divisors(Word const& v, DivMode mode = DivMode::theta_bfs) const;
  DivisorSet right_divisors(Word const& v) const;

  std::size_t class_budget() const { return budgets_.class_size; }

 private:
  MonoidContext() = default;
  void certify_fast_path();
  bool use_theta(EqMode mode) const;
  Word canonical_theta(Word const& w) const;
  Word canonical_brute(Word const& w) const;

  Presentation base_;
  std::optional<Presentation> complemented_;
  Budgets budgets_;
  bool homogeneous_ = false;
  bool c1_ = false;
  bool equivalent_ = false;
  std::string equivalence_detail_;
  std::vector<std::vector<std::pair<Word, Word>>> rules_;  // by first letter of the left side
  std::unique_ptr<ThetaEngine> theta_;
  std::shared_ptr<MonoidContext const> opposite_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Word, WordHash> canon_cache_;
};

using ContextPtr = std::shared_ptr<MonoidContext const>;

// Garside certification of Delta.
GarsideCertificate verify_garside(MonoidContext const& ctx, Word const& Delta, CertifyOptions const& options = {});

// Normal form s1 ... sk, each si the left gcd of si...sk and Delta, by greedy
// letter extension. Requires theta_ready and Delta central.
std::vector<Word> greedy_nf(MonoidContext const& ctx, Word const& Delta, Word const& u);
// Same normal form, found by scanning the simples from the longest down.
std::vector<Word> greedy_nf_scan(MonoidContext const& ctx, DivisorSet const& simples, Word const& u);

CancellationReport cancellative_oracle(MonoidContext const& ctx, std::size_t max_length);

// Equality oracle for check_C2. One context per presentation, cached; gives
// up (nullopt) when a budget runs out.
EqualityOracle monoid_equality_oracle(Budgets budgets = {});

// Every element up to weight L, one canonical word per class, by weight.
std::vector<std::vector<Word>> enumerate_classes(MonoidContext const& ctx, std::size_t max_weight);

}  // namespace jgar
