#pragma once

#include "growthlab/numeric.hpp"
#include "growthlab/word.hpp"

#include <cstdint>
#include <vector>

namespace growthlab::freecalc {

/// Weighted commutator sets over a free alphabet of k symbols:
/// level 1 is X together with X^-1, level i collects all [u^+-1, v^+-1]
/// with u of weight i1, v of weight i2, i1+i2 = i. Members are deduplicated
/// as reduced words and freely-trivial entries are dropped; both counts are
/// recorded so set sizes stay auditable.
struct WeightSets {
  struct Level {
    int weight = 0;
    std::vector<Word> words;  // reduced, shortlex-sorted
    std::size_t candidates = 0;
    std::size_t trivial_dropped = 0;
    std::size_t duplicates_dropped = 0;
  };
  int generator_count = 0;
  std::vector<Level> levels;  // levels[i-1] holds weight i

  const Level& level(int weight) const {
    return levels[static_cast<std::size_t>(weight - 1)];
  }
};

WeightSets weight_sets(int generator_count, int max_weight,
                       std::size_t candidate_cap = 4'000'000);

/// f(1) = 1, f(n+1) = 2 f(n) + 2; closed form 3 * 2^(n-1) - 2.
Int depth_bound(int n);

/// Maximum reduced length over a nonempty set of words.
std::size_t depth_of_set(const std::vector<Word>& words);

/// Per-level depth versus the f bound, plus the doubling inequality
/// 2 (f(i) + f(j)) <= f(i+j) checked for all i+j <= 2 * max_weight.
struct DepthReport {
  struct Row {
    int weight = 0;
    std::size_t set_size = 0;
    std::size_t depth = 0;
    Int bound;
    bool depth_equals_bound = false;
    bool within_bound = false;
  };
  int generator_count = 0;
  int max_weight = 0;
  std::vector<Row> rows;
  bool all_within_bound = false;
  bool doubling_inequality_ok = false;
};

DepthReport verify_depth_bound(int generator_count, int max_weight,
                               std::size_t candidate_cap = 4'000'000);

/// Iterated commutators of a with b^-+1 over the free group on {a, b}:
/// level 1 is {[a,b], [a,b^-1]}, level i+1 commutates level i with b^-+1.
/// Freely-trivial entries are excluded and counted.
struct TowerLevel {
  std::vector<Word> words;
  std::size_t trivial_dropped = 0;
};

std::vector<TowerLevel> commutator_tower(int levels);

// In commutator_tower and shift_expand the alphabet is {a, b} with symbol
// ids 0 and 1.
inline constexpr std::int32_t kTowerA = 0;
inline constexpr std::int32_t kTowerB = 1;

/// Letter a_l, the conjugate of a by the l-th power of b.
struct ShiftLetter {
  long index = 0;
  int sign = 1;

  friend bool operator==(const ShiftLetter&, const ShiftLetter&) = default;
};

struct ShiftWord {
  std::vector<ShiftLetter> letters;
  long window = 0;  // declared bound on |index|
};

/// Rewrites a word in the normal closure of a (zero exponent sum of b) as a
/// word in the letters a_l. Throws SemanticError when the exponent sum of b
/// is nonzero or some index leaves the window.
ShiftWord shift_expand(const Word& c, long window);

/// Substitutes a_l -> b^-l a b^l and reduces; inverse of shift_expand.
Word substitute_shift(const ShiftWord& s);

/// One collected slot: the original non-target letter followed by the
/// commutator factors it accumulated (innermost first), with their nesting
/// heights.
struct CollectionSlot {
  Word plain;
  std::vector<Word> factors;
  std::vector<int> factor_heights;
};

struct CollectionResult {
  long sigma = 0;  // signed count of the target letter in the input
  Word tail;       // reassembled trace word (plain concatenation)
  std::vector<CollectionSlot> trace;
};

/// Moves every appearance of the target letter to the left, applying
/// xy = yx[x,y] right to left. The identity target^sigma * tail = input
/// holds in the free group.
CollectionResult collect_letter(const Word& w, std::int32_t target);

}  // namespace growthlab::freecalc
