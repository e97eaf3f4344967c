#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace growthlab::groups {

/// Defining sequence of a Grigorchuk-family group: a finite prefix followed
/// by an eventually periodic tail, both over the alphabet {0,1,2}.
class OmegaSequence {
 public:
  OmegaSequence() : period_("0") {}
  OmegaSequence(std::string prefix, std::string period);

  /// Symbol at position k (0-based).
  int at(std::size_t k) const;

  /// True iff every symbol from position k on equals `symbol`.
  bool constant_from(std::size_t k, int symbol) const;

  const std::string& prefix() const noexcept { return prefix_; }
  const std::string& period() const noexcept { return period_; }

  bool operator==(const OmegaSequence&) const = default;

 private:
  std::string prefix_;
  std::string period_;
};

// Letters of the family alphabet. b, c, d are involutions generating a
// Klein four-group together with the identity; a is the rooted swap.
inline constexpr int kGrigA = 0;
inline constexpr int kGrigB = 1;
inline constexpr int kGrigC = 2;
inline constexpr int kGrigD = 3;

/// Word over {a,b,c,d}; all four letters are involutions so no signs.
using GrigWord = std::vector<std::uint8_t>;

/// Rewrites with aa = bb = cc = dd = empty and xy = z for distinct
/// x,y,z in {b,c,d}. These relations hold for every omega, so the result
/// represents the same element in each family member. The output alternates
/// between a and non-a letters.
GrigWord grig_reduce(const GrigWord& w);

/// Optional instrumentation for the triviality recursion.
struct TrivialityStats {
  std::size_t calls = 0;
  std::size_t max_child_over_bound = 0;  // children longer than ceil((n+1)/2)
};

/// Exact solution of the word problem: true iff w represents the identity in
/// the family member whose defining sequence, shifted by `offset`, is omega.
/// Words of length <= 1 are decided by table; longer words recurse into the
/// two first-level sections over the shifted sequence, which strictly
/// shortens the word.
bool grig_trivial(const GrigWord& w, const OmegaSequence& omega,
                  std::size_t offset = 0, TrivialityStats* stats = nullptr);

/// Action portrait down to `depth` levels: one bit per internal tree vertex
/// (breadth-first), set iff the section at that vertex swaps its subtrees.
/// Equal elements have equal portraits at every depth, so this is a sound
/// coarse key; it is not injective.
std::uint64_t grig_portrait(const GrigWord& w, const OmegaSequence& omega,
                            std::size_t offset, int depth);

/// First-level sections of a word with an even number of a's.
/// Returned words live at offset+1.
std::pair<GrigWord, GrigWord> grig_sections(const GrigWord& w,
                                            const OmegaSequence& omega,
                                            std::size_t offset);

bool grig_root_swaps(const GrigWord& w);

}  // namespace growthlab::groups
