#include "growthlab/grigorchuk.hpp"

#include "growthlab/errors.hpp"

#include <utility>

namespace growthlab::groups {

OmegaSequence::OmegaSequence(std::string prefix, std::string period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) {
    throw SemanticError("omega sequence needs a nonempty period");
  }
  for (const std::string* part : {&prefix_, &period_}) {
    for (char c : *part) {
      if (c < '0' || c > '2') {
        throw SemanticError("omega sequence alphabet is {0,1,2}");
      }
    }
  }
}

int OmegaSequence::at(std::size_t k) const {
  if (k < prefix_.size()) return prefix_[k] - '0';
  return period_[(k - prefix_.size()) % period_.size()] - '0';
}

bool OmegaSequence::constant_from(std::size_t k, int symbol) const {
  for (std::size_t i = k; i < prefix_.size(); ++i) {
    if (prefix_[i] - '0' != symbol) return false;
  }
  for (char c : period_) {
    if (c - '0' != symbol) return false;
  }
  // When k lands inside the period, positions of the period before k repeat
  // later anyway, so the check above already covers them.
  return true;
}

GrigWord grig_reduce(const GrigWord& w) {
  GrigWord out;
  out.reserve(w.size());
  for (std::uint8_t x : w) {
    while (true) {
      if (out.empty()) {
        out.push_back(x);
        break;
      }
      const std::uint8_t top = out.back();
      if (top == x) {  // involution
        out.pop_back();
        break;
      }
      if (top != kGrigA && x != kGrigA) {
        // Klein four-group: product of two distinct non-a letters is the
        // third one, which may cascade with the new top.
        out.pop_back();
        x = top ^ x;
        continue;
      }
      out.push_back(x);
      break;
    }
  }
  return out;
}

namespace {

// The sequence symbol that makes the given letter act trivially at a level.
inline int killing_symbol(std::uint8_t letter) {
  switch (letter) {
    case kGrigB: return 2;
    case kGrigC: return 1;
    case kGrigD: return 0;
    default: throw SemanticError("killing_symbol: letter has no level action");
  }
}

}  // namespace

bool grig_root_swaps(const GrigWord& w) {
  std::size_t a_count = 0;
  for (std::uint8_t x : w) {
    if (x == kGrigA) ++a_count;
  }
  return (a_count % 2) == 1;
}

std::pair<GrigWord, GrigWord> grig_sections(const GrigWord& w,
                                            const OmegaSequence& omega,
                                            std::size_t offset) {
  const int s = omega.at(offset);
  GrigWord left, right;
  left.reserve(w.size() / 2 + 1);
  right.reserve(w.size() / 2 + 1);
  int parity = 0;
  for (std::uint8_t x : w) {
    if (x == kGrigA) {
      parity ^= 1;
      continue;
    }
    // At symbol s the letter acts as `a` on one subtree unless s kills it,
    // and continues as the same letter (shifted sequence) on the other.
    const bool has_action = killing_symbol(x) != s;
    if (parity == 0) {
      if (has_action) left.push_back(kGrigA);
      right.push_back(x);
    } else {
      left.push_back(x);
      if (has_action) right.push_back(kGrigA);
    }
  }
  return {grig_reduce(left), grig_reduce(right)};
}

bool grig_trivial(const GrigWord& w, const OmegaSequence& omega,
                  std::size_t offset, TrivialityStats* stats) {
  const GrigWord r = grig_reduce(w);
  if (stats) ++stats->calls;
  if (r.empty()) return true;
  if (r.size() == 1) {
    if (r[0] == kGrigA) return false;
    return omega.constant_from(offset, killing_symbol(r[0]));
  }
  if (grig_root_swaps(r)) return false;
  auto [left, right] = grig_sections(r, omega, offset);
  if (stats) {
    const std::size_t bound = (r.size() + 2) / 2;  // ceil((n+1)/2)
    if (left.size() > bound || right.size() > bound) {
      ++stats->max_child_over_bound;
    }
  }
  return grig_trivial(left, omega, offset + 1, stats) &&
         grig_trivial(right, omega, offset + 1, stats);
}

namespace {

void portrait_bits(const GrigWord& w, const OmegaSequence& omega,
                   std::size_t offset, int depth, std::uint64_t& bits,
                   std::size_t node) {
  if (depth <= 0) return;
  const GrigWord r = grig_reduce(w);
  if (grig_root_swaps(r)) {
    bits |= (std::uint64_t{1} << node);
  }
  if (depth == 1) return;
  // Sections are defined relative to the untwisted coordinates; the portrait
  // of the swap-normalized element: g = (g0,g1)*swap^e, children recorded in
  // coordinate order.
  auto [left, right] = grig_sections(r, omega, offset);
  portrait_bits(left, omega, offset + 1, depth - 1, bits, 2 * node + 1);
  portrait_bits(right, omega, offset + 1, depth - 1, bits, 2 * node + 2);
}

}  // namespace

std::uint64_t grig_portrait(const GrigWord& w, const OmegaSequence& omega,
                            std::size_t offset, int depth) {
  if (depth < 1 || depth > 6) {
    throw SemanticError("grig_portrait depth must be in 1..6");
  }
  std::uint64_t bits = 0;
  portrait_bits(w, omega, offset, depth, bits, 0);
  return bits;
}

}  // namespace growthlab::groups
