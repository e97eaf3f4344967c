#pragma once

#include "growthlab/growth.hpp"
#include "growthlab/numeric.hpp"
#include "growthlab/realization.hpp"
#include "growthlab/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace growthlab::certs {

/// Bit sequences indexing interleaved witness words.
using BitString = std::vector<std::uint8_t>;

/// Evaluates w^(a1) v w^(a2) v ... w^(ap) v exactly.
groups::Element witness_element(const groups::RealizationPtr& r, const Word& v,
                                const Word& w, const BitString& alpha);

/// Verified injectivity record for the interleaved-word family. Injectivity
/// of all words up to p_verified forces gamma(n) >= 2^floor(n/cost) within
/// the tested range; the extrapolated rate bound 2^(1/cost) is labeled
/// certified-if-free because finite testing cannot prove freeness for all p.
struct WitnessCertificate {
  Word v;
  Word w;
  int cost = 0;        // reduced lengths of v and w, as given
  int p_verified = 0;
  bool injective = false;
  Real omega_lower = 1;  // 2^(1/cost); meaningful when injective
  std::optional<std::pair<BitString, BitString>> collision;

  /// 2^floor(n/cost); certified against measured gamma for
  /// n <= p_verified * cost.
  Int gamma_lower(long n) const;
  long gamma_lower_range() const { return static_cast<long>(p_verified) * cost; }
};

/// Evaluates all 2^(p_max+1) - 2 interleaved words and checks pairwise
/// distinctness (canonical keys with exact-equality fallback). On failure
/// the certificate reports the first colliding pair in enumeration order.
WitnessCertificate verify_witness(const groups::RealizationPtr& r,
                                  const Word& v, const Word& w, int p_max,
                                  std::size_t element_budget = 8'000'000);

/// Enumerates reduced candidate pairs, cheapest total length first with ties
/// broken shortlex-lexicographically, and returns the first pair passing
/// p_max. Absence of a witness within the bounds is a valid result.
std::optional<WitnessCertificate> witness_search(
    const groups::RealizationPtr& r, int max_word_len, int p_max,
    std::size_t element_budget = 8'000'000);

/// Finite-generation probe for the subgroup generated by all conjugates
/// v^-l w v^l. Exact for lamp-only wreath inputs; otherwise a bounded
/// closure search that only ever proves stabilization, never refutes it.
struct StabilizationReport {
  enum class Status { kStabilizedAt, kNoStabilization, kExactInfinite };

  Word v;
  Word w;
  Status status = Status::kNoStabilization;
  int stabilized_level = -1;  // valid when status == kStabilizedAt
  int l_tested = 0;
  bool exact_mode = false;
  bool budget_hit = false;
  std::string detail;
};

/// force_heuristic skips the exact wreath path; the bounded search must
/// never contradict the exact answer where both apply.
StabilizationReport conjugate_stabilization(const groups::RealizationPtr& r,
                                            const Word& v, const Word& w,
                                            int l_max,
                                            std::size_t element_budget =
                                                200'000,
                                            bool force_heuristic = false);

/// Constants of the nilpotency-degree lower bound: s = d+1,
/// alpha = 3*4^(d+1), beta = 2*f(2s) and the corresponding roots of two.
struct TheoreticalBound {
  int d = 0;
  int s = 0;
  Int alpha;
  Int beta;
  Real omega_alpha;  // 2^(1/alpha)
  Real omega_beta;   // 2^(1/beta)
};

/// Requires d >= 1. beta <= alpha always holds (beta = alpha - 4).
TheoreticalBound theoretical_bound(int d);

/// Cross-check on a realization declared metabelian non-polycyclic
/// (lamplighter or bs kinds): the best found witness bound and the measured
/// upper bound must both clear 2^(1/48).
struct MetabelianCrosscheck {
  bool applicable = false;
  std::string reason;
  Real threshold = 1;  // 2^(1/48)
  std::optional<WitnessCertificate> best;
  growth::GrowthTable table;
  growth::GrowthEstimate estimate;
  bool omega_lower_ok = false;
  bool upper_ok = false;
  bool gamma_lower_ok = false;
  Real margin = 0;  // omega_lower - threshold
};

MetabelianCrosscheck crosscheck_metabelian(const groups::RealizationPtr& r,
                                           int radius, int p_max,
                                           int max_word_len = 2,
                                           const growth::BallOptions& options =
                                               {});

}  // namespace growthlab::certs
