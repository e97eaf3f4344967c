#pragma once

#include "growthlab/numeric.hpp"
#include "growthlab/realization.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace growthlab::growth {

struct BallOptions {
  std::size_t element_cap = 8'000'000;
  int workers = 1;
};

struct BallMember {
  std::string key;
  groups::Element element;
  int distance = 0;
};

/// Exact geodesic ball: members carry true word lengths (BFS layers), listed
/// in canonical order (distance-major, canonical key within a layer). The
/// order does not depend on the worker count.
class Ball {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  groups::RealizationPtr realization;
  int radius = 0;
  std::vector<BallMember> members;
  std::vector<std::size_t> sphere_sizes;  // indexed by distance 0..radius

  /// Index of the member equal to e, or npos when e lies outside the ball.
  std::size_t find(const groups::Element& e) const;

  void rebuild_index();

 private:
  std::unordered_map<std::string, std::vector<std::uint32_t>> index_;
};

/// Breadth-first closure under right multiplication by X and X^-1,
/// deduplicated by canonical key with exact-equality fallback. Throws
/// BudgetExceeded (carrying the completed radius) when the element cap is
/// hit.
Ball enumerate_ball(const groups::RealizationPtr& r, int radius,
                    const BallOptions& options = {});

/// Exact sphere/ball counts per radius.
struct GrowthTable {
  int radius = 0;
  std::vector<Int> spheres;  // spheres[n], n = 0..radius
  std::vector<Int> gamma;    // gamma[n] = sum of spheres up to n
};

GrowthTable growth_table(const Ball& ball);

/// Certified upper bounds and naive estimates of the exponential growth
/// rate. upper[n-1] = min over k <= n of gamma(k)^(1/k) is a true upper
/// bound for every n; naive[n-1] = gamma(n)^(1/n) carries no guarantee.
struct GrowthEstimate {
  std::vector<Real> upper;   // index n-1, n = 1..radius
  std::vector<Real> naive;   // index n-1
  Real entropy_upper = 0;    // log upper(radius)
  std::optional<Real> witness_lower;
};

/// Roots are extracted via 50-digit logarithms of the exact counts, well
/// below the 1e-12 reporting resolution.
GrowthEstimate omega_bounds(const GrowthTable& table);

struct SubmultViolation {
  int m = 0;
  int n = 0;
};

/// Empty iff gamma(m+n) <= gamma(m)*gamma(n) for all m+n <= radius. Any
/// entry indicates an enumeration bug, never a property of the group.
std::vector<SubmultViolation> check_submultiplicative(const GrowthTable& t);

/// Pointwise comparison of a group table against the table of a declared
/// quotient (computed with corresponding generator images, same radius).
struct QuotientComparison {
  int radius = 0;
  bool gamma_ok = false;
  bool upper_ok = false;
  std::vector<int> gamma_violations;  // radii with gamma_quotient > gamma_group
};

QuotientComparison compare_quotient(const GrowthTable& group_table,
                                    const GrowthTable& quotient_table);

}  // namespace growthlab::growth
