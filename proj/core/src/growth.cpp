#include "growthlab/growth.hpp"

#include "growthlab/errors.hpp"

#include <algorithm>
#include <thread>
#include <utility>

namespace growthlab::growth {

using groups::Element;

std::size_t Ball::find(const Element& e) const {
  const auto it = index_.find(groups::canonical_key(e));
  if (it == index_.end()) return npos;
  for (std::uint32_t idx : it->second) {
    if (groups::equal(members[idx].element, e)) return idx;
  }
  return npos;
}

void Ball::rebuild_index() {
  index_.clear();
  index_.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    index_[members[i].key].push_back(static_cast<std::uint32_t>(i));
  }
}

namespace {

struct Candidate {
  std::string key;
  std::string tiebreak;
  Element element;
};

void expand_range(const std::vector<std::uint32_t>& frontier,
                  std::size_t begin, std::size_t end,
                  const std::vector<BallMember>& members,
                  const std::vector<Element>& alphabet, bool injective,
                  std::vector<Candidate>& out) {
  out.reserve((end - begin) * alphabet.size());
  for (std::size_t i = begin; i < end; ++i) {
    const Element& base = members[frontier[i]].element;
    for (const Element& step : alphabet) {
      Element next = groups::multiply(base, step);
      std::string key = groups::canonical_key(next);
      std::string tie = injective ? std::string() : groups::key_tiebreak(next);
      out.push_back(Candidate{std::move(key), std::move(tie), std::move(next)});
    }
  }
}

}  // namespace

Ball enumerate_ball(const groups::RealizationPtr& r, int radius,
                    const BallOptions& options) {
  if (!r) throw SemanticError("null realization");
  if (radius < 0) throw SemanticError("radius must be >= 0");
  if (options.element_cap == 0) {
    throw SemanticError("element cap must be positive");
  }
  const int workers = std::max(1, options.workers);

  Ball ball;
  ball.realization = r;
  ball.radius = radius;

  const Element id = groups::identity_element(r);
  ball.members.push_back(BallMember{groups::canonical_key(id), id, 0});
  ball.sphere_sizes.assign(1, 1);
  ball.rebuild_index();

  const bool injective = r->injective_keys();
  const std::vector<Element> alphabet = groups::neighbor_alphabet(r);

  std::unordered_map<std::string, std::vector<std::uint32_t>> seen;
  seen[ball.members[0].key].push_back(0);

  std::vector<std::uint32_t> frontier{0};

  for (int dist = 1; dist <= radius; ++dist) {
    std::vector<Candidate> candidates;
    if (!frontier.empty()) {
      if (workers == 1 || frontier.size() < 64) {
        expand_range(frontier, 0, frontier.size(), ball.members, alphabet,
                     injective, candidates);
      } else {
        const std::size_t chunk_count =
            std::min<std::size_t>(static_cast<std::size_t>(workers),
                                  frontier.size());
        std::vector<std::vector<Candidate>> locals(chunk_count);
        std::vector<std::thread> threads;
        threads.reserve(chunk_count);
        for (std::size_t c = 0; c < chunk_count; ++c) {
          const std::size_t begin = frontier.size() * c / chunk_count;
          const std::size_t end = frontier.size() * (c + 1) / chunk_count;
          threads.emplace_back([&, begin, end, c] {
            expand_range(frontier, begin, end, ball.members, alphabet,
                         injective, locals[c]);
          });
        }
        for (auto& t : threads) t.join();
        std::size_t total = 0;
        for (const auto& l : locals) total += l.size();
        candidates.reserve(total);
        // Merge in chunk order; the subsequent sort makes the result
        // independent of the split anyway.
        for (auto& l : locals) {
          std::move(l.begin(), l.end(), std::back_inserter(candidates));
          l.clear();
        }
      }
    }

    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.key != b.key) return a.key < b.key;
                return a.tiebreak < b.tiebreak;
              });

    std::vector<std::uint32_t> next_frontier;
    std::size_t added = 0;
    for (Candidate& c : candidates) {
      auto& bucket = seen[c.key];
      bool duplicate = false;
      if (injective) {
        duplicate = !bucket.empty();
      } else {
        for (std::uint32_t idx : bucket) {
          if (groups::equal(ball.members[idx].element, c.element)) {
            duplicate = true;
            break;
          }
        }
      }
      if (duplicate) continue;
      if (ball.members.size() >= options.element_cap) {
        throw BudgetExceeded(
            "element cap exceeded at radius " + std::to_string(dist),
            dist - 1);
      }
      const auto idx = static_cast<std::uint32_t>(ball.members.size());
      bucket.push_back(idx);
      ball.members.push_back(
          BallMember{std::move(c.key), std::move(c.element), dist});
      next_frontier.push_back(idx);
      ++added;
    }
    ball.sphere_sizes.push_back(added);
    frontier = std::move(next_frontier);
  }

  ball.rebuild_index();
  return ball;
}

GrowthTable growth_table(const Ball& ball) {
  GrowthTable t;
  t.radius = ball.radius;
  Int acc = 0;
  for (std::size_t n = 0; n < ball.sphere_sizes.size(); ++n) {
    t.spheres.emplace_back(ball.sphere_sizes[n]);
    acc += t.spheres.back();
    t.gamma.push_back(acc);
  }
  return t;
}

GrowthEstimate omega_bounds(const GrowthTable& table) {
  if (table.radius < 1) {
    throw SemanticError("omega_bounds needs a table of radius >= 1");
  }
  GrowthEstimate est;
  Real best_log = log_int(table.gamma[1]);  // k = 1
  for (int n = 1; n <= table.radius; ++n) {
    const Real log_here =
        log_int(table.gamma[static_cast<std::size_t>(n)]) / Real(n);
    if (log_here < best_log) best_log = log_here;
    est.naive.push_back(boost::multiprecision::exp(log_here));
    est.upper.push_back(boost::multiprecision::exp(best_log));
  }
  est.entropy_upper = best_log;
  return est;
}

std::vector<SubmultViolation> check_submultiplicative(const GrowthTable& t) {
  std::vector<SubmultViolation> violations;
  for (int m = 1; m <= t.radius; ++m) {
    for (int n = m; m + n <= t.radius; ++n) {
      const Int& lhs = t.gamma[static_cast<std::size_t>(m + n)];
      if (lhs > t.gamma[static_cast<std::size_t>(m)] *
                    t.gamma[static_cast<std::size_t>(n)]) {
        violations.push_back(SubmultViolation{m, n});
      }
    }
  }
  return violations;
}

QuotientComparison compare_quotient(const GrowthTable& group_table,
                                    const GrowthTable& quotient_table) {
  if (group_table.radius != quotient_table.radius) {
    throw SemanticError("quotient comparison needs tables of equal radius");
  }
  QuotientComparison report;
  report.radius = group_table.radius;
  for (int n = 0; n <= report.radius; ++n) {
    if (quotient_table.gamma[static_cast<std::size_t>(n)] >
        group_table.gamma[static_cast<std::size_t>(n)]) {
      report.gamma_violations.push_back(n);
    }
  }
  report.gamma_ok = report.gamma_violations.empty();
  report.upper_ok = true;
  if (report.radius >= 1) {
    const GrowthEstimate g = omega_bounds(group_table);
    const GrowthEstimate q = omega_bounds(quotient_table);
    for (std::size_t i = 0; i < g.upper.size(); ++i) {
      if (q.upper[i] > g.upper[i]) {
        report.upper_ok = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace growthlab::growth
