#include "growthlab/topology.hpp"

#include "growthlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace growthlab::topo {

MarkedBall marked_ball_from(const growth::Ball& ball) {
  MarkedBall out;
  out.radius = ball.radius;
  out.generator_count = ball.realization->generator_count;
  out.distances.reserve(ball.members.size());
  for (const auto& m : ball.members) out.distances.push_back(m.distance);

  for (std::uint32_t u = 0; u < ball.members.size(); ++u) {
    for (int g = 0; g < out.generator_count; ++g) {
      const groups::Element product = groups::multiply(
          ball.members[u].element,
          groups::generator_element(ball.realization, g));
      const std::size_t v = ball.find(product);
      if (v != growth::Ball::npos) {
        out.edges.push_back(
            MarkedBall::Edge{u, g, static_cast<std::uint32_t>(v)});
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

MarkedBall extract_marked_ball(const groups::RealizationPtr& r, int radius,
                               const growth::BallOptions& options) {
  return marked_ball_from(growth::enumerate_ball(r, radius, options));
}

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

// out[u * k + g] / in[u * k + g]: unique neighbor or kUnset. Right
// multiplication by a generator is injective, so both are functions.
struct Adjacency {
  std::vector<std::uint32_t> out;
  std::vector<std::uint32_t> in;
};

Adjacency build_adjacency(const MarkedBall& ball) {
  const std::size_t k = static_cast<std::size_t>(ball.generator_count);
  Adjacency adj;
  adj.out.assign(ball.vertex_count() * k, kUnset);
  adj.in.assign(ball.vertex_count() * k, kUnset);
  for (const auto& e : ball.edges) {
    const std::size_t gi = static_cast<std::size_t>(e.generator);
    if (e.generator < 0 || gi >= k || e.source >= ball.vertex_count() ||
        e.target >= ball.vertex_count()) {
      throw SemanticError("marked ball edge out of range");
    }
    if (adj.out[e.source * k + gi] != kUnset ||
        adj.in[e.target * k + gi] != kUnset) {
      throw SemanticError("marked ball has duplicate labeled edges");
    }
    adj.out[e.source * k + gi] = e.target;
    adj.in[e.target * k + gi] = e.source;
  }
  return adj;
}

}  // namespace

bool balls_isomorphic(const MarkedBall& a, const MarkedBall& b) {
  if (a.generator_count != b.generator_count) {
    throw SemanticError("balls over different marked alphabets");
  }
  if (a.radius != b.radius) {
    throw SemanticError("balls of different radii");
  }
  if (a.vertex_count() != b.vertex_count() || a.edges.size() != b.edges.size()) {
    return false;
  }
  const std::size_t k = static_cast<std::size_t>(a.generator_count);
  const Adjacency adj_a = build_adjacency(a);
  const Adjacency adj_b = build_adjacency(b);

  std::vector<std::uint32_t> a2b(a.vertex_count(), kUnset);
  std::vector<std::uint32_t> b2a(b.vertex_count(), kUnset);
  std::deque<std::uint32_t> queue;
  a2b[0] = 0;
  b2a[0] = 0;
  queue.push_back(0);

  auto match = [&](std::uint32_t xa, std::uint32_t xb) {
    if (xa == kUnset || xb == kUnset) return xa == xb;
    if (a2b[xa] == kUnset && b2a[xb] == kUnset) {
      a2b[xa] = xb;
      b2a[xb] = xa;
      queue.push_back(xa);
      return true;
    }
    return a2b[xa] == xb && b2a[xb] == xa;
  };

  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    const std::uint32_t u_b = a2b[u];
    for (std::size_t g = 0; g < k; ++g) {
      if (!match(adj_a.out[u * k + g], adj_b.out[u_b * k + g])) return false;
      if (!match(adj_a.in[u * k + g], adj_b.in[u_b * k + g])) return false;
    }
  }

  // Every ball vertex is reachable from the root through labeled edges (in
  // either direction), so the grown map must already be total.
  for (std::uint32_t x : a2b) {
    if (x == kUnset) return false;
  }
  for (const auto& e : a.edges) {
    const MarkedBall::Edge image{a2b[e.source], e.generator, a2b[e.target]};
    if (!std::binary_search(b.edges.begin(), b.edges.end(), image)) {
      return false;
    }
  }
  return true;
}

int convergence_radius(const cli::GroupSpec& a, const cli::GroupSpec& b,
                       int max_radius, const growth::BallOptions& options) {
  if (max_radius < 0) throw SemanticError("max_radius must be >= 0");
  const groups::RealizationPtr ra = groups::make_realization(a);
  const groups::RealizationPtr rb = groups::make_realization(b);
  if (ra->generator_count != rb->generator_count) {
    throw SemanticError("specs have different marked alphabets");
  }
  for (int n = 0; n <= max_radius; ++n) {
    const MarkedBall ball_a = extract_marked_ball(ra, n, options);
    const MarkedBall ball_b = extract_marked_ball(rb, n, options);
    if (!balls_isomorphic(ball_a, ball_b)) return n - 1;
  }
  return max_radius;
}

std::vector<LimitComparisonRow> limit_experiment(
    const cli::GroupSpec& limit, const std::vector<cli::GroupSpec>& members,
    int m, int max_radius, const growth::BallOptions& options) {
  if (m < 1) throw SemanticError("limit_experiment needs m >= 1");
  const groups::RealizationPtr limit_r = groups::make_realization(limit);
  const growth::GrowthTable limit_table =
      growth::growth_table(growth::enumerate_ball(limit_r, m, options));
  const Int gamma_lim = limit_table.gamma.back();

  std::vector<LimitComparisonRow> rows;
  int index = 0;
  for (const cli::GroupSpec& member : members) {
    LimitComparisonRow row;
    row.index = index++;
    row.conv_radius = convergence_radius(member, limit, max_radius, options);
    const groups::RealizationPtr r = groups::make_realization(member);
    const growth::GrowthTable table =
        growth::growth_table(growth::enumerate_ball(r, m, options));
    row.gamma_i_m = table.gamma.back();
    row.gamma_lim_m = gamma_lim;
    row.upper_i_m = int_root(row.gamma_i_m, m);
    row.flagged = row.conv_radius < m;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_dot(const MarkedBall& ball,
                   const std::vector<std::string>& generator_names,
                   const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  0 [label=\"1\", shape=doublecircle];\n";
  for (std::size_t v = 1; v < ball.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << ball.distances[v] << "\"];\n";
  }
  for (const auto& e : ball.edges) {
    const std::size_t g = static_cast<std::size_t>(e.generator);
    out << "  " << e.source << " -> " << e.target << " [label=\""
        << (g < generator_names.size() ? generator_names[g]
                                       : std::to_string(g))
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace growthlab::topo
