#pragma once

#include "growthlab/group_spec.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/numeric.hpp"
#include "growthlab/realization.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace growthlab::topo {

/// Generator-labeled rooted digraph of a radius-n ball. Vertex 0 is the
/// identity; vertices are numbered in canonical enumeration order. Only
/// out-edges per positive generator are stored (an edge exists iff both
/// endpoints lie in the ball); inverse edges are implied.
struct MarkedBall {
  int radius = 0;
  int generator_count = 0;
  std::vector<int> distances;  // per vertex

  struct Edge {
    std::uint32_t source = 0;
    int generator = 0;
    std::uint32_t target = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;  // sorted by (source, generator)

  std::size_t vertex_count() const { return distances.size(); }
};

MarkedBall extract_marked_ball(const groups::RealizationPtr& r, int radius,
                               const growth::BallOptions& options = {});

/// Builds a marked ball from an already enumerated geodesic ball.
MarkedBall marked_ball_from(const growth::Ball& ball);

/// Root-preserving label-preserving digraph isomorphism. Labels determine
/// the candidate map uniquely, so the check grows the map from the root and
/// then verifies bijectivity and edge-set equality in both directions.
/// Throws SemanticError on mismatched alphabets or radii.
bool balls_isomorphic(const MarkedBall& a, const MarkedBall& b);

/// Largest n <= max_radius whose balls are isomorphic; -1 when even the
/// radius-0 balls differ.
int convergence_radius(const cli::GroupSpec& a, const cli::GroupSpec& b,
                       int max_radius,
                       const growth::BallOptions& options = {});

/// One row of the local-limit experiment: how far member i agrees with the
/// limit group, and the ball counts at the probe radius m.
struct LimitComparisonRow {
  int index = 0;
  int conv_radius = 0;
  Int gamma_i_m;
  Int gamma_lim_m;
  Real upper_i_m;  // gamma_i(m)^(1/m)
  bool flagged = false;  // conv_radius < m: counts may legitimately differ
};

std::vector<LimitComparisonRow> limit_experiment(
    const cli::GroupSpec& limit, const std::vector<cli::GroupSpec>& members,
    int m, int max_radius, const growth::BallOptions& options = {});

/// DOT rendering with generator names as edge labels.
std::string to_dot(const MarkedBall& ball,
                   const std::vector<std::string>& generator_names,
                   const std::string& graph_name = "ball");

}  // namespace growthlab::topo
