#include "growthlab/topology.hpp"

#include "growthlab/errors.hpp"
#include "growthlab/group_spec.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace growthlab;
using groups::RealizationPtr;

namespace {

RealizationPtr make(const std::string& spec) {
  return groups::make_realization(cli::parse_spec(spec));
}

cli::GroupSpec spec_of(const std::string& text) { return cli::parse_spec(text); }

std::size_t count_root_isos(const topo::MarkedBall& a,
                            const topo::MarkedBall& b) {
  // Brute force: try every bijection fixing the root and count the ones that
  // preserve labeled edges both ways. Only for tiny balls.
  if (a.vertex_count() != b.vertex_count()) return 0;
  const std::size_t n = a.vertex_count();
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::size_t count = 0;
  std::sort(perm.begin() + 1, perm.end());
  do {
    bool ok = true;
    for (const auto& e : a.edges) {
      const topo::MarkedBall::Edge image{perm[e.source], e.generator,
                                         perm[e.target]};
      if (!std::binary_search(b.edges.begin(), b.edges.end(), image)) {
        ok = false;
        break;
      }
    }
    if (ok && a.edges.size() == b.edges.size()) ++count;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

}  // namespace

TEST_CASE("marked ball shapes for lines and cycles") {
  const auto z_ball = topo::extract_marked_ball(make("z:1"), 2);
  CHECK(z_ball.vertex_count() == 5);
  CHECK(z_ball.edges.size() == 4);

  const auto c6_ball = topo::extract_marked_ball(make("cyclic:6"), 3);
  CHECK(c6_ball.vertex_count() == 6);
  CHECK(c6_ball.edges.size() == 6);  // the cycle closes

  const auto r0 = topo::extract_marked_ball(make("z:2"), 0);
  CHECK(r0.vertex_count() == 1);
  CHECK(r0.edges.empty());

  // A trivial generator contributes a loop at the root.
  const auto trivial = topo::extract_marked_ball(make("cyclic:1"), 0);
  CHECK(trivial.vertex_count() == 1);
  REQUIRE(trivial.edges.size() == 1);
  CHECK(trivial.edges[0] == topo::MarkedBall::Edge{0, 0, 0});
}

TEST_CASE("library balls agree with the direct-construction oracle") {
  for (int radius = 0; radius <= 5; ++radius) {
    CHECK(topo::balls_isomorphic(topo::extract_marked_ball(make("z:1"), radius),
                                 testoracle::path_ball(radius)));
  }
  for (int order : {4, 6, 9}) {
    for (int radius = 0; radius <= 6; ++radius) {
      CHECK(topo::balls_isomorphic(
          topo::extract_marked_ball(
              make("cyclic:" + std::to_string(order)), radius),
          testoracle::cycle_ball(order, radius)));
    }
  }
}

TEST_CASE("isomorphism is reflexive, symmetric, and sees the cycle close") {
  const auto z2 = topo::extract_marked_ball(make("z:1"), 2);
  CHECK(topo::balls_isomorphic(z2, z2));

  const auto c6_r2 = topo::extract_marked_ball(make("cyclic:6"), 2);
  CHECK(topo::balls_isomorphic(z2, c6_r2));
  CHECK(topo::balls_isomorphic(c6_r2, z2));
  const auto ll = topo::extract_marked_ball(make("lamplighter:2"), 2);
  const auto f2 = topo::extract_marked_ball(make("free:2"), 2);
  CHECK(topo::balls_isomorphic(ll, f2) == topo::balls_isomorphic(f2, ll));

  const auto z3 = topo::extract_marked_ball(make("z:1"), 3);
  const auto c6_r3 = topo::extract_marked_ball(make("cyclic:6"), 3);
  CHECK(!topo::balls_isomorphic(z3, c6_r3));

  CHECK_THROWS_AS(topo::balls_isomorphic(z2, z3), SemanticError);
  CHECK_THROWS_AS(
      topo::balls_isomorphic(z2, topo::extract_marked_ball(make("z:2"), 2)),
      SemanticError);
}

TEST_CASE("the root-preserving labeled isomorphism is unique when it exists") {
  for (int radius = 1; radius <= 2; ++radius) {
    const auto a = topo::extract_marked_ball(make("z:1"), radius);
    const auto b = topo::extract_marked_ball(make("cyclic:6"), radius);
    REQUIRE(topo::balls_isomorphic(a, b));
    CHECK(count_root_isos(a, b) == 1);
  }
  const auto c4 = topo::extract_marked_ball(make("cyclic:4"), 2);
  CHECK(count_root_isos(c4, c4) == 1);
}

TEST_CASE("convergence radius examples") {
  CHECK(topo::convergence_radius(spec_of("z:1"), spec_of("cyclic:6"), 10) == 2);
  CHECK(topo::convergence_radius(spec_of("z:1"), spec_of("cyclic:8"), 10) == 3);
  CHECK(topo::convergence_radius(spec_of("free:2"), spec_of("free:2"), 4) == 4);
  CHECK_THROWS_AS(
      topo::convergence_radius(spec_of("z:1"), spec_of("z:2"), 3),
      SemanticError);
}

TEST_CASE("radius-zero disagreement yields minus one") {
  // cyclic:1 has a trivial generator (a loop at the root); Z does not.
  CHECK(topo::convergence_radius(spec_of("z:1"), spec_of("cyclic:1"), 4) == -1);
}

TEST_CASE("n-isomorphism is monotone under radius decrease") {
  std::mt19937_64 rng(51);
  const std::vector<std::string> pool = {"z:2", "free:2", "lamplighter:2",
                                         "lamplighter:3", "heisenberg",
                                         "bs:1,2"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 20; ++i) {
    const auto a = spec_of(pool[pick(rng)]);
    const auto b = spec_of(pool[pick(rng)]);
    const int conv = topo::convergence_radius(a, b, 4);
    for (int n = 0; n <= conv; ++n) {
      CHECK(topo::balls_isomorphic(
          topo::extract_marked_ball(groups::make_realization(a), n),
          topo::extract_marked_ball(groups::make_realization(b), n)));
    }
  }
}

TEST_CASE("ball vertex counts bridge to growth tables") {
  for (const char* spec :
       {"z:2", "free:2", "lamplighter:2", "grigorchuk:(012)*", "heisenberg"}) {
    const auto r = make(spec);
    for (int radius = 0; radius <= 4; ++radius) {
      const auto ball = growth::enumerate_ball(r, radius);
      const auto marked = topo::marked_ball_from(ball);
      CHECK(Int(marked.vertex_count()) ==
            growth::growth_table(ball).gamma.back());
    }
  }
}

TEST_CASE("limit experiment rows") {
  // A constant sequence reproduces the limit exactly.
  const auto rows = topo::limit_experiment(
      spec_of("grigorchuk:(012)*"), {spec_of("grigorchuk:(012)*")}, 4, 4);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].conv_radius == 4);
  CHECK(rows[0].gamma_i_m == rows[0].gamma_lim_m);
  CHECK(!rows[0].flagged);

  // A diverging member is flagged once the probe outruns the agreement.
  const auto far = topo::limit_experiment(spec_of("z:1"),
                                          {spec_of("cyclic:6")}, 4, 6);
  REQUIRE(far.size() == 1);
  CHECK(far[0].conv_radius == 2);
  CHECK(far[0].flagged);
  CHECK(far[0].gamma_i_m == 6);
  CHECK(far[0].gamma_lim_m == 9);
}

TEST_CASE("grigorchuk members converge with the shared prefix") {
  const auto limit = spec_of("grigorchuk:(012)*");
  const auto near = topo::convergence_radius(
      spec_of("grigorchuk:012(0)*"), limit, 8);
  const auto nearer = topo::convergence_radius(
      spec_of("grigorchuk:012012(0)*"), limit, 8);
  CHECK(near >= 0);
  CHECK(nearer >= near);
}

TEST_CASE("dot export lists every edge with its label") {
  const auto r = make("lamplighter:2");
  const auto ball = topo::extract_marked_ball(r, 1);
  const std::string dot = topo::to_dot(ball, r->generator_names, "b");
  CHECK(dot.find("digraph b {") == 0);
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos;
       at = dot.find("->", at + 2)) {
    ++arrows;
  }
  CHECK(arrows == ball.edges.size());
  CHECK(dot.find("label=\"a\"") != std::string::npos);
  CHECK(dot.find("label=\"t\"") != std::string::npos);
}
