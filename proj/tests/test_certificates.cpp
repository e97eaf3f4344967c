#include "growthlab/certificates.hpp"

#include "growthlab/errors.hpp"
#include "growthlab/group_spec.hpp"

#include <doctest.h>

using namespace growthlab;
using groups::RealizationPtr;

namespace {

RealizationPtr make(const std::string& spec) {
  return groups::make_realization(cli::parse_spec(spec));
}

Word gw(const RealizationPtr& r, const std::string& text) {
  return parse_word(text, r->generator_names);
}

}  // namespace

TEST_CASE("witness elements follow the interleaving definition") {
  const auto ll = make("lamplighter:2");
  const Word v = gw(ll, "t");
  const Word w = gw(ll, "a");

  // alpha = (0) evaluates to v.
  CHECK(groups::equal(certs::witness_element(ll, v, w, {0}),
                      groups::evaluate_word(ll, v)));
  // alpha = (1,0) evaluates to w v v.
  CHECK(groups::equal(certs::witness_element(ll, v, w, {1, 0}),
                      groups::evaluate_word(ll, gw(ll, "a*t*t"))));
  // Distinct bit strings give distinct lamp configurations.
  CHECK(!groups::equal(certs::witness_element(ll, v, w, {1, 1}),
                       certs::witness_element(ll, v, w, {1, 0})));
  CHECK_THROWS_AS(certs::witness_element(ll, v, w, {}), SemanticError);
}

TEST_CASE("lamplighter witness certifies the square root of two") {
  const auto ll = make("lamplighter:2");
  const auto cert =
      certs::verify_witness(ll, gw(ll, "t"), gw(ll, "a"), 10);
  CHECK(cert.injective);
  CHECK(cert.cost == 2);
  CHECK(cert.p_verified == 10);
  CHECK(cert.gamma_lower_range() == 20);
  CHECK(boost::multiprecision::abs(cert.omega_lower - Real("1.414213562373")) <
        Real("1e-11"));
  CHECK(cert.gamma_lower(4) == 4);
  CHECK(cert.gamma_lower(20) == 1024);
  CHECK_THROWS_AS(cert.gamma_lower(21), SemanticError);
}

TEST_CASE("identity words collide immediately") {
  const auto ll = make("lamplighter:2");
  const auto cert = certs::verify_witness(ll, Word{}, Word{}, 4);
  CHECK(!cert.injective);
  REQUIRE(cert.collision.has_value());
  CHECK(cert.collision->first == certs::BitString{0});
  CHECK(cert.collision->second == certs::BitString{1});
}

TEST_CASE("abelian groups collide and the reported pair reproduces") {
  const auto z2 = make("z:2");
  const auto cert =
      certs::verify_witness(z2, gw(z2, "x"), gw(z2, "y"), 6);
  CHECK(!cert.injective);
  REQUIRE(cert.collision.has_value());
  const auto& [alpha, beta] = *cert.collision;
  CHECK(alpha != beta);
  CHECK(groups::equal(certs::witness_element(z2, cert.v, cert.w, alpha),
                      certs::witness_element(z2, cert.v, cert.w, beta)));
}

TEST_CASE("witness budget is enforced") {
  const auto ll = make("lamplighter:2");
  CHECK_THROWS_AS(certs::verify_witness(ll, gw(ll, "t"), gw(ll, "a"), 20, 100),
                  BudgetExceeded);
}

TEST_CASE("witness search prefers the cheapest pair") {
  const auto ll = make("lamplighter:2");
  const auto found = certs::witness_search(ll, 2, 8);
  REQUIRE(found.has_value());
  CHECK(found->cost == 2);
  CHECK(found->v == gw(ll, "t"));
  CHECK(found->w == gw(ll, "a"));

  const auto free2 = make("free:2");
  const auto free_found = certs::witness_search(free2, 1, 8);
  REQUIRE(free_found.has_value());
  CHECK(free_found->cost == 2);
  CHECK(free_found->v == gw(free2, "x"));
  CHECK(free_found->w == gw(free2, "y"));

  // Polynomial growth admits no witness: the search exhausts.
  CHECK(!certs::witness_search(make("z:2"), 2, 6).has_value());
}

TEST_CASE("conjugate stabilization: exact wreath answers") {
  const auto ll = make("lamplighter:2");
  const auto infinite = certs::conjugate_stabilization(
      ll, gw(ll, "t"), gw(ll, "a"), 10);
  CHECK(infinite.status == certs::StabilizationReport::Status::kExactInfinite);
  CHECK(infinite.exact_mode);

  // Composite modulus exercises the Z/m membership check.
  const auto ll4 = make("lamplighter:4");
  const auto infinite4 = certs::conjugate_stabilization(
      ll4, gw(ll4, "t"), gw(ll4, "a"), 6);
  CHECK(infinite4.status == certs::StabilizationReport::Status::kExactInfinite);

  const auto fixed = certs::conjugate_stabilization(
      ll, gw(ll, "1"), gw(ll, "a"), 5);
  CHECK(fixed.status == certs::StabilizationReport::Status::kStabilizedAt);
  CHECK(fixed.stabilized_level == 0);

  const auto lamp_conj = certs::conjugate_stabilization(
      ll, gw(ll, "a"), gw(ll, "a"), 5);
  CHECK(lamp_conj.status == certs::StabilizationReport::Status::kStabilizedAt);
  CHECK(lamp_conj.stabilized_level == 0);
}

TEST_CASE("conjugate stabilization: bounded heuristic") {
  const auto h = make("heisenberg");
  // The commutator of the generators is central: conjugation fixes it.
  const auto central = certs::conjugate_stabilization(
      h, gw(h, "x"), gw(h, "x^-1*y^-1*x*y"), 5);
  CHECK(central.status == certs::StabilizationReport::Status::kStabilizedAt);
  CHECK(central.stabilized_level == 0);
  CHECK(!central.exact_mode);

  // Identity conjugator stabilizes trivially on any realization.
  const auto fixed =
      certs::conjugate_stabilization(h, gw(h, "1"), gw(h, "x"), 3);
  CHECK(fixed.status == certs::StabilizationReport::Status::kStabilizedAt);
  CHECK(fixed.stabilized_level == 0);

  // Tiny budget: one-sided no-stabilization answer with the budget flag.
  const auto bs = make("bs:1,2");
  const auto starved = certs::conjugate_stabilization(
      bs, gw(bs, "t"), gw(bs, "a"), 3, 10);
  CHECK(starved.status ==
        certs::StabilizationReport::Status::kNoStabilization);
  CHECK(starved.budget_hit);
}

TEST_CASE("heuristic never contradicts the exact wreath mode") {
  const auto ll = make("lamplighter:2");
  // Exact says infinite; the heuristic may only say "not proven".
  const auto heuristic = certs::conjugate_stabilization(
      ll, gw(ll, "t"), gw(ll, "a"), 4, 50'000, /*force_heuristic=*/true);
  CHECK(heuristic.status ==
        certs::StabilizationReport::Status::kNoStabilization);

  // Exact says stabilized at 0; the heuristic must find the same level.
  const auto agree = certs::conjugate_stabilization(
      ll, gw(ll, "a"), gw(ll, "a"), 4, 50'000, /*force_heuristic=*/true);
  CHECK(agree.status == certs::StabilizationReport::Status::kStabilizedAt);
  CHECK(agree.stabilized_level == 0);
}

TEST_CASE("theoretical bound constants") {
  const auto b1 = certs::theoretical_bound(1);
  CHECK(b1.s == 2);
  CHECK(b1.alpha == 48);
  CHECK(b1.beta == 44);
  CHECK(boost::multiprecision::abs(b1.omega_alpha - Real("1.014545335")) <
        Real("1e-9"));
  CHECK(b1.omega_beta >= b1.omega_alpha);

  CHECK(certs::theoretical_bound(2).alpha == 192);
  CHECK_THROWS_AS(certs::theoretical_bound(0), SemanticError);
  for (int d = 1; d <= 20; ++d) {
    const auto b = certs::theoretical_bound(d);
    CHECK(b.beta <= b.alpha);
    CHECK(b.beta == b.alpha - 4);
  }
}

TEST_CASE("metabelian crosscheck clears the threshold with margin") {
  const auto report =
      certs::crosscheck_metabelian(make("lamplighter:2"), 8, 8);
  REQUIRE(report.applicable);
  REQUIRE(report.best.has_value());
  CHECK(report.omega_lower_ok);
  CHECK(report.upper_ok);
  CHECK(report.gamma_lower_ok);
  CHECK(boost::multiprecision::abs(report.margin - Real("0.399668")) <
        Real("1e-3"));
  // The optional witness lower bound rides along and respects the ordering.
  REQUIRE(report.estimate.witness_lower.has_value());
  for (const Real& u : report.estimate.upper) {
    CHECK(*report.estimate.witness_lower <= u);
  }

  const auto bs = certs::crosscheck_metabelian(make("bs:1,2"), 8, 8);
  REQUIRE(bs.applicable);
  REQUIRE(bs.best.has_value());
  CHECK(bs.best->cost <= 4);
  CHECK(bs.best->omega_lower >= root_of_two(Int(4)) - Real("1e-30"));
  CHECK(bs.omega_lower_ok);
  CHECK(bs.gamma_lower_ok);

  const auto na = certs::crosscheck_metabelian(make("z:2"), 6, 4);
  CHECK(!na.applicable);
}

TEST_CASE("incremental verification agrees with direct evaluation") {
  // Brute-force every bit string up to p = 4 and compare with the verdict
  // of the incremental path.
  const auto ll = make("lamplighter:2");
  const Word v = gw(ll, "t");
  const Word w = gw(ll, "a");
  std::vector<certs::BitString> all;
  for (int p = 1; p <= 4; ++p) {
    for (std::uint32_t code = 0; code < (1u << p); ++code) {
      certs::BitString alpha;
      for (int i = p - 1; i >= 0; --i) {
        alpha.push_back(static_cast<std::uint8_t>((code >> i) & 1));
      }
      all.push_back(std::move(alpha));
    }
  }
  bool pairwise_distinct = true;
  for (std::size_t i = 0; i < all.size() && pairwise_distinct; ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (groups::equal(certs::witness_element(ll, v, w, all[i]),
                        certs::witness_element(ll, v, w, all[j]))) {
        pairwise_distinct = false;
        break;
      }
    }
  }
  CHECK(pairwise_distinct);
  CHECK(certs::verify_witness(ll, v, w, 4).injective == pairwise_distinct);

  // Same cross-check on a colliding family.
  const auto z1 = make("z:1");
  const Word x = gw(z1, "x");
  bool z_distinct = true;
  for (std::size_t i = 0; i < all.size() && z_distinct; ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (groups::equal(certs::witness_element(z1, x, x, all[i]),
                        certs::witness_element(z1, x, x, all[j]))) {
        z_distinct = false;
        break;
      }
    }
  }
  CHECK(!z_distinct);
  CHECK(certs::verify_witness(z1, x, x, 4).injective == z_distinct);
}

TEST_CASE("certificate soundness against measured growth") {
  const auto ll = make("lamplighter:2");
  const auto cert = certs::verify_witness(ll, gw(ll, "t"), gw(ll, "a"), 8);
  const auto table =
      growth::growth_table(growth::enumerate_ball(ll, 10));
  for (long n = 1; n <= 10; ++n) {
    CHECK(cert.gamma_lower(n) <= table.gamma[static_cast<std::size_t>(n)]);
  }
}
