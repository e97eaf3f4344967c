#include "growthlab/free_calculus.hpp"

#include "growthlab/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace growthlab;
using freecalc::kTowerA;
using freecalc::kTowerB;

namespace {

Word w_of(std::initializer_list<std::pair<int, int>> ls) {
  Word w;
  for (auto [sym, sign] : ls) {
    w.letters.push_back(Letter{sym, static_cast<std::int8_t>(sign)});
  }
  return w;
}

bool contains_word(const std::vector<Word>& set, const Word& w) {
  return std::find(set.begin(), set.end(), free_reduce(w)) != set.end();
}

}  // namespace

TEST_CASE("weight level one is the signed alphabet") {
  const auto sets = freecalc::weight_sets(2, 1);
  REQUIRE(sets.levels.size() == 1);
  CHECK(sets.level(1).words.size() == 4);
  CHECK(contains_word(sets.level(1).words, single_letter(0)));
  CHECK(contains_word(sets.level(1).words, single_letter(0, -1)));
  CHECK(contains_word(sets.level(1).words, single_letter(1)));
  CHECK(contains_word(sets.level(1).words, single_letter(1, -1)));
}

TEST_CASE("weight level two contains the basic commutator") {
  const auto sets = freecalc::weight_sets(2, 2);
  const Word xy = commutator(single_letter(0), single_letter(1));
  CHECK(xy.size() == 4);
  CHECK(contains_word(sets.level(2).words, xy));
  // All eight signed basic commutators, nothing else.
  CHECK(sets.level(2).words.size() == 8);
  CHECK(sets.level(2).trivial_dropped > 0);  // [x,x] and friends
}

TEST_CASE("rank one collapses to empty weight sets") {
  const auto sets = freecalc::weight_sets(1, 2);
  CHECK(sets.level(2).words.empty());
  CHECK(sets.level(2).trivial_dropped == sets.level(2).candidates);
}

TEST_CASE("weight set candidate cap raises a budget error") {
  CHECK_THROWS_AS(freecalc::weight_sets(2, 4, 100), BudgetExceeded);
}

TEST_CASE("depth bound closed form and recurrence") {
  CHECK(freecalc::depth_bound(1) == 1);
  CHECK(freecalc::depth_bound(2) == 4);
  CHECK(freecalc::depth_bound(3) == 10);
  CHECK(freecalc::depth_bound(4) == 22);
  for (int n = 1; n <= 39; ++n) {
    CHECK(freecalc::depth_bound(n + 1) == 2 * freecalc::depth_bound(n) + 2);
  }
  CHECK_THROWS_AS(freecalc::depth_bound(0), SemanticError);
}

TEST_CASE("depth of explicit sets") {
  CHECK(freecalc::depth_of_set({single_letter(0), single_letter(1, -1)}) == 1);
  const auto sets = freecalc::weight_sets(2, 3);
  CHECK(freecalc::depth_of_set(sets.level(2).words) == 4);
  CHECK(freecalc::depth_of_set(sets.level(3).words) == 10);
  CHECK_THROWS_AS(freecalc::depth_of_set({}), SemanticError);
}

TEST_CASE("depth report: bounds hold, equality through weight three") {
  const auto report = freecalc::verify_depth_bound(2, 3);
  CHECK(report.all_within_bound);
  CHECK(report.doubling_inequality_ok);
  for (const auto& row : report.rows) {
    CHECK(row.within_bound);
    CHECK(row.depth_equals_bound);  // free-group equality at k = 2, n <= 3
  }
  // Rank 1: bound holds with collapsed sets.
  const auto rank1 = freecalc::verify_depth_bound(1, 2);
  CHECK(rank1.all_within_bound);
  CHECK(!rank1.rows[1].depth_equals_bound);
}

TEST_CASE("doubling inequality is tight exactly when a side is one") {
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; i + j <= 40; ++j) {
      const Int lhs = 2 * (freecalc::depth_bound(i) + freecalc::depth_bound(j));
      const Int rhs = freecalc::depth_bound(i + j);
      CHECK(lhs <= rhs);
      if (std::min(i, j) == 1) {
        CHECK(lhs == rhs);
      } else {
        CHECK(lhs < rhs);
      }
    }
  }
}

TEST_CASE("commutator tower levels") {
  const auto tower = freecalc::commutator_tower(2);
  REQUIRE(tower.size() == 2);
  const Word a = single_letter(kTowerA);
  const Word b = single_letter(kTowerB);
  REQUIRE(tower[0].words.size() == 2);
  CHECK(contains_word(tower[0].words, commutator(a, b)));
  CHECK(contains_word(tower[0].words, commutator(a, inverse(b))));
  CHECK(tower[1].words.size() + tower[1].trivial_dropped == 4);
  for (const Word& w : tower[1].words) {
    CHECK(w.size() <= 16);
    CHECK(!free_reduce(w).empty());
  }
}

TEST_CASE("shift expansion rewrites conjugates of a") {
  // b^-1 a b = a_1.
  const auto s1 = freecalc::shift_expand(
      w_of({{kTowerB, -1}, {kTowerA, 1}, {kTowerB, 1}}), 1);
  REQUIRE(s1.letters.size() == 1);
  CHECK(s1.letters[0] == freecalc::ShiftLetter{1, 1});

  // [a,b] = a_0^-1 a_1.
  const auto s2 =
      freecalc::shift_expand(commutator(single_letter(kTowerA),
                                        single_letter(kTowerB)),
                             1);
  REQUIRE(s2.letters.size() == 2);
  CHECK(s2.letters[0] == freecalc::ShiftLetter{0, -1});
  CHECK(s2.letters[1] == freecalc::ShiftLetter{1, 1});

  CHECK_THROWS_AS(freecalc::shift_expand(single_letter(kTowerB), 3),
                  SemanticError);
  CHECK_THROWS_AS(
      freecalc::shift_expand(
          w_of({{kTowerB, -1}, {kTowerB, -1}, {kTowerA, 1}, {kTowerB, 1},
                {kTowerB, 1}}),
          1),
      SemanticError);
}

TEST_CASE("every tower element expands within its level window") {
  const auto tower = freecalc::commutator_tower(4);
  for (std::size_t i = 0; i < tower.size(); ++i) {
    const long window = static_cast<long>(i) + 1;
    for (const Word& c : tower[i].words) {
      const auto expanded = freecalc::shift_expand(c, window);
      CHECK(freecalc::substitute_shift(expanded) == free_reduce(c));
    }
  }
}

TEST_CASE("collection on degenerate and single-step inputs") {
  const std::int32_t target = 2;
  // The word consisting of the target alone.
  const auto only = freecalc::collect_letter(single_letter(target), target);
  CHECK(only.sigma == 1);
  CHECK(only.tail.empty());
  CHECK(only.trace.empty());

  // One letter in front of the target: a single application of xy = yx[x,y].
  const Word w = concat(single_letter(0), single_letter(target));
  const auto res = freecalc::collect_letter(w, target);
  CHECK(res.sigma == 1);
  REQUIRE(res.trace.size() == 1);
  CHECK(res.trace[0].plain == single_letter(0));
  REQUIRE(res.trace[0].factors.size() == 1);
  CHECK(res.trace[0].factors[0] ==
        commutator(single_letter(0), single_letter(target)));
  // Reassembly: target^sigma * tail == w in the free group.
  const Word reassembled =
      free_reduce(concat(power(single_letter(target), res.sigma), res.tail));
  CHECK(reassembled == free_reduce(w));
}

TEST_CASE("collection property: reassembly identity and signed count") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> len(0, 30);
  std::uniform_int_distribution<int> sym(0, 3);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int i = 0; i < 300; ++i) {
    Word w;
    const int n = len(rng);
    for (int j = 0; j < n; ++j) {
      w.letters.push_back(
          Letter{sym(rng), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)});
    }
    // Collect the least frequent symbol: bounded tower height.
    std::int32_t target = 0;
    std::size_t best = lambda_count(w, 0);
    for (std::int32_t s = 1; s < 4; ++s) {
      if (lambda_count(w, s) < best) {
        best = lambda_count(w, s);
        target = s;
      }
    }
    const auto res = freecalc::collect_letter(w, target);
    CHECK(res.sigma == exponent_sum(w, target));
    const Word reassembled =
        free_reduce(concat(power(single_letter(target), res.sigma), res.tail));
    CHECK(reassembled == free_reduce(w));
    // Every recorded factor is an iterated commutator of bounded height.
    const long appearances = static_cast<long>(lambda_count(w, target));
    for (const auto& slot : res.trace) {
      for (int h : slot.factor_heights) {
        CHECK(h >= 1);
        CHECK(h <= appearances);
      }
    }
  }
}

TEST_CASE("collection stress: target-heavy short words") {
  // (x t)^k for the target t: towers of height up to k.
  for (int k : {4, 8, 10}) {
    Word w;
    for (int i = 0; i < k; ++i) {
      w.letters.push_back(Letter{0, 1});
      w.letters.push_back(Letter{1, 1});
    }
    const auto res = freecalc::collect_letter(w, 1);
    CHECK(res.sigma == k);
    const Word reassembled =
        free_reduce(concat(power(single_letter(1), res.sigma), res.tail));
    CHECK(reassembled == free_reduce(w));
  }
}
