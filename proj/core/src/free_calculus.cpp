#include "growthlab/free_calculus.hpp"

#include "growthlab/errors.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace growthlab::freecalc {

WeightSets weight_sets(int generator_count, int max_weight,
                       std::size_t candidate_cap) {
  if (generator_count < 1) {
    throw SemanticError("weight_sets needs at least one generator");
  }
  if (max_weight < 1) throw SemanticError("weight_sets needs max_weight >= 1");

  WeightSets out;
  out.generator_count = generator_count;
  std::size_t candidates_total = 0;

  WeightSets::Level base;
  base.weight = 1;
  for (std::int32_t g = 0; g < generator_count; ++g) {
    base.words.push_back(single_letter(g, +1));
    base.words.push_back(single_letter(g, -1));
  }
  std::sort(base.words.begin(), base.words.end(), shortlex_less);
  base.candidates = base.words.size();
  out.levels.push_back(std::move(base));

  for (int weight = 2; weight <= max_weight; ++weight) {
    WeightSets::Level level;
    level.weight = weight;
    std::set<Word> distinct;
    for (int w1 = 1; w1 < weight; ++w1) {
      const int w2 = weight - w1;
      for (const Word& u : out.level(w1).words) {
        for (const Word& v : out.level(w2).words) {
          for (int su : {+1, -1}) {
            for (int sv : {+1, -1}) {
              if (++candidates_total > candidate_cap) {
                throw BudgetExceeded("weight_sets candidate cap exceeded");
              }
              ++level.candidates;
              const Word c = commutator(su > 0 ? u : inverse(u),
                                        sv > 0 ? v : inverse(v));
              if (c.empty()) {
                ++level.trivial_dropped;
              } else if (!distinct.insert(c).second) {
                ++level.duplicates_dropped;
              }
            }
          }
        }
      }
    }
    level.words.assign(distinct.begin(), distinct.end());
    std::sort(level.words.begin(), level.words.end(), shortlex_less);
    out.levels.push_back(std::move(level));
  }
  return out;
}

Int depth_bound(int n) {
  if (n < 1) throw SemanticError("depth_bound needs n >= 1");
  return 3 * boost::multiprecision::pow(Int(2), static_cast<unsigned>(n - 1)) -
         2;
}

std::size_t depth_of_set(const std::vector<Word>& words) {
  if (words.empty()) throw SemanticError("depth of an empty set is undefined");
  std::size_t depth = 0;
  for (const Word& w : words) {
    depth = std::max(depth, reduced_length(w));
  }
  return depth;
}

DepthReport verify_depth_bound(int generator_count, int max_weight,
                               std::size_t candidate_cap) {
  const WeightSets sets =
      weight_sets(generator_count, max_weight, candidate_cap);
  DepthReport report;
  report.generator_count = generator_count;
  report.max_weight = max_weight;
  report.all_within_bound = true;
  for (const auto& level : sets.levels) {
    DepthReport::Row row;
    row.weight = level.weight;
    row.set_size = level.words.size();
    row.depth = level.words.empty() ? 0 : depth_of_set(level.words);
    row.bound = depth_bound(level.weight);
    row.within_bound = Int(row.depth) <= row.bound;
    row.depth_equals_bound = Int(row.depth) == row.bound;
    report.all_within_bound = report.all_within_bound && row.within_bound;
    report.rows.push_back(std::move(row));
  }
  report.doubling_inequality_ok = true;
  for (int i = 1; i <= 2 * max_weight; ++i) {
    for (int j = 1; i + j <= 2 * max_weight; ++j) {
      if (2 * (depth_bound(i) + depth_bound(j)) > depth_bound(i + j)) {
        report.doubling_inequality_ok = false;
      }
    }
  }
  return report;
}

std::vector<TowerLevel> commutator_tower(int levels) {
  if (levels < 1) throw SemanticError("commutator_tower needs levels >= 1");
  if (levels > 16) throw SemanticError("commutator_tower capped at 16 levels");

  std::vector<TowerLevel> out;
  std::vector<Word> current{single_letter(kTowerA)};
  const Word b = single_letter(kTowerB);
  for (int i = 1; i <= levels; ++i) {
    TowerLevel level;
    for (const Word& c : current) {
      for (int sign : {+1, -1}) {
        const Word next = commutator(c, sign > 0 ? b : inverse(b));
        if (next.empty()) {
          ++level.trivial_dropped;
        } else {
          level.words.push_back(next);
        }
      }
    }
    out.push_back(level);
    current = out.back().words;
  }
  return out;
}

ShiftWord shift_expand(const Word& c, long window) {
  if (exponent_sum(c, kTowerB) != 0) {
    throw SemanticError(
        "shift_expand needs zero exponent sum of b (word must lie in the "
        "normal closure of a)");
  }
  ShiftWord out;
  out.window = window;
  long b_sum = 0;
  for (const Letter& l : c.letters) {
    if (l.symbol == kTowerB) {
      b_sum += l.sign;
    } else if (l.symbol == kTowerA) {
      const long index = -b_sum;
      if (index > window || index < -window) {
        throw SemanticError("shift_expand window exceeded");
      }
      out.letters.push_back(ShiftLetter{index, l.sign});
    } else {
      throw SemanticError("shift_expand expects a word over {a, b}");
    }
  }
  return out;
}

Word substitute_shift(const ShiftWord& s) {
  Word out;
  for (const ShiftLetter& l : s.letters) {
    Word piece = power(single_letter(kTowerB), -l.index);
    piece = concat(piece, single_letter(kTowerA, l.sign));
    piece = concat(piece, power(single_letter(kTowerB), l.index));
    out = concat(out, piece);
  }
  return free_reduce(out);
}

namespace {

struct Unit {
  enum Kind { kTarget, kPlain, kBlock } kind = kPlain;
  int sign = 1;   // targets only
  Word word;      // plains and blocks
  int height = 0; // commutator nesting depth
};

}  // namespace

CollectionResult collect_letter(const Word& w, std::int32_t target) {
  std::list<Unit> units;
  std::vector<std::list<Unit>::iterator> targets;
  for (const Letter& l : w.letters) {
    if (l.symbol == target) {
      units.push_back(Unit{Unit::kTarget, l.sign, Word{}, 0});
      targets.push_back(std::prev(units.end()));
    } else {
      units.push_back(Unit{Unit::kPlain, 1, Word({l}), 0});
    }
  }

  // Collect the rightmost appearance first; each step applies xy = yx[x,y]
  // with x the unit being passed. Passing another target letter commutes
  // freely.
  for (auto it = targets.rbegin(); it != targets.rend(); ++it) {
    auto t_it = *it;
    while (t_it != units.begin()) {
      auto prev = std::prev(t_it);
      if (prev->kind == Unit::kTarget) {
        units.splice(prev, units, t_it);
        continue;
      }
      const Word t_word = single_letter(target, t_it->sign);
      Word comm = commutator(prev->word, t_word);
      const int height = prev->height + 1;
      const auto after = std::next(t_it);
      units.splice(prev, units, t_it);
      if (!comm.empty()) {
        units.insert(after, Unit{Unit::kBlock, 1, std::move(comm), height});
      }
    }
  }

  CollectionResult result;
  auto it = units.begin();
  for (; it != units.end() && it->kind == Unit::kTarget; ++it) {
    result.sigma += it->sign;
  }
  for (; it != units.end(); ++it) {
    switch (it->kind) {
      case Unit::kTarget:
        throw SemanticError("collect_letter: uncollected target letter");
      case Unit::kPlain:
        result.trace.push_back(CollectionSlot{it->word, {}, {}});
        result.tail = concat(result.tail, it->word);
        break;
      case Unit::kBlock:
        if (result.trace.empty()) {
          throw SemanticError("collect_letter: block without anchor letter");
        }
        result.trace.back().factors.push_back(it->word);
        result.trace.back().factor_heights.push_back(it->height);
        result.tail = concat(result.tail, it->word);
        break;
    }
  }
  return result;
}

}  // namespace growthlab::freecalc
