#include "growthlab/certificates.hpp"

#include "growthlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace growthlab::certs {

using groups::Element;
using groups::RealizationPtr;

Element witness_element(const RealizationPtr& r, const Word& v, const Word& w,
                        const BitString& alpha) {
  if (alpha.empty()) {
    throw SemanticError("witness bit sequence must be nonempty");
  }
  const Element ve = groups::evaluate_word(r, v);
  const Element we = groups::evaluate_word(r, w);
  Element acc = groups::identity_element(r);
  for (std::uint8_t bit : alpha) {
    if (bit) acc = groups::multiply(acc, we);
    acc = groups::multiply(acc, ve);
  }
  return acc;
}

Int WitnessCertificate::gamma_lower(long n) const {
  if (cost < 1) throw SemanticError("certificate with zero cost");
  if (n < 0 || n > gamma_lower_range()) {
    throw SemanticError("gamma_lower outside the verified range");
  }
  return boost::multiprecision::pow(Int(2), static_cast<unsigned>(n / cost));
}

WitnessCertificate verify_witness(const RealizationPtr& r, const Word& v,
                                  const Word& w, int p_max,
                                  std::size_t element_budget) {
  if (!r) throw SemanticError("null realization");
  if (p_max < 1 || p_max > 30) throw SemanticError("p_max must be in 1..30");
  const std::size_t total = (std::size_t{2} << p_max) - 2;
  if (total > element_budget) {
    throw BudgetExceeded("witness evaluation would exceed the element budget");
  }

  WitnessCertificate cert;
  cert.v = free_reduce(v);
  cert.w = free_reduce(w);
  cert.cost = static_cast<int>(cert.v.size() + cert.w.size());
  cert.p_verified = p_max;
  cert.injective = true;

  const Element ve = groups::evaluate_word(r, cert.v);
  const Element we = groups::evaluate_word(r, cert.w);

  struct Stored {
    Element element;
    BitString alpha;
  };
  std::vector<Stored> stored;
  stored.reserve(total);
  std::unordered_map<std::string, std::vector<std::uint32_t>> by_key;
  by_key.reserve(total * 2);

  for (int p = 1; p <= p_max && cert.injective; ++p) {
    // Walk the level in lexicographic order of alpha (alpha_1 is the most
    // significant bit). Incremental evaluation keeps this linear in the
    // number of words.
    const std::uint64_t count = std::uint64_t{1} << p;
    // prefix[i] = product of the first i blocks; rebuilt per code by shared
    // prefix with the previous code.
    std::vector<Element> prefix(static_cast<std::size_t>(p) + 1);
    prefix[0] = groups::identity_element(r);
    BitString alpha(static_cast<std::size_t>(p), 0);
    for (std::uint64_t code = 0; code < count && cert.injective; ++code) {
      std::size_t first_changed = 0;
      if (code == 0) {
        for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = 0;
      } else {
        // Gray-free increment: find the lowest flipped position.
        std::uint64_t changed = code ^ (code - 1);
        const int highest =
            63 - std::countl_zero(changed);
        first_changed = alpha.size() - 1 - static_cast<std::size_t>(highest);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
          alpha[i] =
              static_cast<std::uint8_t>((code >> (alpha.size() - 1 - i)) & 1);
        }
      }
      for (std::size_t i = first_changed; i < alpha.size(); ++i) {
        Element block = alpha[i] ? groups::multiply(we, ve) : ve;
        prefix[i + 1] = groups::multiply(prefix[i], block);
      }
      Element t = prefix[alpha.size()];

      const std::string key = groups::canonical_key(t);
      auto& bucket = by_key[key];
      for (std::uint32_t idx : bucket) {
        if (groups::equal(stored[idx].element, t)) {
          cert.injective = false;
          cert.collision = std::make_pair(stored[idx].alpha, alpha);
          break;
        }
      }
      if (!cert.injective) break;
      bucket.push_back(static_cast<std::uint32_t>(stored.size()));
      stored.push_back(Stored{std::move(t), alpha});
    }
  }

  if (cert.injective && cert.cost >= 1) {
    cert.omega_lower = root_of_two(Int(cert.cost));
  }
  return cert;
}

namespace {

std::vector<std::vector<Word>> reduced_words_by_length(int generator_count,
                                                       int max_len) {
  std::vector<std::vector<Word>> by_len(static_cast<std::size_t>(max_len) + 1);
  by_len[0].push_back(Word{});
  std::vector<Letter> letters;
  for (std::int32_t g = 0; g < generator_count; ++g) {
    letters.push_back(Letter{g, +1});
    letters.push_back(Letter{g, -1});
  }
  for (int len = 1; len <= max_len; ++len) {
    for (const Word& base : by_len[static_cast<std::size_t>(len - 1)]) {
      for (const Letter& l : letters) {
        if (!base.empty() && base.letters.back().symbol == l.symbol &&
            base.letters.back().sign == -l.sign) {
          continue;
        }
        Word next = base;
        next.letters.push_back(l);
        by_len[static_cast<std::size_t>(len)].push_back(std::move(next));
      }
    }
  }
  return by_len;
}

}  // namespace

std::optional<WitnessCertificate> witness_search(const RealizationPtr& r,
                                                 int max_word_len, int p_max,
                                                 std::size_t element_budget) {
  if (!r) throw SemanticError("null realization");
  if (max_word_len < 1) {
    throw SemanticError("witness_search needs max_word_len >= 1");
  }
  const auto by_len = reduced_words_by_length(r->generator_count, max_word_len);

  for (int cost = 2; cost <= 2 * max_word_len; ++cost) {
    const int lv_min = std::max(1, cost - max_word_len);
    const int lv_max = std::min(max_word_len, cost - 1);
    for (int lv = lv_min; lv <= lv_max; ++lv) {
      const int lw = cost - lv;
      for (const Word& v : by_len[static_cast<std::size_t>(lv)]) {
        for (const Word& w : by_len[static_cast<std::size_t>(lw)]) {
          WitnessCertificate cert =
              verify_witness(r, v, w, p_max, element_budget);
          if (cert.injective) return cert;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

using LampVector = std::map<std::int64_t, int>;

// Membership of `target` in the Z/m-submodule spanned by `gens`, decided by
// exact integer elimination on the column lattice spanned by the generators
// and m times the unit vectors.
bool lamp_span_member(const std::vector<LampVector>& gens,
                      const LampVector& target, int modulus) {
  std::vector<std::int64_t> coords;
  auto touch = [&coords](const LampVector& v) {
    for (const auto& [pos, val] : v) {
      (void)val;
      coords.push_back(pos);
    }
  };
  for (const auto& g : gens) touch(g);
  touch(target);
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  const std::size_t rows = coords.size();
  if (rows == 0) return true;  // target is zero

  auto row_of = [&coords](std::int64_t pos) {
    return static_cast<std::size_t>(
        std::lower_bound(coords.begin(), coords.end(), pos) - coords.begin());
  };

  // Columns of the lattice: generator vectors plus m * unit vectors.
  std::vector<std::vector<Int>> cols;
  for (const auto& g : gens) {
    std::vector<Int> col(rows, Int(0));
    for (const auto& [pos, val] : g) col[row_of(pos)] = val;
    cols.push_back(std::move(col));
  }
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Int> col(rows, Int(0));
    col[i] = modulus;
    cols.push_back(std::move(col));
  }
  std::vector<Int> t(rows, Int(0));
  for (const auto& [pos, val] : target) t[row_of(pos)] = val;

  // Column Hermite reduction, then divisibility checks against the target.
  std::size_t pivot_col = 0;
  for (std::size_t row = 0; row < rows && pivot_col < cols.size(); ++row) {
    // Clear row `row` down to a single nonzero among columns >= pivot_col.
    while (true) {
      std::size_t nonzero = cols.size();
      std::size_t second = cols.size();
      for (std::size_t c = pivot_col; c < cols.size(); ++c) {
        if (cols[c][row] != 0) {
          if (nonzero == cols.size()) {
            nonzero = c;
          } else {
            second = c;
            break;
          }
        }
      }
      if (nonzero == cols.size()) break;  // row identically zero
      if (second == cols.size()) {
        std::swap(cols[nonzero], cols[pivot_col]);
        break;
      }
      // Euclidean step between the two columns on this row.
      std::size_t a = nonzero, b = second;
      if (boost::multiprecision::abs(cols[a][row]) >
          boost::multiprecision::abs(cols[b][row])) {
        std::swap(a, b);
      }
      const Int q = cols[b][row] / cols[a][row];
      for (std::size_t i = 0; i < rows; ++i) {
        cols[b][i] -= q * cols[a][i];
      }
    }
    if (pivot_col < cols.size() && cols[pivot_col][row] != 0) {
      // Reduce the target on this row.
      const Int& p = cols[pivot_col][row];
      if (t[row] % p != 0) return false;
      const Int q = t[row] / p;
      for (std::size_t i = 0; i < rows; ++i) {
        t[i] -= q * cols[pivot_col][i];
      }
      ++pivot_col;
    } else if (t[row] != 0) {
      return false;
    }
  }
  for (const Int& x : t) {
    if (x != 0) return false;
  }
  return true;
}

// Bounded subgroup closure: breadth-first products of the given generators
// and their inverses, stopping as soon as every target is found.
bool closure_contains(const RealizationPtr& r,
                      const std::vector<Element>& generators,
                      const std::vector<Element>& targets,
                      std::size_t element_budget, bool& budget_hit) {
  std::vector<Element> gens;
  for (const Element& g : generators) {
    gens.push_back(g);
    gens.push_back(groups::invert(g));
  }

  std::vector<Element> members{groups::identity_element(r)};
  std::unordered_map<std::string, std::vector<std::uint32_t>> by_key;
  by_key[groups::canonical_key(members[0])].push_back(0);

  std::vector<bool> found(targets.size(), false);
  auto all_found = [&found] {
    return std::all_of(found.begin(), found.end(), [](bool b) { return b; });
  };
  auto mark_found = [&](const Element& e) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (!found[i] && groups::equal(targets[i], e)) found[i] = true;
    }
  };
  mark_found(members[0]);
  if (all_found()) return true;

  std::size_t cursor = 0;
  while (cursor < members.size()) {
    const Element base = members[cursor++];
    for (const Element& g : gens) {
      Element next = groups::multiply(base, g);
      const std::string key = groups::canonical_key(next);
      auto& bucket = by_key[key];
      bool known = false;
      for (std::uint32_t idx : bucket) {
        if (groups::equal(members[idx], next)) {
          known = true;
          break;
        }
      }
      if (known) continue;
      mark_found(next);
      if (all_found()) return true;
      if (members.size() >= element_budget) {
        budget_hit = true;
        return false;
      }
      bucket.push_back(static_cast<std::uint32_t>(members.size()));
      members.push_back(std::move(next));
    }
  }
  return all_found();
}

}  // namespace

StabilizationReport conjugate_stabilization(const RealizationPtr& r,
                                            const Word& v, const Word& w,
                                            int l_max,
                                            std::size_t element_budget,
                                            bool force_heuristic) {
  if (!r) throw SemanticError("null realization");
  if (l_max < 1) throw SemanticError("l_max must be >= 1");

  StabilizationReport report;
  report.v = free_reduce(v);
  report.w = free_reduce(w);
  report.l_tested = l_max;

  const Element ve = groups::evaluate_word(r, report.v);
  const Element we = groups::evaluate_word(r, report.w);
  const Element vi = groups::invert(ve);

  auto conj = [&](const Element& base, const Element& by, const Element& byi) {
    return groups::multiply(groups::multiply(byi, base), by);
  };

  if (!force_heuristic && r->kind == cli::GroupKind::Lamplighter) {
    const auto& wp = std::get<groups::WreathElement>(we.payload());
    if (wp.shift == 0) {
      report.exact_mode = true;
      const auto& vp = std::get<groups::WreathElement>(ve.payload());
      const std::int64_t step = vp.shift;
      if (wp.lamps.empty() || step == 0) {
        // All conjugates coincide with w itself: w^v = lamps of w translated
        // by the shift of v, and the lamp part of v cancels in v^-1 w v.
        report.status = StabilizationReport::Status::kStabilizedAt;
        report.stabilized_level = 0;
        report.detail = wp.lamps.empty()
                            ? "w is trivial in the lamp subgroup"
                            : "v has zero shift: conjugation fixes w";
        return report;
      }
      // Conjugates are exact translates of a nonzero lamp vector along a
      // nonzero step, so each next conjugate has support outside any finite
      // window: the subgroup is not finitely generated. The linear-algebra
      // membership test below double-checks a prefix of that claim.
      report.status = StabilizationReport::Status::kExactInfinite;
      report.detail =
          "translates of a nonzero lamp vector are independent over Z/m";
      const int check_up_to = std::min(l_max, 6);
      for (int level = 0; level <= check_up_to; ++level) {
        std::vector<LampVector> window;
        for (int l = -level; l <= level; ++l) {
          window.push_back(
              groups::wreath_translate_lamps(wp, -l * step).lamps);
        }
        for (int dir : {+1, -1}) {
          const LampVector target =
              groups::wreath_translate_lamps(wp, -dir * (level + 1) * step)
                  .lamps;
          if (lamp_span_member(window, target, r->lamp_modulus)) {
            throw SemanticError(
                "internal inconsistency: escaping conjugate reported inside "
                "the window span");
          }
        }
      }
      return report;
    }
  }

  // Bounded closure heuristic: one-sided, only ever proves stabilization.
  std::vector<Element> window{we};
  Element pos = we;  // w^{v^l}
  Element neg = we;  // w^{v^-l}
  for (int level = 0; level <= l_max; ++level) {
    Element next_pos = conj(pos, ve, vi);
    Element next_neg = conj(neg, vi, ve);
    bool budget_hit = false;
    if (closure_contains(r, window, {next_pos, next_neg}, element_budget,
                         budget_hit)) {
      report.status = StabilizationReport::Status::kStabilizedAt;
      report.stabilized_level = level;
      report.detail = "both next conjugates lie in the window subgroup";
      return report;
    }
    if (budget_hit) {
      report.budget_hit = true;
      report.detail = "closure budget exhausted";
      break;
    }
    window.push_back(next_pos);
    window.push_back(next_neg);
    pos = std::move(next_pos);
    neg = std::move(next_neg);
  }
  report.status = StabilizationReport::Status::kNoStabilization;
  if (report.detail.empty()) {
    report.detail = "no stabilization proven up to l_max";
  }
  return report;
}

TheoreticalBound theoretical_bound(int d) {
  if (d < 1) throw SemanticError("nilpotency degree must be >= 1");
  TheoreticalBound out;
  out.d = d;
  out.s = d + 1;
  out.alpha = 3 * boost::multiprecision::pow(Int(4),
                                             static_cast<unsigned>(d + 1));
  const Int f_2s =
      3 * boost::multiprecision::pow(Int(2), static_cast<unsigned>(2 * out.s -
                                                                   1)) -
      2;
  out.beta = 2 * f_2s;
  if (out.beta > out.alpha) {
    throw SemanticError("internal inconsistency: beta exceeds alpha");
  }
  out.omega_alpha = root_of_two(out.alpha);
  out.omega_beta = root_of_two(out.beta);
  return out;
}

MetabelianCrosscheck crosscheck_metabelian(const RealizationPtr& r, int radius,
                                           int p_max, int max_word_len,
                                           const growth::BallOptions& options) {
  if (!r) throw SemanticError("null realization");
  MetabelianCrosscheck report;
  report.threshold = theoretical_bound(1).omega_alpha;

  const bool declared = r->kind == cli::GroupKind::Lamplighter ||
                        r->kind == cli::GroupKind::BaumslagSolitar;
  if (!declared) {
    report.applicable = false;
    report.reason = "realization is not declared metabelian non-polycyclic";
    return report;
  }
  report.applicable = true;

  report.best = witness_search(r, max_word_len, p_max, options.element_cap);
  const growth::Ball ball = growth::enumerate_ball(r, radius, options);
  report.table = growth::growth_table(ball);
  report.estimate = growth::omega_bounds(report.table);

  report.upper_ok = report.estimate.upper.back() >= report.threshold;
  if (report.best && report.best->injective && report.best->cost >= 1) {
    report.estimate.witness_lower = report.best->omega_lower;
    report.omega_lower_ok = report.best->omega_lower >= report.threshold;
    report.margin = report.best->omega_lower - report.threshold;
    report.gamma_lower_ok = true;
    const long checked =
        std::min<long>(radius, report.best->gamma_lower_range());
    for (long n = 1; n <= checked; ++n) {
      if (report.best->gamma_lower(n) >
          report.table.gamma[static_cast<std::size_t>(n)]) {
        report.gamma_lower_ok = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace growthlab::certs
