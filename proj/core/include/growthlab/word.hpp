#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace growthlab {

/// One letter of a word over an abstract alphabet: symbol id plus sign.
struct Letter {
  std::int32_t symbol = 0;
  std::int8_t sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Word over an abstract alphabet. Not forced to be reduced: reduction is an
/// explicit operation, and letter counts (lambda) are defined on the word as
/// written, not on the element it represents.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Fully cancels adjacent inverse pairs. Idempotent; the result represents
/// the same free-group element.
Word free_reduce(const Word& w);

bool is_reduced(const Word& w);

/// Length of the reduced form.
std::size_t reduced_length(const Word& w);

Word inverse(const Word& w);

/// Plain concatenation, no reduction.
Word concat(const Word& a, const Word& b);

/// Reduced form of u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

/// Reduced form of v^-1 w v.
Word conjugate(const Word& w, const Word& v);

/// w^e, reduced. e may be negative or zero.
Word power(const Word& w, long e);

Word single_letter(std::int32_t symbol, int sign = 1);

/// Number of appearances of `symbol` with either sign, counted on the word
/// as written (no reduction).
std::size_t lambda_count(const Word& w, std::int32_t symbol);

/// Signed exponent sum of `symbol` in w.
long exponent_sum(const Word& w, std::int32_t symbol);

/// Shortlex order on reduced words: length first, then lexicographic with
/// letters ordered by (symbol, +1 before -1).
bool shortlex_less(const Word& a, const Word& b);

/// Compact injective byte encoding (symbols must fit in 7 bits).
std::string encode_word(const Word& w);

/// "x*y^-1*x^3" with the given symbol names; "1" for the empty word.
std::string render_word(const Word& w, const std::vector<std::string>& names);

/// Inverse of render_word. Accepts name, name^k, name^-k, separated by '*'.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

}  // namespace growthlab
