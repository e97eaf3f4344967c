#include "growthlab/word.hpp"

#include "growthlab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace growthlab {

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.back().symbol == l.symbol &&
        out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.letters.size(); ++i) {
    if (w.letters[i].symbol == w.letters[i - 1].symbol &&
        w.letters[i].sign == -w.letters[i - 1].sign) {
      return false;
    }
  }
  return true;
}

std::size_t reduced_length(const Word& w) { return free_reduce(w).size(); }

Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.push_back(Letter{it->symbol, static_cast<std::int8_t>(-it->sign)});
  }
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters.begin(), a.letters.end());
  out.insert(out.end(), b.letters.begin(), b.letters.end());
  return Word(std::move(out));
}

Word commutator(const Word& u, const Word& v) {
  return free_reduce(concat(concat(inverse(u), inverse(v)), concat(u, v)));
}

Word conjugate(const Word& w, const Word& v) {
  return free_reduce(concat(concat(inverse(v), w), v));
}

Word power(const Word& w, long e) {
  const Word base = e >= 0 ? w : inverse(w);
  const long n = std::labs(e);
  Word out;
  for (long i = 0; i < n; ++i) out = concat(out, base);
  return free_reduce(out);
}

Word single_letter(std::int32_t symbol, int sign) {
  return Word({Letter{symbol, static_cast<std::int8_t>(sign)}});
}

std::size_t lambda_count(const Word& w, std::int32_t symbol) {
  std::size_t n = 0;
  for (const Letter& l : w.letters) {
    if (l.symbol == symbol) ++n;
  }
  return n;
}

long exponent_sum(const Word& w, std::int32_t symbol) {
  long n = 0;
  for (const Letter& l : w.letters) {
    if (l.symbol == symbol) n += l.sign;
  }
  return n;
}

namespace {
// (symbol, +1) sorts before (symbol, -1).
inline int letter_rank(const Letter& l) {
  return l.symbol * 2 + (l.sign < 0 ? 1 : 0);
}
}  // namespace

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ra = letter_rank(a.letters[i]);
    const int rb = letter_rank(b.letters[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::string encode_word(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (const Letter& l : w.letters) {
    if (l.symbol < 0 || l.symbol > 120) {
      throw SemanticError("encode_word: symbol id out of byte range");
    }
    out.push_back(static_cast<char>(letter_rank(l) + 1));
  }
  return out;
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    const Letter& l = w.letters[i];
    if (l.symbol < 0 || static_cast<std::size_t>(l.symbol) >= names.size()) {
      throw SemanticError("render_word: symbol id out of range");
    }
    std::size_t j = i;
    while (j < w.size() && w.letters[j] == l) ++j;
    const long run = static_cast<long>(j - i) * l.sign;
    if (!first) out << '*';
    out << names[static_cast<std::size_t>(l.symbol)];
    if (run != 1) out << '^' << run;
    first = false;
    i = j;
  }
  return out.str();
}

Word parse_word(const std::string& text,
                const std::vector<std::string>& names) {
  if (text.empty()) throw ParseError("empty word (use \"1\" for identity)", 0);
  if (text == "1") return Word{};

  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t star = text.find('*', pos);
    const std::string token =
        text.substr(pos, star == std::string::npos ? std::string::npos
                                                   : star - pos);
    if (token.empty()) throw ParseError("empty word factor", pos);

    std::string name = token;
    long exp = 1;
    const std::size_t caret = token.find('^');
    if (caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string e = token.substr(caret + 1);
      std::size_t used = 0;
      try {
        exp = std::stol(e, &used);
      } catch (const std::exception&) {
        throw ParseError("invalid exponent in word: " + token, pos);
      }
      if (used != e.size()) {
        throw ParseError("invalid exponent in word: " + token, pos);
      }
    }
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw ParseError("unknown generator name: " + name, pos);
    }
    const auto symbol =
        static_cast<std::int32_t>(std::distance(names.begin(), it));
    const std::int8_t sign = exp >= 0 ? std::int8_t{1} : std::int8_t{-1};
    for (long i = 0; i < std::labs(exp); ++i) {
      out.push_back(Letter{symbol, sign});
    }
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return Word(std::move(out));
}

}  // namespace growthlab
