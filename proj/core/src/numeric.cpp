#include "growthlab/numeric.hpp"

#include "growthlab/errors.hpp"

#include <boost/multiprecision/number.hpp>

#include <cctype>
#include <sstream>

namespace growthlab {

Real log_int(const Int& value) {
  if (value <= 0) {
    throw SemanticError("log_int requires a positive integer");
  }
  return boost::multiprecision::log(static_cast<Real>(value));
}

Real int_root(const Int& value, long k) {
  if (k < 1) {
    throw SemanticError("int_root requires k >= 1");
  }
  if (value < 1) {
    throw SemanticError("int_root requires value >= 1");
  }
  if (value == 1) {
    return Real(1);
  }
  return boost::multiprecision::exp(log_int(value) / Real(k));
}

Real root_of_two(const Int& k) {
  if (k < 1) {
    throw SemanticError("root_of_two requires k >= 1");
  }
  static const Real ln2 = boost::multiprecision::log(Real(2));
  return boost::multiprecision::exp(ln2 / static_cast<Real>(k));
}

std::string render_decimal(const Real& x, int digits) {
  if (digits < 0) {
    throw SemanticError("render_decimal requires digits >= 0");
  }
  const bool negative = x < 0;
  Real mag = negative ? Real(-x) : x;

  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  const Real scaled = mag * static_cast<Real>(scale);
  Int whole = static_cast<Int>(boost::multiprecision::floor(scaled));
  const Real frac = scaled - static_cast<Real>(whole);
  const Real half = Real(1) / 2;
  if (frac > half) {
    ++whole;
  } else if (frac == half) {
    if (whole % 2 != 0) ++whole;  // ties to even
  }

  Int int_part = whole / scale;
  Int frac_part = whole % scale;

  std::ostringstream out;
  if (negative && (int_part != 0 || frac_part != 0)) out << '-';
  out << int_part;
  if (digits > 0) {
    std::string f = frac_part.str();
    out << '.' << std::string(static_cast<std::size_t>(digits) - f.size(), '0')
        << f;
  }
  return out.str();
}

Rat parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid_int(text)) throw ParseError("invalid integer: " + text);
      return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) {
      throw ParseError("invalid rational: " + text);
    }
    Int d(den);
    if (d == 0) throw SemanticError("rational with zero denominator: " + text);
    return Rat(Int(num), d);
  } catch (const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) ||
        dynamic_cast<const SemanticError*>(&e)) {
      throw;
    }
    throw ParseError("invalid rational: " + text);
  }
}

std::string rational_to_string(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace growthlab
