#include "growthlab/wreath.hpp"

#include "growthlab/errors.hpp"

#include <sstream>

namespace growthlab::groups {

namespace {
int mod_value(long long v, int m) {
  int r = static_cast<int>(((v % m) + m) % m);
  return r;
}
}  // namespace

WreathElement wreath_identity() { return WreathElement{}; }

WreathElement wreath_lamp(std::int64_t position, int value, int modulus) {
  if (modulus < 2) throw SemanticError("wreath modulus must be >= 2");
  WreathElement e;
  const int v = mod_value(value, modulus);
  if (v != 0) e.lamps[position] = v;
  return e;
}

WreathElement wreath_shift(std::int64_t amount) {
  WreathElement e;
  e.shift = amount;
  return e;
}

WreathElement wreath_translate_lamps(const WreathElement& a,
                                     std::int64_t amount) {
  WreathElement out;
  out.shift = a.shift;
  for (const auto& [pos, val] : a.lamps) {
    out.lamps[pos + amount] = val;
  }
  return out;
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b,
                              int modulus) {
  WreathElement out;
  out.shift = a.shift + b.shift;
  out.lamps = a.lamps;
  for (const auto& [pos, val] : b.lamps) {
    const std::int64_t p = pos + a.shift;
    const int merged = mod_value(static_cast<long long>(out.lamps[p]) + val,
                                 modulus);
    if (merged == 0) {
      out.lamps.erase(p);
    } else {
      out.lamps[p] = merged;
    }
  }
  return out;
}

WreathElement wreath_inverse(const WreathElement& a, int modulus) {
  WreathElement out;
  out.shift = -a.shift;
  for (const auto& [pos, val] : a.lamps) {
    out.lamps[pos - a.shift] = mod_value(-static_cast<long long>(val), modulus);
  }
  return out;
}

std::string wreath_canonical_key(const WreathElement& a) {
  std::ostringstream out;
  out << a.shift << '#';
  for (const auto& [pos, val] : a.lamps) {
    out << pos << ':' << val << ';';
  }
  return out.str();
}

}  // namespace growthlab::groups
