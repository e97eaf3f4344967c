#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace growthlab::groups {

/// Element of the wreath product (Z/m) wr Z: a finitely supported lamp
/// configuration Z -> Z/m plus an integer shift. Normal form: zero lamps are
/// never stored, so equality is structural.
///
/// Product convention (fixed): (f,k)(g,l) = (f + shift_k(g), k+l), where
/// shift_k moves the support of g right by k.
struct WreathElement {
  std::map<std::int64_t, int> lamps;  // position -> value in 1..m-1
  std::int64_t shift = 0;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

WreathElement wreath_identity();

/// Lamp of the given value at `position`, zero shift.
WreathElement wreath_lamp(std::int64_t position, int value, int modulus);

/// Pure shift by `amount`.
WreathElement wreath_shift(std::int64_t amount);

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b,
                              int modulus);

/// (f,k)^-1 = (-shift_{-k}(f), -k).
WreathElement wreath_inverse(const WreathElement& a, int modulus);

/// Moves support by `amount` (no shift-component change).
WreathElement wreath_translate_lamps(const WreathElement& a,
                                     std::int64_t amount);

std::string wreath_canonical_key(const WreathElement& a);

}  // namespace growthlab::groups
