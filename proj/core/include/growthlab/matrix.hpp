#pragma once

#include "growthlab/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace growthlab::groups {

/// Dense square matrix of exact rationals. The matrix itself is the normal
/// form of an element: equality is entry-wise.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t n, std::vector<Rat> row_major);

  static RatMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return dim_; }
  const Rat& at(std::size_t row, std::size_t col) const;
  Rat& at(std::size_t row, std::size_t col);

  RatMatrix operator*(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix& rhs) const = default;

  /// Exact inverse via Gauss-Jordan. Throws SemanticError("singular matrix")
  /// when not invertible.
  RatMatrix inverse() const;

  bool is_identity() const;

  /// Injective serialization (dim + canonical num/den strings).
  std::string canonical_key() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Rat> entries_;  // row-major
};

}  // namespace growthlab::groups
