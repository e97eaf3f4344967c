#include "growthlab/matrix.hpp"

#include "growthlab/errors.hpp"

#include <sstream>
#include <utility>

namespace growthlab::groups {

RatMatrix::RatMatrix(std::size_t n, std::vector<Rat> row_major)
    : dim_(n), entries_(std::move(row_major)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_) {
    throw SemanticError("matrix entries do not form a square matrix");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  std::vector<Rat> e(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return RatMatrix(n, std::move(e));
}

const Rat& RatMatrix::at(std::size_t row, std::size_t col) const {
  return entries_[row * dim_ + col];
}

Rat& RatMatrix::at(std::size_t row, std::size_t col) {
  return entries_[row * dim_ + col];
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (dim_ != rhs.dim_) {
    throw SemanticError("matrix dimension mismatch");
  }
  RatMatrix out = identity(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Rat acc(0);
      for (std::size_t k = 0; k < dim_; ++k) {
        acc += at(i, k) * rhs.at(k, j);
      }
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

RatMatrix RatMatrix::inverse() const {
  RatMatrix work = *this;
  RatMatrix inv = identity(dim_);
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && work.at(pivot, col) == 0) ++pivot;
    if (pivot == dim_) throw SemanticError("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < dim_; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rat p = work.at(col, col);
    for (std::size_t j = 0; j < dim_; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i == col) continue;
      const Rat factor = work.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        work.at(i, j) -= factor * work.at(col, j);
        inv.at(i, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool RatMatrix::is_identity() const { return *this == identity(dim_); }

std::string RatMatrix::canonical_key() const {
  std::ostringstream out;
  out << dim_ << '#';
  for (const Rat& e : entries_) {
    out << rational_to_string(e) << ';';
  }
  return out.str();
}

}  // namespace growthlab::groups
