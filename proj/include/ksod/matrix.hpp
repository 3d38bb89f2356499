#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ksod/abelian.hpp"
#include "ksod/poly.hpp"

namespace ksod {

// Dense row-major integer matrix. Zero-sized shapes are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Integer>& entries() const { return entries_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_diagonal() const;

  // Bareiss fraction-free elimination; square matrices only.
  Integer determinant() const;
  std::size_t rank() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// u * m * v == d, d diagonal with nonnegative entries d1 | d2 | ...,
// u and v unimodular.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Z^rows / image(m), reading m as a map Z^cols -> Z^rows.
FinAbGroup cokernel(const IntMatrix& m);

}  // namespace ksod
