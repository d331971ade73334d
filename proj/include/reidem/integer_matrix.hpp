#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "reidem/errors.hpp"

namespace reidem {

using Integer = boost::multiprecision::cpp_int;

// Dense integer matrix over arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(std::size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  }
  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& at(int i, int j) { return entries_[std::size_t(i) * cols_ + j]; }
  const Integer& at(int i, int j) const { return entries_[std::size_t(i) * cols_ + j]; }

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  IntegerMatrix operator-(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix&) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Integer> entries_;
};

// Exact determinant (Bareiss fraction-free elimination). Square only.
Integer determinant(const IntegerMatrix& a);

// left * A * right is diagonal with a nonnegative divisibility chain
// d1 | d2 | ... (zeros last); left and right are unimodular.
struct SmithForm {
  std::vector<Integer> diag;
  IntegerMatrix left, right;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

}  // namespace reidem
