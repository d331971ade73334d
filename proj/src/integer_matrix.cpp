#include "reidem/integer_matrix.hpp"

#include <algorithm>

namespace reidem {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix shape mismatch in product");
  IntegerMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Integer& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += aik * other.at(k, j);
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InputError("matrix shape mismatch in difference");
  }
  IntegerMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
  return out;
}

void IntegerMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntegerMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of non-square matrix");
  int n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// Row/column elementary operations mirrored into the transforms.
void add_row(IntegerMatrix& a, IntegerMatrix& left, int dst, int src, const Integer& q) {
  for (int j = 0; j < a.cols(); ++j) a.at(dst, j) += q * a.at(src, j);
  for (int j = 0; j < left.cols(); ++j) left.at(dst, j) += q * left.at(src, j);
}

void add_col(IntegerMatrix& a, IntegerMatrix& right, int dst, int src, const Integer& q) {
  for (int i = 0; i < a.rows(); ++i) a.at(i, dst) += q * a.at(i, src);
  for (int i = 0; i < right.rows(); ++i) right.at(i, dst) += q * right.at(i, src);
}

bool find_min_pivot(const IntegerMatrix& a, int s, int& pi, int& pj) {
  bool found = false;
  Integer best = 0;
  for (int i = s; i < a.rows(); ++i) {
    for (int j = s; j < a.cols(); ++j) {
      const Integer& v = a.at(i, j);
      if (v == 0) continue;
      Integer av = abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) {
  IntegerMatrix a = input;
  IntegerMatrix left = IntegerMatrix::identity(a.rows());
  IntegerMatrix right = IntegerMatrix::identity(a.cols());
  int n = std::min(a.rows(), a.cols());

  for (int s = 0; s < n; ++s) {
    int pi = s, pj = s;
    if (!find_min_pivot(a, s, pi, pj)) break;
    for (;;) {
      find_min_pivot(a, s, pi, pj);
      a.swap_rows(s, pi);
      left.swap_rows(s, pi);
      a.swap_cols(s, pj);
      right.swap_cols(s, pj);

      // Clear the pivot column and row; truncated division leaves remainders
      // strictly smaller than the pivot, which then becomes the new pivot.
      bool clean = true;
      for (int i = s + 1; i < a.rows(); ++i) {
        if (a.at(i, s) == 0) continue;
        Integer q = a.at(i, s) / a.at(s, s);
        add_row(a, left, i, s, -q);
        if (a.at(i, s) != 0) clean = false;
      }
      for (int j = s + 1; j < a.cols(); ++j) {
        if (a.at(s, j) == 0) continue;
        Integer q = a.at(s, j) / a.at(s, s);
        add_col(a, right, j, s, -q);
        if (a.at(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: pull a non-divisible entry into the
      // pivot row and keep reducing.
      bool divides = true;
      for (int i = s + 1; i < a.rows() && divides; ++i) {
        for (int j = s + 1; j < a.cols() && divides; ++j) {
          if (a.at(i, j) % a.at(s, s) != 0) {
            add_row(a, left, s, i, 1);
            divides = false;
          }
        }
      }
      if (divides) break;
    }
  }

  SmithForm out;
  out.diag.resize(n);
  for (int s = 0; s < n; ++s) {
    if (a.at(s, s) < 0) {
      for (int j = 0; j < a.cols(); ++j) a.at(s, j) = -a.at(s, j);
      for (int j = 0; j < left.cols(); ++j) left.at(s, j) = -left.at(s, j);
    }
    out.diag[s] = a.at(s, s);
  }
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

}  // namespace reidem
