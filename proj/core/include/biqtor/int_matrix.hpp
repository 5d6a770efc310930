#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace biqtor {

using Int = mpz_class;

/// Dense matrix over the arbitrary-precision integers, row-major.
/// All arithmetic is exact; a 0x0, 0xn or nx0 matrix is legal.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  /// row i += c * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  /// col i += c * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Exact determinant (fraction-free Bareiss elimination). Requires a square matrix.
  Int determinant() const;
  bool is_unimodular() const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all di >= 0.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Invariant factors of A read off the Smith form: the nonzero diagonal entries, in order.
std::vector<Int> invariant_factors(const IntMatrix& a);

/// Row-style Hermite normal form of the row span of A: nonzero rows first with
/// strictly increasing pivot columns, positive pivots, and entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped, so the result has
/// rank(A) rows. Equal row spans produce identical matrices.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Hermite form without dropping zero rows, together with a unimodular U such
/// that U * A = H. The zero rows of H sit at the bottom; the matching rows of
/// U span the left kernel of A.
struct HermiteDecomposition {
  IntMatrix u;
  IntMatrix h;
};

HermiteDecomposition hermite_with_transform(const IntMatrix& a);

/// Basis of { x : x * A = 0 }, canonicalized. Always a saturated lattice.
IntMatrix left_kernel(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

}  // namespace biqtor
