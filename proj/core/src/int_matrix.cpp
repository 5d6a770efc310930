#include "biqtor/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace biqtor {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Bareiss: division is exact
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

bool IntMatrix::is_unimodular() const {
  if (!is_square()) return false;
  Int d = determinant();
  return d == 1 || d == -1;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "") << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Position of the nonzero entry of smallest absolute value in the trailing
// submatrix starting at (t, t), or nullopt if that submatrix is zero.
std::pair<bool, std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& a, std::size_t t) {
  bool found = false;
  std::pair<std::size_t, std::size_t> best{0, 0};
  Int best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!found || v < best_abs) {
        found = true;
        best = {i, j};
        best_abs = v;
      }
    }
  return {found, best};
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition out{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto [found, pos] = smallest_pivot(d, t);
      if (!found) {
        // trailing submatrix is zero: the diagonal is complete
        for (std::size_t i = t; i < steps; ++i)
          if (d(i, i) < 0) {
            d.negate_row(i);
            u.negate_row(i);
          }
        return out;
      }
      d.swap_rows(t, pos.first);
      u.swap_rows(t, pos.first);
      d.swap_cols(t, pos.second);
      v.swap_cols(t, pos.second);

      // sweep: reduce column t and row t by the pivot
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;  // remainder became the new smaller entry
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold any non-multiple into row t and redo the sweep
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n && divides_all; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
  IntMatrix d = smith_normal_form(a).d;
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

HermiteDecomposition hermite_with_transform(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteDecomposition out{IntMatrix::identity(m), a};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;

  std::size_t r = 0;  // next pivot row
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // gcd out column c below row r
    for (;;) {
      std::size_t p = m;
      Int best;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int v = abs(h(i, c));
        if (p == m || v < best) {
          p = i;
          best = v;
        }
      }
      if (p == m) break;  // column clear below r
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = hermite_with_transform(a).h;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++rank;
  }
  IntMatrix out(rank, h.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

IntMatrix left_kernel(const IntMatrix& a) {
  HermiteDecomposition hd = hermite_with_transform(a);
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < hd.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hd.h.cols(); ++j)
      if (hd.h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) rows.push_back(hd.u.row(i));
  }
  return hermite_normal_form(IntMatrix::from_rows(a.rows(), rows));
}

std::size_t matrix_rank(const IntMatrix& a) { return hermite_normal_form(a).rows(); }

}  // namespace biqtor
