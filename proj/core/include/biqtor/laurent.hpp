#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "biqtor/int_matrix.hpp"

namespace biqtor {

using Rational = mpq_class;

/// Sparse Laurent polynomial over Q in `ambient_rank` variables: a map from
/// exponent vectors to nonzero coefficients, ordered lexicographically so that
/// equal polynomials compare equal.
class LaurentPoly {
public:
  using Exponents = std::vector<std::int64_t>;
  using TermMap = std::map<Exponents, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t ambient_rank) : rank_(ambient_rank) {}

  static LaurentPoly zero(std::size_t rank) { return LaurentPoly(rank); }
  static LaurentPoly constant(std::size_t rank, const Rational& c);
  static LaurentPoly monomial(std::size_t rank, Exponents e, const Rational& c = 1);
  /// The coordinate x_i.
  static LaurentPoly variable(std::size_t rank, std::size_t i);

  std::size_t ambient_rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  void add_term(const Exponents& e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  bool operator==(const LaurentPoly&) const = default;

  /// Ring map sending x^e to x^{f(e)}; f must be additive.
  LaurentPoly map_exponents(std::size_t new_rank,
                            const std::function<Exponents(const Exponents&)>& f) const;

  /// Exponent substitution e -> M e for a square integer matrix M.
  LaurentPoly apply_matrix(const IntMatrix& m) const;

  /// Reinterpret in a larger variable set, with this polynomial's variables
  /// placed at `offset`.
  LaurentPoly embed(std::size_t new_rank, std::size_t offset) const;

  std::string to_string() const;

private:
  std::size_t rank_ = 0;
  TermMap terms_;
};

}  // namespace biqtor
