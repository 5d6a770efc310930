#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "biqtor/int_matrix.hpp"

namespace biqtor {

/// Invariant-factor presentation of a finitely generated abelian group:
/// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ... and every di >= 2.
/// Equal groups compare equal.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianInvariants&) const = default;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Group order; only meaningful when finite.
  Int order() const;
  std::string to_string() const;
};

/// Sublattice of Z^r, held as the Hermite normal form of a basis. The basis
/// rows are independent, so equality of sublattices is equality of the stored
/// matrices.
class Sublattice {
public:
  Sublattice() = default;

  static Sublattice zero(std::size_t ambient_rank);
  static Sublattice full(std::size_t ambient_rank);
  /// Row span of an arbitrary generating matrix (rows need not be independent).
  static Sublattice from_generators(std::size_t ambient_rank, const IntMatrix& gens);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool operator==(const Sublattice&) const = default;

  bool contains(const std::vector<Int>& v) const;
  bool contains(const Sublattice& other) const;
  bool is_zero() const { return rank() == 0; }
  bool is_full() const { return rank() == ambient_rank_; }

  std::string to_string() const;

private:
  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;  // HNF, rank() rows
};

/// Smallest sublattice containing both arguments (row span of the union).
Sublattice lattice_sum(const Sublattice& k1, const Sublattice& k2);

/// Exact intersection of the two row spans.
Sublattice lattice_intersect(const Sublattice& k1, const Sublattice& k2);

/// Invariant factors of Z^r / K.
AbelianInvariants quotient_invariants(std::size_t ambient_rank, const Sublattice& k);

/// True iff Z^r / K is torsion-free, i.e. K is a direct summand of Z^r.
bool is_direct_summand(const Sublattice& k);

/// Smallest direct summand containing K (intersection of the rational span
/// with Z^r).
Sublattice saturate(const Sublattice& k);

}  // namespace biqtor
