#pragma once

#include <cstddef>

#include "biqtor/int_matrix.hpp"
#include "biqtor/lattice.hpp"
#include "biqtor/laurent.hpp"

namespace biqtor {

/// Closed subgroup S of a rank-r torus T, recorded by the sublattice k of
/// characters of T vanishing on S. Inclusion-reversing: larger subgroups have
/// smaller k.
struct TorusSubgroup {
  std::size_t ambient_rank = 0;
  Sublattice k;

  static TorusSubgroup trivial(std::size_t r) { return {r, Sublattice::full(r)}; }
  static TorusSubgroup full_torus(std::size_t r) { return {r, Sublattice::zero(r)}; }
  static TorusSubgroup from_vanishing_lattice(std::size_t r, Sublattice k);

  std::size_t rank() const { return ambient_rank - k.rank(); }
  bool is_subtorus() const { return is_direct_summand(k); }
  /// Component group of S: Char(S) = Z^r / k; its torsion part is dual to pi_0(S).
  AbelianInvariants character_group() const { return quotient_invariants(ambient_rank, k); }

  bool operator==(const TorusSubgroup&) const = default;
};

/// Closure of the image of the cocharacter map (S^1)^m -> T given by the rows
/// of C. The result is always a subtorus.
TorusSubgroup subgroup_from_cocharacters(std::size_t ambient_rank, const IntMatrix& cochars);

TorusSubgroup intersect_subgroups(const TorusSubgroup& s1, const TorusSubgroup& s2);

/// The restriction map R(T) -> R(S) for a subtorus S, realized through the
/// splitting Z^r/k = Z^{rank S} fixed by the Smith form of k's basis. Raw
/// output exponents depend on that splitting; ranks and invariant factors of
/// anything computed from them do not.
class CharacterRestriction {
public:
  explicit CharacterRestriction(const TorusSubgroup& s);

  std::size_t source_rank() const { return source_rank_; }
  std::size_t target_rank() const { return target_rank_; }

  LaurentPoly::Exponents map_exponents(const LaurentPoly::Exponents& e) const;
  LaurentPoly operator()(const LaurentPoly& chi) const;

private:
  std::size_t source_rank_;
  std::size_t target_rank_;
  IntMatrix v_;  // column transform of the Smith form of k's basis
};

LaurentPoly restrict_character(const TorusSubgroup& s, const LaurentPoly& chi);

}  // namespace biqtor
