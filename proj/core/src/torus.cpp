#include "biqtor/torus.hpp"

#include <stdexcept>

namespace biqtor {

TorusSubgroup TorusSubgroup::from_vanishing_lattice(std::size_t r, Sublattice k) {
  if (k.ambient_rank() != r) throw std::invalid_argument("TorusSubgroup: ambient rank mismatch");
  return {r, std::move(k)};
}

TorusSubgroup subgroup_from_cocharacters(std::size_t ambient_rank, const IntMatrix& cochars) {
  if (cochars.rows() > 0 && cochars.cols() != ambient_rank)
    throw std::invalid_argument("subgroup_from_cocharacters: cocharacter width mismatch");
  // characters chi with <chi, c> = 0 for every cocharacter row c
  IntMatrix pairing = cochars.rows() == 0 ? IntMatrix(ambient_rank, 0) : cochars.transposed();
  return {ambient_rank, Sublattice::from_generators(ambient_rank, left_kernel(pairing))};
}

TorusSubgroup intersect_subgroups(const TorusSubgroup& s1, const TorusSubgroup& s2) {
  if (s1.ambient_rank != s2.ambient_rank)
    throw std::invalid_argument("intersect_subgroups: ambient rank mismatch");
  return {s1.ambient_rank, lattice_sum(s1.k, s2.k)};
}

CharacterRestriction::CharacterRestriction(const TorusSubgroup& s)
    : source_rank_(s.ambient_rank), target_rank_(s.rank()) {
  if (!s.is_subtorus())
    throw std::invalid_argument(
        "restrict_character: subgroup is not a subtorus (character quotient has torsion)");
  v_ = smith_normal_form(s.k.basis()).v;
}

LaurentPoly::Exponents CharacterRestriction::map_exponents(const LaurentPoly::Exponents& e) const {
  if (e.size() != source_rank_) throw std::invalid_argument("restrict_character: rank mismatch");
  const std::size_t dropped = source_rank_ - target_rank_;
  LaurentPoly::Exponents out(target_rank_);
  for (std::size_t j = 0; j < target_rank_; ++j) {
    Int acc = 0;
    for (std::size_t i = 0; i < source_rank_; ++i)
      acc += Int(static_cast<long>(e[i])) * v_(i, dropped + j);
    if (!acc.fits_slong_p()) throw std::overflow_error("restrict_character: exponent overflow");
    out[j] = acc.get_si();
  }
  return out;
}

LaurentPoly CharacterRestriction::operator()(const LaurentPoly& chi) const {
  return chi.map_exponents(target_rank_, [this](const LaurentPoly::Exponents& e) { return map_exponents(e); });
}

LaurentPoly restrict_character(const TorusSubgroup& s, const LaurentPoly& chi) {
  return CharacterRestriction(s)(chi);
}

}  // namespace biqtor
