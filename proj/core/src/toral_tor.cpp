#include "biqtor/toral_tor.hpp"

#include <sstream>
#include <stdexcept>

namespace biqtor {

Int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int TorProfile::multiplicity(std::size_t degree) const { return binomial(rho, degree); }

bool TorProfile::has_finite_rank(std::size_t degree) const {
  return is_zero(degree) || coefficient_group.is_finite();
}

Int TorProfile::z_rank(std::size_t degree) const {
  if (is_zero(degree)) return 0;
  if (!coefficient_group.is_finite())
    throw std::logic_error("TorProfile: infinite rank; use the symbolic description");
  return multiplicity(degree) * coefficient_group.order();
}

std::optional<Int> TorProfile::q_dim(std::size_t degree) const {
  if (!has_finite_rank(degree)) return std::nullopt;
  return z_rank(degree);
}

TorProfile toral_tor(std::size_t ambient_rank, const TorusSubgroup& s1, const TorusSubgroup& s2) {
  if (s1.ambient_rank != ambient_rank || s2.ambient_rank != ambient_rank)
    throw std::invalid_argument("toral_tor: ambient rank mismatch");
  TorProfile out;
  out.ambient_rank = ambient_rank;
  out.rho = lattice_intersect(s1.k, s2.k).rank();
  out.coefficient_group = quotient_invariants(ambient_rank, lattice_sum(s1.k, s2.k));
  return out;
}

bool KGroupDescriptor::is_zero() const {
  if (infinite_rank) return false;
  if (z_rank) return *z_rank == 0;
  if (q_dim) return *q_dim == 0;
  return false;
}

std::string KGroupDescriptor::to_string() const {
  std::ostringstream os;
  if (infinite_rank) {
    if (!group_ring_of) return "infinite Z-rank";
    os << "Z[" << group_ring_of->to_string() << "]";
    if (multiplicity > 1) os << "^" << multiplicity.get_str();
    return os.str();
  }
  if (z_rank) {
    if (*z_rank == 0) return "0";
    os << "Z";
    if (*z_rank != 1) os << "^" << z_rank->get_str();
    return os.str();
  }
  if (q_dim) {
    os << "Q-dimension " << q_dim->get_str();
    return os.str();
  }
  return "?";
}

namespace {

KGroupDescriptor descriptor_from_profile(const TorProfile& tor, std::size_t degree) {
  KGroupDescriptor d;
  d.multiplicity = tor.multiplicity(degree);
  if (tor.has_finite_rank(degree)) {
    d.z_rank = tor.z_rank(degree);
    d.q_dim = d.z_rank;
  } else {
    d.infinite_rank = true;
    d.group_ring_of = tor.coefficient_group;
  }
  return d;
}

}  // namespace

KTheoryReport toral_ktheory(std::size_t ambient_rank, const TorusSubgroup& s1,
                            const TorusSubgroup& s2) {
  if (s1.ambient_rank != ambient_rank || s2.ambient_rank != ambient_rank)
    throw std::invalid_argument("toral_ktheory: ambient rank mismatch");

  // For an ambient torus the Weyl group is trivial, so the strict condition
  // is exactly triviality of S1 n S2.
  AbelianInvariants inter = quotient_invariants(ambient_rank, lattice_sum(s1.k, s2.k));
  if (!inter.is_trivial())
    throw HypothesisError("strict biquotient condition",
                          "S1 n S2 is nontrivial (character quotient " + inter.to_string() + ")");
  if (s1.rank() + s2.rank() + 1 < ambient_rank)
    throw HypothesisError("rank inequality",
                          "rank S1 + rank S2 < rank T - 1, the two-column assumption fails");

  TorProfile tor = toral_tor(ambient_rank, s1, s2);
  KTheoryReport report;
  report.strict_condition_held = true;
  report.rank_inequality_held = true;
  report.maximal_rank = s1.rank() + s2.rank() == ambient_rank;
  report.k0 = descriptor_from_profile(tor, 0);
  report.k1 = descriptor_from_profile(tor, 1);
  if (report.maximal_rank && !report.k1.is_zero())
    throw std::logic_error("toral_ktheory: K^1 must vanish in the maximal-rank case");
  return report;
}

}  // namespace biqtor
