#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "biqtor/lattice.hpp"
#include "biqtor/torus.hpp"

namespace biqtor {

/// Tor over the representation ring of an ambient torus, in closed form:
///   Tor_i = Z[Z^r/(K1+K2)] ^ binom(rho, i),   rho = rank(K1 n K2),
/// and zero above rho. Group rings of finitely generated abelian groups are
/// free as abelian groups, so each degree is Z^(multiplicity * |quotient|)
/// when the quotient is finite and of countably infinite rank otherwise.
struct TorProfile {
  std::size_t ambient_rank = 0;
  std::size_t rho = 0;
  AbelianInvariants coefficient_group;

  Int multiplicity(std::size_t degree) const;  // binom(rho, degree)
  bool is_zero(std::size_t degree) const { return degree > rho; }
  bool has_finite_rank(std::size_t degree) const;
  /// Z-rank of Tor_degree; only valid when has_finite_rank.
  Int z_rank(std::size_t degree) const;
  /// Q-dimension of Tor_degree (x) Q, when finite.
  std::optional<Int> q_dim(std::size_t degree) const;
};

/// S1, S2 may be arbitrary closed subgroups of the rank-r torus.
TorProfile toral_tor(std::size_t ambient_rank, const TorusSubgroup& s1, const TorusSubgroup& s2);

/// One K-group in a report. Exactly one of the following shapes:
///  - finite exact: z_rank set (torsion never occurs on the exact toral path);
///  - symbolic "group ring of Q": infinite_rank with the quotient recorded;
///  - Q-dimension only (Groebner path): q_dim set, z_rank unknown.
struct KGroupDescriptor {
  bool infinite_rank = false;
  std::optional<Int> z_rank;
  std::optional<AbelianInvariants> group_ring_of;
  Int multiplicity = 0;
  std::optional<Int> q_dim;

  bool is_zero() const;
  std::string to_string() const;
};

struct KTheoryReport {
  KGroupDescriptor k0;
  KGroupDescriptor k1;
  bool strict_condition_held = false;
  bool rank_inequality_held = false;  // rank S1 + rank S2 >= rank G - 1
  bool maximal_rank = false;          // rank S1 + rank S2 == rank G, forcing K^1 = 0
};

/// Thrown when a named hypothesis of the K-theory statement fails.
class HypothesisError : public std::invalid_argument {
public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : std::invalid_argument(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

private:
  std::string hypothesis_;
};

/// K-theory of the biquotient S1 \ T / S2 for an ambient torus. Requires the
/// strict condition and rank S1 + rank S2 >= r - 1; failures are reported by
/// hypothesis name.
KTheoryReport toral_ktheory(std::size_t ambient_rank, const TorusSubgroup& s1,
                            const TorusSubgroup& s2);

Int binomial(std::size_t n, std::size_t k);

}  // namespace biqtor
