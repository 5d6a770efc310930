#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biqtor/biquotient.hpp"
#include "biqtor/groebner.hpp"
#include "biqtor/root_datum.hpp"
#include "biqtor/toral_tor.hpp"
#include "biqtor/torus.hpp"

namespace biqtor {

/// Coefficient field selector: exact rationals (authoritative) or a prime
/// field (diagnostic; mod-p homology does not determine the integral answer).
struct FieldTag {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint32_t p = 0;

  static FieldTag rational() { return {Kind::Rational, 0}; }
  static FieldTag prime(std::uint32_t p) { return {Kind::Prime, p}; }
  /// Parses "q" or "fp:<p>".
  static FieldTag parse(const std::string& text);
  bool is_rational() const { return kind == Kind::Rational; }
  std::string to_string() const { return is_rational() ? "q" : "fp:" + std::to_string(p); }
  bool operator==(const FieldTag&) const = default;
};

/// Field-erased homology summary for one Tor degree.
struct TorDegree {
  std::size_t degree = 0;
  bool is_zero = false;
  std::optional<Int> finite_dim;
  std::size_t presentation_rank = 0;                // generators, when infinite-dimensional
  std::vector<std::string> presentation_relations;  // canonical rendered relations
};

struct TorResult {
  std::vector<TorDegree> degrees;  // 0 .. rank G
  FieldTag field;
  bool diagnostic_only = false;  // true for prime fields
  BudgetStats stats;

  std::vector<std::size_t> nonzero_degrees() const;
};

struct TorOptions {
  GroebnerBudget budget{};
  bool certify = false;
  MonomialOrder order = MonomialOrder::DegRevLex;
};

/// The regular sequence for the diagonal reduction: in the joint Laurent ring
/// on rank(S1) + rank(S2) variables, z_j = res1(lambda_j) - res2(lambda_j)
/// (first factor embedded low, second high), one per fundamental generator.
std::vector<LaurentPoly> diagonal_generators(const RootDatum& datum, const TorusSubgroup& s1,
                                             const TorusSubgroup& s2);

/// Tor_i over R(G) of R(S1), R(S2) tensored with the chosen field, computed
/// as Koszul homology of the diagonal generators over the joint Laurent ring.
TorResult tor_good_group(const RootDatum& datum, const TorusSubgroup& s1, const TorusSubgroup& s2,
                         const FieldTag& field, const TorOptions& opts = {});

struct VerificationReport {
  PairClassification classification;
  long bound = 0;
  std::vector<std::size_t> observed_nonzero_degrees;
  bool theorem_consistent = true;
  TorResult tor;
  /// Exact profile and agreement flag, filled on the ambient-torus path.
  std::optional<TorProfile> exact;
  bool cross_checked = false;
  /// Set when a resource budget ran out: the report is inconclusive, never a
  /// false verdict.
  std::optional<std::string> inconclusive;
};

/// Classification + bound + rational Tor, with the consistency check of the
/// vanishing statement; exact cross-check against the closed form when the
/// ambient group is a torus.
VerificationReport verify_theorem(const RootDatum& datum, const TorusSubgroup& s1,
                                  const TorusSubgroup& s2, const TorOptions& opts = {});

/// K-theory of the biquotient S1 \ G / S2. Requires the strict condition and
/// rank S1 + rank S2 >= rank G - 1 (both checked; failures carry the
/// hypothesis name). Exact integral answers are attached when the ambient
/// group is a torus.
KTheoryReport ktheory_biquotient(const RootDatum& datum, const TorusSubgroup& s1,
                                 const TorusSubgroup& s2, const TorOptions& opts = {});

}  // namespace biqtor
