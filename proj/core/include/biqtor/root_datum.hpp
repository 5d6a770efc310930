#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "biqtor/int_matrix.hpp"
#include "biqtor/lattice.hpp"
#include "biqtor/laurent.hpp"
#include "biqtor/torus.hpp"

namespace biqtor {

/// One factor of a good group: SU(n) with n >= 2, Sp(n) with n >= 1, or a
/// torus of any rank (simply connected or toral factors only, so the product
/// is good).
struct GroupFactor {
  enum class Type { SU, Sp, Torus };
  Type type = Type::Torus;
  std::size_t n = 0;  // SU(n) / Sp(n) parameter, or the torus rank

  std::size_t rank() const;
  Int weyl_order() const;
  std::string to_string() const;
  bool operator==(const GroupFactor&) const = default;
};

struct GroupSpec {
  std::vector<GroupFactor> factors;

  std::size_t rank() const;
  bool is_torus() const;
  std::string to_string() const;
  bool operator==(const GroupSpec&) const = default;
};

GroupFactor su(std::size_t n);
GroupFactor sp(std::size_t n);
GroupFactor torus(std::size_t rank);

/// Unimodular matrix acting on character exponent vectors by e -> M e.
struct WeylElement {
  IntMatrix matrix;
  bool operator==(const WeylElement&) const = default;
};

/// Character-level data of a good group: coordinates on the maximal torus,
/// the restrictions of the polynomial/Laurent generators of R(G), the root
/// lattice and the Weyl group.
struct RootDatum {
  GroupSpec spec;
  std::size_t rank = 0;
  std::vector<LaurentPoly> fundamental_chars;  // one per coordinate, in factor order
  std::vector<bool> laurent_flags;             // true for invertible (torus) generators
  Sublattice root_lattice;
  Int weyl_order;
};

RootDatum build_root_datum(const GroupSpec& spec);

inline constexpr std::uint64_t kDefaultWeylCap = 1'000'000;

/// Enumerates the full Weyl group in a fixed deterministic order (products of
/// permutations for SU factors and signed permutations for Sp factors).
/// Throws if the order exceeds `cap`.
void for_each_weyl_element(const RootDatum& datum,
                           const std::function<void(const WeylElement&)>& fn,
                           std::uint64_t cap = kDefaultWeylCap);

std::vector<WeylElement> weyl_elements(const RootDatum& datum, std::uint64_t cap = kDefaultWeylCap);

Sublattice act_on_lattice(const WeylElement& w, const Sublattice& k);
TorusSubgroup act_on_subgroup(const WeylElement& w, const TorusSubgroup& s);
LaurentPoly act_on_character(const WeylElement& w, const LaurentPoly& chi);

/// Restrictions of the fundamental characters to a subtorus, in generator order.
std::vector<LaurentPoly> fundamental_restrictions(const RootDatum& datum, const TorusSubgroup& s);

}  // namespace biqtor
