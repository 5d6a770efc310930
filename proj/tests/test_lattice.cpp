#include <doctest.h>

#include "biqtor/lattice.hpp"
#include "support.hpp"

using namespace biqtor;

namespace {

Sublattice span(std::size_t r, std::initializer_list<std::initializer_list<long>> rows) {
  return Sublattice::from_generators(r, IntMatrix(rows));
}

}  // namespace

TEST_CASE("lattice sum examples") {
  CHECK(lattice_sum(span(2, {{2, 0}}), span(2, {{0, 3}})) == span(2, {{2, 0}, {0, 3}}));

  Sublattice k = span(2, {{1, 2}});
  CHECK(lattice_sum(k, k) == k);

  Sublattice s = lattice_sum(span(2, {{1, 1}}), span(2, {{1, -1}}));
  CHECK(s.basis() == IntMatrix{{1, 1}, {0, 2}});
  CHECK(quotient_invariants(2, s).torsion == std::vector<Int>{2});  // index-2 sublattice
}

TEST_CASE("lattice intersection examples") {
  CHECK(lattice_intersect(span(2, {{1, 1}}), span(2, {{1, -1}})).is_zero());

  Sublattice k = span(2, {{1, 2}});
  CHECK(lattice_intersect(k, k) == k);

  CHECK(lattice_intersect(span(2, {{1, 0}}), span(2, {{2, 0}, {0, 1}})) == span(2, {{2, 0}}));
}

TEST_CASE("quotient invariants") {
  AbelianInvariants g = quotient_invariants(2, Sublattice::zero(2));
  CHECK(g.free_rank == 2);
  CHECK(g.torsion.empty());

  g = quotient_invariants(2, span(2, {{2, 0}, {0, 3}}));
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<Int>{6});

  g = quotient_invariants(1, Sublattice::full(1));
  CHECK(g.is_trivial());
}

TEST_CASE("direct summand detection") {
  CHECK(is_direct_summand(span(2, {{1, 1}})));
  CHECK_FALSE(is_direct_summand(span(2, {{2, 0}})));
  CHECK(is_direct_summand(Sublattice::zero(3)));
}

TEST_CASE("saturation yields the smallest summand") {
  Sublattice k = span(2, {{2, 4}});
  Sublattice s = saturate(k);
  CHECK(s == span(2, {{1, 2}}));
  CHECK(is_direct_summand(s));
  CHECK(s.contains(k));

  CHECK(saturate(Sublattice::zero(2)).is_zero());
  CHECK(saturate(Sublattice::full(3)) == Sublattice::full(3));
}

TEST_CASE("membership via the Hermite basis") {
  Sublattice k = span(3, {{1, 0, 2}, {0, 3, 1}});
  CHECK(k.contains({1, 0, 2}));
  CHECK(k.contains({1, 3, 3}));
  CHECK(k.contains({0, 0, 0}));
  CHECK_FALSE(k.contains({0, 1, 0}));
  CHECK_FALSE(k.contains({0, 0, 1}));
}

TEST_CASE("rank formula rank(K1) + rank(K2) = rank(sum) + rank(intersection)") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.next_in(1, 4));
    Sublattice k1 = testing::random_lattice(rng, r, 4);
    Sublattice k2 = testing::random_lattice(rng, r, 4);
    Sublattice s = lattice_sum(k1, k2);
    Sublattice i = lattice_intersect(k1, k2);
    CHECK(k1.rank() + k2.rank() == s.rank() + i.rank());
    CHECK(s.contains(k1));
    CHECK(s.contains(k2));
    CHECK(k1.contains(i));
    CHECK(k2.contains(i));
    CHECK(quotient_invariants(r, k1).free_rank == r - k1.rank());
  }
}

TEST_CASE("sum and intersection are commutative, associative, monotone") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.next_in(1, 3));
    Sublattice a = testing::random_lattice(rng, r, 3);
    Sublattice b = testing::random_lattice(rng, r, 3);
    Sublattice c = testing::random_lattice(rng, r, 3);
    CHECK(lattice_sum(a, b) == lattice_sum(b, a));
    CHECK(lattice_intersect(a, b) == lattice_intersect(b, a));
    CHECK(lattice_sum(lattice_sum(a, b), c) == lattice_sum(a, lattice_sum(b, c)));
    CHECK(lattice_intersect(lattice_intersect(a, b), c) ==
          lattice_intersect(a, lattice_intersect(b, c)));
    // monotonicity with respect to inclusion
    Sublattice ab = lattice_sum(a, b);
    CHECK(lattice_sum(a, c).rank() <= lattice_sum(ab, c).rank());
    CHECK(lattice_sum(ab, c).contains(lattice_sum(a, c)));
    CHECK(lattice_intersect(ab, c).contains(lattice_intersect(a, c)));
  }
}

TEST_CASE("ambient rank mismatch is rejected") {
  CHECK_THROWS_AS(lattice_sum(Sublattice::zero(2), Sublattice::zero(3)), std::invalid_argument);
  CHECK_THROWS_AS(lattice_intersect(Sublattice::full(1), Sublattice::full(2)),
                  std::invalid_argument);
}
