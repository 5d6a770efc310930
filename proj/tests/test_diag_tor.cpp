#include <doctest.h>

#include "biqtor/diag_tor.hpp"
#include "biqtor/toral_tor.hpp"
#include "support.hpp"

using namespace biqtor;

namespace {

Sublattice span(std::size_t r, std::initializer_list<std::initializer_list<long>> rows) {
  return Sublattice::from_generators(r, IntMatrix(rows));
}

LaurentPoly lp(std::size_t rank, std::initializer_list<std::pair<std::vector<std::int64_t>, long>> terms) {
  LaurentPoly p(rank);
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

const RootDatum& su2() {
  static RootDatum d = build_root_datum(GroupSpec{{su(2)}});
  return d;
}

const RootDatum& su3() {
  static RootDatum d = build_root_datum(GroupSpec{{su(3)}});
  return d;
}

// substitute the second block of variables equal to the first: the character
// side of the multiplication map R(S) x R(S) -> R(S)
LaurentPoly substitute_diagonal(const LaurentPoly& f, std::size_t half) {
  return f.map_exponents(half, [&](const LaurentPoly::Exponents& e) {
    LaurentPoly::Exponents out(half);
    for (std::size_t i = 0; i < half; ++i) out[i] = e[i] + e[half + i];
    return out;
  });
}

}  // namespace

TEST_CASE("diagonal generators on the worked examples") {
  // SU(2), S1 = T, S2 = 1: [x + x^-1 - 2]
  auto z = diagonal_generators(su2(), TorusSubgroup::full_torus(1), TorusSubgroup::trivial(1));
  REQUIRE(z.size() == 1);
  CHECK(z[0] == lp(1, {{{1}, 1}, {{-1}, 1}, {{0}, -2}}));

  // SU(2), S1 = S2 = T: [x + x^-1 - y - y^-1]
  z = diagonal_generators(su2(), TorusSubgroup::full_torus(1), TorusSubgroup::full_torus(1));
  CHECK(z[0] == lp(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, -1}, {{0, -1}, -1}}));

  // circle ambient, both trivial: [0]
  RootDatum circle = build_root_datum(GroupSpec{{torus(1)}});
  z = diagonal_generators(circle, TorusSubgroup::trivial(1), TorusSubgroup::trivial(1));
  REQUIRE(z.size() == 1);
  CHECK(z[0].is_zero());
}

TEST_CASE("diagonal generators lie in the kernel of the multiplication map") {
  for (const GroupSpec& spec : {GroupSpec{{su(2)}}, GroupSpec{{su(3)}}, GroupSpec{{sp(2)}}}) {
    RootDatum d = build_root_datum(spec);
    TorusSubgroup t = TorusSubgroup::full_torus(d.rank);
    for (const auto& z : diagonal_generators(d, t, t))
      CHECK(substitute_diagonal(z, d.rank).is_zero());
  }
}

TEST_CASE("two-sphere: Tor_0 has dimension 2, Tor_1 vanishes") {
  TorResult tor = tor_good_group(su2(), TorusSubgroup::full_torus(1), TorusSubgroup::trivial(1),
                                 FieldTag::rational());
  REQUIRE(tor.degrees.size() == 2);
  CHECK(tor.degrees[0].finite_dim == Int(2));
  CHECK(tor.degrees[1].is_zero);
  CHECK_FALSE(tor.diagnostic_only);
}

TEST_CASE("Steinberg freeness: maximal torus against itself") {
  // SU(2): Tor_0 infinite-dimensional, higher Tor zero
  TorResult tor = tor_good_group(su2(), TorusSubgroup::full_torus(1),
                                 TorusSubgroup::full_torus(1), FieldTag::rational());
  CHECK_FALSE(tor.degrees[0].is_zero);
  CHECK_FALSE(tor.degrees[0].finite_dim.has_value());
  CHECK(tor.degrees[1].is_zero);

  // SU(3): same shape one rank up
  TorResult tor3 = tor_good_group(su3(), TorusSubgroup::full_torus(2),
                                  TorusSubgroup::full_torus(2), FieldTag::rational());
  CHECK_FALSE(tor3.degrees[0].is_zero);
  CHECK_FALSE(tor3.degrees[0].finite_dim.has_value());
  CHECK(tor3.degrees[1].is_zero);
  CHECK(tor3.degrees[2].is_zero);
}

TEST_CASE("circle ambient: Koszul on the zero generator matches the exact answer") {
  RootDatum circle = build_root_datum(GroupSpec{{torus(1)}});
  TorResult tor = tor_good_group(circle, TorusSubgroup::trivial(1), TorusSubgroup::trivial(1),
                                 FieldTag::rational());
  CHECK(tor.degrees[0].finite_dim == Int(1));
  CHECK(tor.degrees[1].finite_dim == Int(1));
}

TEST_CASE("verify_theorem on the trivial-versus-coroot-circle pair in SU(3)") {
  TorusSubgroup trivial = TorusSubgroup::trivial(2);
  TorusSubgroup circle11{2, span(2, {{1, 1}})};
  VerificationReport rep = verify_theorem(su3(), trivial, circle11);
  CHECK(rep.classification.verdict == BiquotientVerdict::Strict);
  CHECK(rep.bound == 1);
  CHECK(rep.theorem_consistent);
  CHECK_FALSE(rep.inconclusive.has_value());
  for (std::size_t d : rep.observed_nonzero_degrees) CHECK(d <= 1);

  // the intersecting pair: no theorem claim, consistency vacuous
  TorusSubgroup circle12{2, span(2, {{1, 2}})};
  VerificationReport rep2 = verify_theorem(su3(), circle12, circle11);
  CHECK(rep2.classification.verdict == BiquotientVerdict::Neither);
  CHECK(rep2.theorem_consistent);
}

TEST_CASE("verify_theorem cross-checks the toral closed form on torus ambients") {
  SplitMix64 rng(79);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.next_in(1, 2));
    RootDatum d = build_root_datum(GroupSpec{{torus(r)}});
    TorusSubgroup s1{r, testing::random_summand(rng, r, 3)};
    TorusSubgroup s2{r, testing::random_summand(rng, r, 3)};
    VerificationReport rep = verify_theorem(d, s1, s2);
    CHECK(rep.cross_checked);
    REQUIRE(rep.exact.has_value());
    CHECK(rep.theorem_consistent);
  }
}

TEST_CASE("degree support: nothing survives beyond rank G") {
  TorResult tor = tor_good_group(su3(), TorusSubgroup::trivial(2),
                                 TorusSubgroup{2, span(2, {{1, 1}})}, FieldTag::rational());
  CHECK(tor.degrees.size() == su3().rank + 1);
  for (std::size_t d : tor.nonzero_degrees()) CHECK(d <= su3().rank);
}

TEST_CASE("projective dimension bound against the maximal torus") {
  // S2 = T: Tor_i = 0 for i > rank G - rank S1
  for (const GroupSpec& spec : {GroupSpec{{su(2)}}, GroupSpec{{su(3)}}}) {
    RootDatum d = build_root_datum(spec);
    TorusSubgroup t = TorusSubgroup::full_torus(d.rank);
    SplitMix64 rng(83);
    for (int trial = 0; trial < 6; ++trial) {
      TorusSubgroup s1{d.rank, testing::random_summand(rng, d.rank, 2)};
      TorResult tor = tor_good_group(d, s1, t, FieldTag::rational());
      for (std::size_t deg : tor.nonzero_degrees())
        CHECK(deg <= d.rank - s1.rank());
    }
  }
}

TEST_CASE("K-theory of the two-sphere") {
  KTheoryReport k = ktheory_biquotient(su2(), TorusSubgroup::full_torus(1),
                                       TorusSubgroup::trivial(1));
  CHECK(k.maximal_rank);
  CHECK(k.k0.q_dim == Int(2));
  CHECK(k.k1.is_zero());
}

TEST_CASE("K-theory of the circle is exact through the toral path") {
  RootDatum circle = build_root_datum(GroupSpec{{torus(1)}});
  KTheoryReport k = ktheory_biquotient(circle, TorusSubgroup::trivial(1),
                                       TorusSubgroup::trivial(1));
  CHECK(k.k0.z_rank == Int(1));
  CHECK(k.k1.z_rank == Int(1));
  CHECK_FALSE(k.maximal_rank);
}

TEST_CASE("K-theory of the three-sphere") {
  KTheoryReport k = ktheory_biquotient(su2(), TorusSubgroup::trivial(1),
                                       TorusSubgroup::trivial(1));
  CHECK(k.rank_inequality_held);
  CHECK_FALSE(k.maximal_rank);
  CHECK(k.k0.q_dim == Int(1));
  CHECK(k.k1.q_dim == Int(1));
}

TEST_CASE("K-theory hypothesis violations carry the failed hypothesis name") {
  TorusSubgroup circle11{2, span(2, {{1, 1}})};
  TorusSubgroup circle12{2, span(2, {{1, 2}})};
  CHECK_THROWS_WITH_AS(ktheory_biquotient(su3(), circle12, circle11),
                       doctest::Contains("strict biquotient condition"), HypothesisError);

  RootDatum t3 = build_root_datum(GroupSpec{{torus(3)}});
  CHECK_THROWS_WITH_AS(
      ktheory_biquotient(t3, TorusSubgroup::trivial(3), TorusSubgroup::trivial(3)),
      doctest::Contains("rank inequality"), HypothesisError);
}

TEST_CASE("mod-p diagnostics run and are flagged") {
  TorResult tor = tor_good_group(su2(), TorusSubgroup::full_torus(1), TorusSubgroup::trivial(1),
                                 FieldTag::prime(5));
  CHECK(tor.diagnostic_only);
  CHECK(tor.degrees[0].finite_dim == Int(2));
  CHECK(tor.degrees[1].is_zero);
}

TEST_CASE("a genuinely lax pair in SU(2) x T^1 meets the bound with equality") {
  // S1 = SU(2)-torus x 1, S2 = closure of t -> (t, t^2): every conjugate
  // intersection is the central Z/2 generated by (-1, 1)
  RootDatum d = build_root_datum(GroupSpec{{su(2), torus(1)}});
  TorusSubgroup s1{2, span(2, {{0, 1}})};
  TorusSubgroup s2 = subgroup_from_cocharacters(2, IntMatrix{{1, 2}});

  PairClassification cls = classify_pair(d, s1, s2);
  CHECK(cls.verdict == BiquotientVerdict::Lax);
  REQUIRE(cls.witness_intersection.has_value());
  CHECK(cls.witness_intersection->torsion == std::vector<Int>{2});

  VerificationReport rep = verify_theorem(d, s1, s2);
  CHECK(rep.bound == 0);
  CHECK(rep.theorem_consistent);
  // two branches z = +-1, each a length-2 local ring
  CHECK(rep.tor.degrees[0].finite_dim == Int(4));
  CHECK(rep.tor.degrees[1].is_zero);
  CHECK(rep.tor.degrees[2].is_zero);
}

TEST_CASE("Tor outputs are invariant under unimodular changes of character coordinates") {
  // the canonical splitting is one admissible choice; any two differ by a
  // unimodular change, so ranks and dimensions must not depend on it
  SplitMix64 rng(91);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.next_in(1, 3));
    RootDatum d = build_root_datum(GroupSpec{{torus(r)}});
    TorusSubgroup s1{r, testing::random_summand(rng, r, 2)};
    TorusSubgroup s2{r, testing::random_summand(rng, r, 2)};

    // random unimodular transform from elementary row operations
    IntMatrix u = IntMatrix::identity(r);
    for (int step = 0; step < 6; ++step) {
      const auto i = static_cast<std::size_t>(rng.next_in(0, static_cast<long>(r) - 1));
      const auto j = static_cast<std::size_t>(rng.next_in(0, static_cast<long>(r) - 1));
      if (i == j) {
        if (rng.next_in(0, 1)) u.negate_row(i);
      } else {
        u.add_row_multiple(i, j, Int(rng.next_in(-2, 2)));
      }
    }
    REQUIRE(u.is_unimodular());
    TorusSubgroup t1{r, Sublattice::from_generators(r, s1.k.basis() * u)};
    TorusSubgroup t2{r, Sublattice::from_generators(r, s2.k.basis() * u)};

    TorProfile base = toral_tor(r, s1, s2);
    TorProfile moved = toral_tor(r, t1, t2);
    CHECK(base.rho == moved.rho);
    CHECK(base.coefficient_group == moved.coefficient_group);

    TorResult qa = tor_good_group(d, s1, s2, FieldTag::rational());
    TorResult qb = tor_good_group(d, t1, t2, FieldTag::rational());
    for (std::size_t i = 0; i < qa.degrees.size(); ++i) {
      CHECK(qa.degrees[i].is_zero == qb.degrees[i].is_zero);
      CHECK(qa.degrees[i].finite_dim == qb.degrees[i].finite_dim);
    }
  }
}

TEST_CASE("Tor dimensions are invariant under Weyl conjugation of an input") {
  auto elems = weyl_elements(su3());
  TorusSubgroup trivial = TorusSubgroup::trivial(2);
  TorusSubgroup circle{2, span(2, {{1, 1}})};
  TorResult base = tor_good_group(su3(), trivial, circle, FieldTag::rational());
  for (const auto& w : elems) {
    TorResult moved = tor_good_group(su3(), trivial, act_on_subgroup(w, circle), FieldTag::rational());
    for (std::size_t i = 0; i < base.degrees.size(); ++i) {
      CHECK(base.degrees[i].is_zero == moved.degrees[i].is_zero);
      CHECK(base.degrees[i].finite_dim == moved.degrees[i].finite_dim);
    }
  }
}

TEST_CASE("ambient-torus agreement on a randomized suite") {
  SplitMix64 rng(89);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.next_in(1, 3));
    RootDatum d = build_root_datum(GroupSpec{{torus(r)}});
    TorusSubgroup s1{r, testing::random_summand(rng, r, 3)};
    TorusSubgroup s2{r, testing::random_summand(rng, r, 3)};
    TorProfile exact = toral_tor(r, s1, s2);
    TorResult computed = tor_good_group(d, s1, s2, FieldTag::rational());
    for (const auto& deg : computed.degrees) {
      CHECK(deg.is_zero == exact.is_zero(deg.degree));
      auto expected_dim = exact.q_dim(deg.degree);
      CHECK(expected_dim.has_value() == deg.finite_dim.has_value());
      if (expected_dim && deg.finite_dim) CHECK(*expected_dim == *deg.finite_dim);
    }
  }
}
