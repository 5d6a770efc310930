#include <doctest.h>

#include "biqtor/biquotient.hpp"
#include "biqtor/laurent.hpp"

using namespace biqtor;

namespace {

LaurentPoly random_poly(SplitMix64& rng, std::size_t rank) {
  LaurentPoly p(rank);
  const int terms = static_cast<int>(rng.next_in(0, 4));
  for (int t = 0; t < terms; ++t) {
    LaurentPoly::Exponents e(rank);
    for (auto& v : e) v = rng.next_in(-3, 3);
    p.add_term(e, Rational(rng.next_in(-5, 5)));
  }
  return p;
}

}  // namespace

TEST_CASE("terms combine and zeros vanish") {
  LaurentPoly p(1);
  p.add_term({1}, 2);
  p.add_term({1}, -2);
  CHECK(p.is_zero());

  LaurentPoly q = LaurentPoly::variable(1, 0) + LaurentPoly::monomial(1, {-1});
  CHECK(q.terms().size() == 2);
  CHECK(q.to_string() == "x1^-1 + x1");
}

TEST_CASE("ring axioms on random polynomials") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rank = static_cast<std::size_t>(rng.next_in(0, 3));
    LaurentPoly a = random_poly(rng, rank);
    LaurentPoly b = random_poly(rng, rank);
    LaurentPoly c = random_poly(rng, rank);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly::zero(rank));
    CHECK(a * LaurentPoly::constant(rank, 1) == a);
  }
}

TEST_CASE("matrix substitution is multiplicative") {
  IntMatrix m{{0, 1}, {1, 0}};  // swap variables
  LaurentPoly p = LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 0) +
                  LaurentPoly::monomial(2, {0, -1});
  LaurentPoly q = p.apply_matrix(m);
  CHECK(q == LaurentPoly::variable(2, 1) * LaurentPoly::variable(2, 1) +
                 LaurentPoly::monomial(2, {-1, 0}));

  SplitMix64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly a = random_poly(rng, 2);
    LaurentPoly b = random_poly(rng, 2);
    CHECK((a * b).apply_matrix(m) == a.apply_matrix(m) * b.apply_matrix(m));
  }
}

TEST_CASE("embedding into a larger variable set") {
  LaurentPoly p = LaurentPoly::variable(1, 0) + LaurentPoly::constant(1, 3);
  LaurentPoly q = p.embed(3, 1);
  CHECK(q == LaurentPoly::variable(3, 1) + LaurentPoly::constant(3, 3));
  CHECK_THROWS_AS(p.embed(1, 1), std::invalid_argument);
}
