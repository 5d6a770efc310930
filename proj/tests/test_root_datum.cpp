#include <algorithm>
#include <doctest.h>

#include "biqtor/root_datum.hpp"
#include "support.hpp"

using namespace biqtor;

namespace {

Sublattice span(std::size_t r, std::initializer_list<std::initializer_list<long>> rows) {
  return Sublattice::from_generators(r, IntMatrix(rows));
}

LaurentPoly sym(std::size_t rank, std::initializer_list<std::initializer_list<long>> exps) {
  LaurentPoly p(rank);
  for (const auto& e : exps) p.add_term(LaurentPoly::Exponents(e.begin(), e.end()), 1);
  return p;
}

}  // namespace

TEST_CASE("SU(2) root datum") {
  RootDatum d = build_root_datum(GroupSpec{{su(2)}});
  CHECK(d.rank == 1);
  CHECK(d.weyl_order == 2);
  REQUIRE(d.fundamental_chars.size() == 1);
  CHECK(d.fundamental_chars[0] == sym(1, {{1}, {-1}}));  // x + x^-1
  CHECK(d.root_lattice == span(1, {{2}}));
  CHECK_FALSE(d.laurent_flags[0]);

  auto elems = weyl_elements(d);
  REQUIRE(elems.size() == 2);
  CHECK(elems[0].matrix == IntMatrix{{1}});
  CHECK(elems[1].matrix == IntMatrix{{-1}});
}

TEST_CASE("SU(3) root datum") {
  RootDatum d = build_root_datum(GroupSpec{{su(3)}});
  CHECK(d.rank == 2);
  CHECK(d.weyl_order == 6);
  REQUIRE(d.fundamental_chars.size() == 2);
  CHECK(d.fundamental_chars[0] == sym(2, {{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(d.fundamental_chars[1] == sym(2, {{-1, 0}, {0, -1}, {1, 1}}));
  CHECK(d.root_lattice == span(2, {{1, -1}, {2, 1}}));
  CHECK(quotient_invariants(2, d.root_lattice).torsion == std::vector<Int>{3});  // centre Z/3
}

TEST_CASE("SU(3) Weyl transpositions act as in the eliminated coordinates") {
  RootDatum d = build_root_datum(GroupSpec{{su(3)}});
  auto elems = weyl_elements(d);
  REQUIRE(elems.size() == 6);

  // x1 <-> x2 swaps the coordinates
  bool found_swap = false, found_13 = false;
  for (const auto& w : elems) {
    if (w.matrix == IntMatrix{{0, 1}, {1, 0}}) found_swap = true;
    if (w.matrix == IntMatrix{{-1, 0}, {-1, 1}}) found_13 = true;  // (1,0) -> (-1,-1), (0,1) -> (0,1)
  }
  CHECK(found_swap);
  CHECK(found_13);
}

TEST_CASE("torus factor has trivial Weyl group and invertible generators") {
  RootDatum d = build_root_datum(GroupSpec{{torus(1)}});
  CHECK(d.rank == 1);
  CHECK(d.weyl_order == 1);
  CHECK(d.fundamental_chars[0] == LaurentPoly::variable(1, 0));
  CHECK(d.laurent_flags[0]);
  CHECK(d.root_lattice.is_zero());
}

TEST_CASE("Sp(n) root data") {
  RootDatum sp1 = build_root_datum(GroupSpec{{sp(1)}});
  CHECK(sp1.rank == 1);
  CHECK(sp1.weyl_order == 2);
  CHECK(sp1.fundamental_chars[0] == sym(1, {{1}, {-1}}));
  CHECK(sp1.root_lattice == span(1, {{2}}));

  RootDatum sp2 = build_root_datum(GroupSpec{{sp(2)}});
  CHECK(sp2.rank == 2);
  CHECK(sp2.weyl_order == 8);
  // e1 of {x1, x1^-1, x2, x2^-1} and e2 of the same
  CHECK(sp2.fundamental_chars[0] == sym(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  LaurentPoly e2 = sym(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  e2.add_term({0, 0}, 2);  // x1 x1^-1 + x2 x2^-1
  CHECK(sp2.fundamental_chars[1] == e2);
  CHECK(quotient_invariants(2, sp2.root_lattice).torsion == std::vector<Int>{2});  // centre Z/2
}

TEST_CASE("Weyl group is closed, has the right order, and fixes the structure") {
  for (const GroupSpec& spec :
       {GroupSpec{{su(2)}}, GroupSpec{{su(3)}}, GroupSpec{{sp(1)}}, GroupSpec{{sp(2)}},
        GroupSpec{{su(2), torus(1)}}, GroupSpec{{su(2), su(2)}}}) {
    RootDatum d = build_root_datum(spec);
    auto elems = weyl_elements(d);
    REQUIRE(Int(static_cast<long>(elems.size())) == d.weyl_order);

    // distinct unimodular matrices
    for (std::size_t i = 0; i < elems.size(); ++i) {
      CHECK(elems[i].matrix.is_unimodular());
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        CHECK_FALSE(elems[i].matrix == elems[j].matrix);
    }

    // closed under multiplication
    auto member = [&](const IntMatrix& m) {
      return std::any_of(elems.begin(), elems.end(),
                         [&](const WeylElement& w) { return w.matrix == m; });
    };
    for (const auto& a : elems)
      for (const auto& b : elems) CHECK(member(a.matrix * b.matrix));

    // every element fixes every fundamental character and the root lattice
    for (const auto& w : elems) {
      for (const auto& chi : d.fundamental_chars) CHECK(act_on_character(w, chi) == chi);
      CHECK(act_on_lattice(w, d.root_lattice) == d.root_lattice);
    }
  }
}

TEST_CASE("Weyl action on subgroups matches the matrix action on k") {
  RootDatum d = build_root_datum(GroupSpec{{su(3)}});
  TorusSubgroup s{2, span(2, {{1, 1}})};

  WeylElement swap{IntMatrix{{0, 1}, {1, 0}}};
  CHECK(act_on_subgroup(swap, s).k == span(2, {{1, 1}}));  // fixed

  WeylElement w13{IntMatrix{{-1, 0}, {-1, 1}}};
  CHECK(act_on_subgroup(w13, s).k == span(2, {{1, 0}}));

  WeylElement id{IntMatrix::identity(2)};
  CHECK(act_on_subgroup(id, s) == s);
}

TEST_CASE("fundamental restrictions") {
  RootDatum su2 = build_root_datum(GroupSpec{{su(2)}});
  auto full = fundamental_restrictions(su2, TorusSubgroup::full_torus(1));
  REQUIRE(full.size() == 1);
  CHECK(full[0] == sym(1, {{1}, {-1}}));

  auto trivial = fundamental_restrictions(su2, TorusSubgroup::trivial(1));
  CHECK(trivial[0] == LaurentPoly::constant(0, 2));

  RootDatum su3 = build_root_datum(GroupSpec{{su(3)}});
  TorusSubgroup s{2, span(2, {{1, 1}})};
  auto res = fundamental_restrictions(su3, s);
  // z + z^-1 + 1 in the canonical rank-1 coordinate
  LaurentPoly expect = sym(1, {{1}, {-1}});
  expect.add_term({0}, 1);
  CHECK(res[0] == expect);
  CHECK(res[1] == expect);  // the dual restricts to the same symmetric sum
}

TEST_CASE("invalid factors are rejected") {
  CHECK_THROWS_AS(build_root_datum(GroupSpec{{su(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(GroupSpec{{sp(0)}}), std::invalid_argument);
}
