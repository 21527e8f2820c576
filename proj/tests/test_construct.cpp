#include <doctest.h>

#include <algorithm>

#include "csap/classes.hpp"
#include "csap/construct.hpp"

using namespace csap;

TEST_CASE("atoms") {
  CHECK(conjugacy_classes(symmetric_group(6)).cs_star_set ==
        std::set<long>{15, 40, 45, 90, 120, 144});
  CHECK(conjugacy_classes(cyclic_group(5)).cs_set == std::set<long>{1});
  CHECK(cyclic_group(5).order() == 5);

  FiniteGroup Q8 = quaternion_group(8);
  CHECK(Q8.order() == 8);
  int involutions = 0;
  for (int i = 0; i < Q8.order(); ++i)
    if (Q8.element_order(i) == 2) ++involutions;
  CHECK(involutions == 1);

  CHECK(dihedral_group(5).order() == 10);
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(4).order() == 12);
  CHECK(elem_abelian_group(2, 3).order() == 8);
  CHECK(conjugacy_classes(elem_abelian_group(3, 2)).cs_star_set.empty());
  CHECK_THROWS(quaternion_group(12));
  CHECK_THROWS(quaternion_group(4));
}

TEST_CASE("direct products") {
  FiniteGroup S3xC2 = direct_product(symmetric_group(3), cyclic_group(2));
  CHECK(S3xC2.order() == 12);
  CHECK(conjugacy_classes(S3xC2).cs_star_set == std::set<long>{2, 3});

  FiniteGroup G = family_gn(2);
  CHECK(signature(direct_product(G, FiniteGroup::trivial())) == signature(G));

  FiniteGroup C2xC3 = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(C2xC3.order() == 6);
  CHECK(conjugacy_classes(C2xC3).cs_star_set.empty());

  // cs(G x C) = cs(G) for abelian C
  for (long c : {2L, 3L, 6L})
    CHECK(conjugacy_classes(direct_product(G, cyclic_group(c))).cs_set ==
          conjugacy_classes(G).cs_set);

  CHECK(signature(direct_product(symmetric_group(3), cyclic_group(2))) ==
        signature(direct_product(cyclic_group(2), symmetric_group(3))));
}

TEST_CASE("semidirect_cyclic") {
  FiniteGroup F21 = semidirect_cyclic(7, 3, 2);
  CHECK(F21.order() == 21);
  CHECK(conjugacy_classes(F21).cs_set == std::set<long>{1, 3, 7});

  FiniteGroup F20 = semidirect_cyclic(5, 4, 2);
  CHECK(F20.order() == 20);
  CHECK(conjugacy_classes(F20).cs_set == std::set<long>{1, 4, 5});

  CHECK(signature(semidirect_cyclic(4, 6, 1)) ==
        signature(direct_product(cyclic_group(4), cyclic_group(6))));

  CHECK_THROWS_WITH_AS(semidirect_cyclic(7, 3, 3),
                       doctest::Contains("invalid action exponent"),
                       std::exception);
  CHECK_THROWS_WITH_AS(semidirect_cyclic(8, 2, 2),
                       doctest::Contains("invalid action exponent"),
                       std::exception);
}

TEST_CASE("semidirect_matrix") {
  FiniteGroup A4 = semidirect_matrix(2, 2, 3, {{0, 1}, {1, 1}});
  CHECK(A4.order() == 12);
  CHECK(signature(A4) == signature(alternating_group(4)));
  ClassData cd = conjugacy_classes(A4);
  CHECK(cd.cs_set == std::set<long>{1, 3, 4});
  CHECK(cd.multiplicities.at(4) == 2);

  FiniteGroup F56 = semidirect_matrix(2, 3, 7, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});
  CHECK(F56.order() == 56);
  CHECK(conjugacy_classes(F56).cs_set == std::set<long>{1, 7, 8});

  CHECK(signature(semidirect_matrix(2, 2, 3, {{1, 0}, {0, 1}})) ==
        signature(direct_product(elem_abelian_group(2, 2), cyclic_group(3))));

  CHECK_THROWS(semidirect_matrix(2, 2, 2, {{0, 1}, {1, 1}}));  // M^2 != I
}

TEST_CASE("wreath_c2_ck") {
  FiniteGroup W3 = wreath_c2_ck(3);
  CHECK(W3.order() == 24);
  std::set<long> cs3 = conjugacy_classes(W3).cs_set;
  CHECK(cs3.count(3) == 1);
  CHECK(cs3.count(4) == 1);

  CHECK(signature(wreath_c2_ck(2)) == signature(dihedral_group(4)));

  FiniteGroup W5 = wreath_c2_ck(5);
  CHECK(W5.order() == 160);
  std::set<long> cs5 = conjugacy_classes(W5).cs_set;
  CHECK(cs5.count(5) == 1);
  CHECK(cs5.count(16) == 1);
}

TEST_CASE("family_gn") {
  CHECK(signature(family_gn(1)) == signature(symmetric_group(3)));

  FiniteGroup G3 = family_gn(3);
  CHECK(G3.order() == 24);
  CHECK(conjugacy_classes(G3).cs_set == std::set<long>{1, 2, 3});
  CHECK(center(G3).order() == 4);

  FiniteGroup G2 = family_gn(2);
  CHECK(G2.order() == 12);
  int a = G2.generator_indices()[0];
  Subgroup Z = center(G2);
  CHECK(Z.order() == 2);
  CHECK(Z.contains(G2.mul(a, a)));

  for (int n = 1; n <= 5; ++n) CHECK(family_gn(n).order() == 3 * (1L << n));
}

TEST_CASE("family_246 construction") {
  FiniteGroup D4 = dihedral_group(4);
  Family246 f = family_246(D4, {1});  // s inverts, r does not
  CHECK(f.G.order() == 24);
  CHECK(f.A().order() == 8);
  CHECK(f.B().order() == 3);
  CHECK(f.C_A_B().order() == 4);
  CHECK(f.Z_A().order() == 2);
  CHECK(is_normal(f.G, f.B()));
  // Z(A) < C_A(B) < A
  for (int z : f.za_members)
    CHECK(std::binary_search(f.cab_members.begin(), f.cab_members.end(), z));
  // the corrected spectrum for abelian C_A(B)
  CHECK(conjugacy_classes(f.G).cs_star_set == std::set<long>{2, 6});

  Family246 f2 = family_246(D4, {0, 1});
  CHECK(f2.G.order() == 24);
  CHECK(f2.C_A_B().order() == 4);

  // abelian A: constructor succeeds, conditions are the checker's concern
  Family246 fc4 = family_246(cyclic_group(4), {0});
  CHECK(fc4.G.order() == 12);
  CHECK(fc4.C_A_B().order() == 2);

  CHECK_THROWS_WITH_AS(family_246(D4, {}),
                       doctest::Contains("action must be nontrivial"),
                       std::exception);
  // r has order 4: r -> -1 forces phi(r^2) = 1, consistent; but an
  // element of odd order cannot invert
  CHECK_THROWS_WITH_AS(family_246(cyclic_group(3), {0}),
                       doctest::Contains("2-group"), std::exception);
}

TEST_CASE("family_246 inconsistent action") {
  // V4 with the redundant generating set {a, b, ab}: inverting {a} alone
  // forces phi(ab) = -1, clashing with the +1 assigned to the third
  // generator.
  FiniteGroup V4 = FiniteGroup::enumerate_closure(
      {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2}),
       Permutation({1, 0, 3, 2})});
  CHECK_THROWS_WITH_AS(family_246(V4, {0}),
                       doctest::Contains("inconsistent action"),
                       std::exception);
  CHECK_NOTHROW(family_246(V4, {0, 2}));  // phi(ab) = -1 declared: consistent
  CHECK_NOTHROW(family_246(cyclic_group(4), {0}));
  CHECK_NOTHROW(family_246(quaternion_group(8), {0, 1}));
}

TEST_CASE("central products") {
  FiniteGroup D4 = dihedral_group(4), Q8 = quaternion_group(8);
  FiniteGroup E1 = central_product_c2(D4, D4);
  FiniteGroup E2 = central_product_c2(D4, Q8);
  FiniteGroup E3 = central_product_c2(Q8, Q8);
  for (const FiniteGroup* E : {&E1, &E2, &E3}) {
    CHECK(E->order() == 32);
    CHECK(center(*E).order() == 2);
    CHECK(derived_subgroup(*E).order() == 2);
  }
  // D4 o D4 and Q8 o Q8 are isomorphic (plus type); D4 o Q8 is minus type
  CHECK(signature(E1) == signature(E3));
  CHECK(signature(E1) != signature(E2));

  CHECK_THROWS_WITH_AS(central_product_c2(D4, cyclic_group(3)),
                       doctest::Contains("central"), std::exception);
}

TEST_CASE("extraspecial family_246 bases give cs* = {2,4,6}") {
  FiniteGroup E = central_product_c2(dihedral_group(4), quaternion_group(8));
  Family246 f = family_246(E, {0, 2});
  CHECK(f.G.order() == 96);
  CHECK(conjugacy_classes(f.G).cs_star_set == std::set<long>{2, 4, 6});
}
