#include <doctest.h>

#include <numeric>

#include "csap/construct.hpp"
#include "csap/spectra.hpp"

using namespace csap;

TEST_CASE("detect_ap") {
  APReport r = detect_ap({1, 2, 3});
  CHECK(r.is_ap);
  CHECK(r.a0 == 1);
  CHECK(r.d == 1);
  CHECK(r.r == 2);
  CHECK(r.delta == 1);
  CHECK(r.primitive);

  APReport s = detect_ap({2, 4, 6});
  CHECK(s.is_ap);
  CHECK(s.a0 == 2);
  CHECK(s.d == 2);
  CHECK(s.r == 2);
  CHECK(s.delta == 2);
  CHECK(!s.primitive);

  CHECK(!detect_ap({1, 3, 7}).is_ap);

  APReport single = detect_ap({5});
  CHECK(single.is_ap);
  CHECK(single.r == 0);
  CHECK(single.d == 0);
  CHECK(single.a0 == 5);
  CHECK(single.primitive);  // documented convention

  APReport two = detect_ap({3, 10});
  CHECK(two.is_ap);
  CHECK(two.r == 1);
  CHECK(two.d == 7);
}

TEST_CASE("AP structural invariants") {
  for (std::set<long> v : {std::set<long>{1, 2, 3}, {2, 4, 6}, {5, 10, 15, 20},
                           {3, 7, 11}}) {
    APReport r = detect_ap(v);
    REQUIRE(r.is_ap);
    std::vector<long> terms(v.begin(), v.end());
    for (std::size_t i = 1; i + 1 < terms.size(); ++i)
      CHECK(2 * terms[i] == terms[i - 1] + terms[i + 1]);
    CHECK(r.delta == std::gcd(r.a0, r.d));
    if (r.delta > 1) {
      std::set<long> reduced;
      for (long t : v) reduced.insert(t / r.delta);
      CHECK(detect_ap(reduced).primitive);
    }
  }
}

TEST_CASE("conjugacy_rank") {
  CHECK(conjugacy_rank(conjugacy_classes(cyclic_group(8))) == 0);
  CHECK(conjugacy_rank(conjugacy_classes(symmetric_group(3))) == 2);
  CHECK(conjugacy_rank(conjugacy_classes(alternating_group(5))) == 3);
  CHECK(conjugacy_classes(alternating_group(5)).cs_star_set ==
        std::set<long>{12, 15, 20});
}

TEST_CASE("largest_two") {
  auto f21 = largest_two(conjugacy_classes(semidirect_cyclic(7, 3, 2)));
  REQUIRE(f21.has_value());
  CHECK(*f21 == std::pair<long, long>{3, 7});
  CHECK(std::gcd(f21->first, f21->second) == 1);

  auto a5 = largest_two(conjugacy_classes(alternating_group(5)));
  REQUIRE(a5.has_value());
  CHECK(*a5 == std::pair<long, long>{15, 20});
  CHECK(std::gcd(a5->first, a5->second) == 5);

  CHECK(!largest_two(conjugacy_classes(dihedral_group(4))).has_value());
  CHECK(!largest_two(conjugacy_classes(cyclic_group(6))).has_value());
}

TEST_CASE("prime_support") {
  CHECK(prime_support({2, 4, 6}) == std::set<long>{2, 3});
  CHECK(prime_support({1}) == std::set<long>{});
  CHECK(prime_support({10, 15, 20, 24, 30}) == std::set<long>{2, 3, 5});
  CHECK(prime_support(conjugacy_classes(symmetric_group(5)).cs_star_set) ==
        std::set<long>{2, 3, 5});
}
