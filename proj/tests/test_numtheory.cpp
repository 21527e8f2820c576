#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "csap/numtheory.hpp"

using namespace csap::nt;

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(96) == std::map<long, int>{{2, 5}, {3, 1}});
  CHECK(factorize(768) == std::map<long, int>{{2, 8}, {3, 1}});
  CHECK(factorize(97) == std::map<long, int>{{97, 1}});
  CHECK_THROWS(factorize(0));
  CHECK(is_prime(2));
  CHECK(is_prime(127));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
}

TEST_CASE("thompson_search") {
  auto sols = thompson_search(20);
  auto has = [&](long p, int m, int n, int sign) {
    return std::find(sols.begin(), sols.end(),
                     ThompsonSolution{p, m, n, sign}) != sols.end();
  };
  CHECK(has(3, 2, 3, +1));   // 9 = 8 + 1
  CHECK(has(7, 1, 3, -1));   // 7 = 8 - 1
  CHECK(has(5, 1, 2, +1));   // 5 = 4 + 1
  CHECK(has(3, 1, 2, -1));   // 3 = 4 - 1
  CHECK(has(17, 1, 4, +1));  // Fermat
  CHECK(has(31, 1, 5, -1));  // Mersenne
  for (const auto& s : sols) {
    if (s.m >= 2) CHECK(s == ThompsonSolution{3, 2, 3, +1});
    long pm = 1;
    for (int i = 0; i < s.m; ++i) pm *= s.p;
    CHECK(pm == (1L << s.n) + s.sign);
    CHECK(is_prime(s.p));
    CHECK(s.p % 2 == 1);
  }
  CHECK(std::is_sorted(sols.begin(), sols.end(),
                       [](const auto& a, const auto& b) {
                         return std::tie(a.n, a.sign) < std::tie(b.n, b.sign);
                       }));
  CHECK_THROWS(thompson_search(63));
}

TEST_CASE("classify_two_prime_ap") {
  auto c1 = classify_two_prime_ap({1, 4, 7});
  CHECK(c1.label == APCase::I_Mersenne);
  CHECK(c1.alpha == 2);

  CHECK(classify_two_prime_ap({2, 9, 16}).label == APCase::IV_Exceptional);

  auto c2 = classify_two_prime_ap({1, 5, 9});
  CHECK(c2.label == APCase::II_OddP);
  CHECK(c2.p == 5);
  CHECK(c2.alpha == 1);
  CHECK(c2.q == 3);
  CHECK(c2.beta == 2);

  auto c3 = classify_two_prime_ap({2, 4, 6});
  CHECK(c3.label == APCase::NOT_PRIMITIVE);
  CHECK(c3.delta == 2);
  CHECK(c3.reduced == std::vector<long>{1, 2, 3});
  auto r3 = classify_two_prime_ap(c3.reduced);
  CHECK(r3.label == APCase::I_Mersenne);
  CHECK(r3.alpha == 1);

  CHECK(classify_two_prime_ap({1, 2, 3, 4}).label == APCase::PREFIX_1234);
  CHECK(classify_two_prime_ap({2, 3, 4}).label == APCase::III_Fermat);
  CHECK(classify_two_prime_ap({2, 5, 8}).label == APCase::III_Fermat);
  CHECK(classify_two_prime_ap({1, 2, 3}).label == APCase::I_Mersenne);
  CHECK(classify_two_prime_ap({6, 10, 14, 18}).label == APCase::NOT_TWO_PRIME);
  CHECK(classify_two_prime_ap({1, 8, 15}).label == APCase::NOT_TWO_PRIME);

  CHECK_THROWS(classify_two_prime_ap({3, 2, 1}));
  CHECK_THROWS(classify_two_prime_ap({1, 2}));
  CHECK_THROWS(classify_two_prime_ap({1, 3, 5, 8}));
}

namespace {

// Independent oracle: scan every (a0, d) pair directly.
std::set<std::vector<long>> naive_enumeration(long max_term, int min_len) {
  std::set<std::vector<long>> out;
  for (long a0 = 1; a0 <= max_term; ++a0) {
    for (long d = 1; a0 + (min_len - 1) * d <= max_term; ++d) {
      if (std::gcd(a0, d) != 1) continue;
      std::vector<long> terms{a0};
      std::set<long> primes;
      long t = a0;
      bool ok = true;
      while (ok && t + d <= max_term) {
        t += d;
        for (auto [p, e] : factorize(t)) primes.insert(p);
        for (auto [p, e] : factorize(a0)) primes.insert(p);
        if (primes.size() > 2) break;
        terms.push_back(t);
        if (static_cast<int>(terms.size()) >= min_len) out.insert(terms);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_primitive_two_prime_aps small cases") {
  auto e1 = enumerate_primitive_two_prime_aps(10, 4);
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].first == std::vector<long>{1, 2, 3, 4});
  CHECK(e1[0].second.label == APCase::PREFIX_1234);

  auto e2 = enumerate_primitive_two_prime_aps(4, 3);
  std::set<std::vector<long>> got;
  for (const auto& [ap, c] : e2) got.insert(ap);
  CHECK(got == std::set<std::vector<long>>{{1, 2, 3}, {2, 3, 4}, {1, 2, 3, 4}});
}

TEST_CASE("enumeration matches the naive oracle") {
  for (long max_term : {20L, 50L, 200L, 600L}) {
    auto pruned = enumerate_primitive_two_prime_aps(max_term, 3);
    std::set<std::vector<long>> got;
    for (const auto& [ap, c] : pruned) {
      CHECK(got.insert(ap).second);  // no duplicates
      CHECK(c.label != APCase::NO_CASE);
      CHECK(c.label != APCase::NOT_PRIMITIVE);
      CHECK(c.label != APCase::NOT_TWO_PRIME);
    }
    CHECK(got == naive_enumeration(max_term, 3));
  }
}

TEST_CASE("enumeration ordering and global properties") {
  auto all = enumerate_primitive_two_prime_aps(100000, 3);
  std::vector<std::tuple<long, long, std::size_t>> keys;
  for (const auto& [ap, c] : all) {
    CHECK(ap.size() >= 3);
    CHECK(ap.size() <= 4);
    if (ap.size() == 4) CHECK(ap == std::vector<long>{1, 2, 3, 4});
    keys.emplace_back(ap[0], ap[1] - ap[0], ap.size());
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK_THROWS(enumerate_primitive_two_prime_aps(kMaxEnumerationTerm + 1, 3));
  CHECK_THROWS(enumerate_primitive_two_prime_aps(10, 2));
}
