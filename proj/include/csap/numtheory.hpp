#ifndef CSAP_NUMTHEORY_HPP
#define CSAP_NUMTHEORY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace csap {
namespace nt {

/// Exact factorization by trial division; 1 maps to the empty map.
std::map<long, int> factorize(long n);

bool is_prime(long n);

/// A solution of p^m = 2^n + sign with p an odd prime.
struct ThompsonSolution {
  long p;
  int m;
  int n;
  int sign;  // +1 or -1

  bool operator==(const ThompsonSolution&) const = default;
};

/// All solutions with n <= max_n (max 62, exact 64-bit arithmetic),
/// sorted by (n, sign).
std::vector<ThompsonSolution> thompson_search(int max_n);

enum class APCase {
  I_Mersenne,      // (1, 2^a, 2^(a+1)-1), 2^(a+1)-1 prime
  II_OddP,         // (1, p^a, q^b), p > 2, q^b = 1 mod 4, 1 + q^b = 2 p^a
  III_Fermat,      // (2, q, 2^(a+1)), q = 2^a + 1 prime
  IV_Exceptional,  // (2, 9, 16)
  PREFIX_1234,
  NOT_TWO_PRIME,
  NOT_PRIMITIVE,
  NO_CASE,
};

std::string to_string(APCase c);

struct TwoPrimeAPCase {
  APCase label = APCase::NO_CASE;
  long p = 0, q = 0;
  long alpha = 0, beta = 0;
  long delta = 0;
  std::vector<long> reduced;  // the primitive AP, when NOT_PRIMITIVE
};

/// Classify an increasing arithmetic progression of >= 3 terms against the
/// primitive two-prime cases.
TwoPrimeAPCase classify_two_prime_ap(const std::vector<long>& terms);

/// All primitive APs with at least min_len terms, all terms <= max_term,
/// involving at most two primes, each with its classification. Sorted by
/// (a0, d, length).
std::vector<std::pair<std::vector<long>, TwoPrimeAPCase>>
enumerate_primitive_two_prime_aps(long max_term, int min_len);

constexpr long kMaxEnumerationTerm = 10'000'000;

}  // namespace nt
}  // namespace csap

#endif
