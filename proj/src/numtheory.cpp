#include "csap/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace csap {
namespace nt {

std::map<long, int> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be at least 1");
  std::map<long, int> f;
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

namespace {

/// Exact integer k-th root: largest r with r^k <= v.
long iroot(long v, int k) {
  if (v < 1) return 0;
  long lo = 1, hi = v;
  while (lo < hi) {
    long mid = lo + (hi - lo + 1) / 2;
    // mid^k <= v with overflow guard
    long acc = 1;
    bool over = false;
    for (int i = 0; i < k; ++i) {
      if (acc > v / mid) {
        over = true;
        break;
      }
      acc *= mid;
    }
    if (!over && acc <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

/// If v = q^b with q prime, returns (q, b); otherwise (0, 0).
std::pair<long, int> prime_power_of(long v) {
  if (v < 2) return {0, 0};
  for (int b = 62; b >= 1; --b) {
    long q = iroot(v, b);
    long acc = 1;
    for (int i = 0; i < b; ++i) acc *= q;
    if (acc == v && is_prime(q)) return {q, b};
  }
  return {0, 0};
}

bool is_pow2(long v) { return v >= 1 && (v & (v - 1)) == 0; }

int log2_exact(long v) {
  int e = 0;
  while (v > 1) {
    v >>= 1;
    ++e;
  }
  return e;
}

}  // namespace

std::vector<ThompsonSolution> thompson_search(int max_n) {
  if (max_n < 1 || max_n > 62)
    throw std::invalid_argument("thompson_search: max_n must be in [1, 62]");
  std::vector<ThompsonSolution> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int sign : {-1, +1}) {
      long v = (1L << n) + sign;
      if (v < 3) continue;
      auto [p, m] = prime_power_of(v);
      if (p >= 3) out.push_back({p, m, n, sign});
    }
  }
  return out;
}

std::string to_string(APCase c) {
  switch (c) {
    case APCase::I_Mersenne: return "I_Mersenne";
    case APCase::II_OddP: return "II_OddP";
    case APCase::III_Fermat: return "III_Fermat";
    case APCase::IV_Exceptional: return "IV_Exceptional";
    case APCase::PREFIX_1234: return "PREFIX_1234";
    case APCase::NOT_TWO_PRIME: return "NOT_TWO_PRIME";
    case APCase::NOT_PRIMITIVE: return "NOT_PRIMITIVE";
    case APCase::NO_CASE: return "NO_CASE";
  }
  return "?";
}

TwoPrimeAPCase classify_two_prime_ap(const std::vector<long>& terms) {
  if (terms.size() < 3)
    throw std::invalid_argument("classify: need at least 3 terms");
  long d = terms[1] - terms[0];
  if (d < 1) throw std::invalid_argument("classify: terms must increase");
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i] - terms[i - 1] != d)
      throw std::invalid_argument("classify: not an arithmetic progression");
  if (terms[0] < 1) throw std::invalid_argument("classify: terms must be positive");

  TwoPrimeAPCase out;
  std::set<long> support;
  for (long t : terms)
    for (const auto& [p, e] : factorize(t)) support.insert(p);
  if (support.size() > 2) {
    out.label = APCase::NOT_TWO_PRIME;
    return out;
  }
  long delta = std::gcd(terms[0], d);
  if (delta > 1) {
    out.label = APCase::NOT_PRIMITIVE;
    out.delta = delta;
    for (long t : terms) out.reduced.push_back(t / delta);
    return out;
  }
  out.delta = 1;

  if (terms.size() >= 4) {
    if (terms == std::vector<long>{1, 2, 3, 4}) out.label = APCase::PREFIX_1234;
    return out;
  }

  long a0 = terms[0], a1 = terms[1], a2 = terms[2];
  if (a0 == 2 && a1 == 9 && a2 == 16) {
    out.label = APCase::IV_Exceptional;
    out.p = 2;
    out.q = 3;
    return out;
  }
  if (a0 == 1 && is_pow2(a1) && a2 == 2 * a1 - 1 && is_prime(a2)) {
    out.label = APCase::I_Mersenne;
    out.p = 2;
    out.q = a2;
    out.alpha = log2_exact(a1);
    return out;
  }
  if (a0 == 1) {
    auto [p, alpha] = prime_power_of(a1);
    auto [q, beta] = prime_power_of(a2);
    if (p > 2 && q >= 2 && q != p && a2 % 4 == 1 && 1 + a2 == 2 * a1) {
      out.label = APCase::II_OddP;
      out.p = p;
      out.q = q;
      out.alpha = alpha;
      out.beta = beta;
      return out;
    }
  }
  if (a0 == 2 && is_prime(a1) && is_pow2(a1 - 1) && is_pow2(a2) &&
      a2 == 2 * (a1 - 1)) {
    out.label = APCase::III_Fermat;
    out.p = 2;
    out.q = a1;
    out.alpha = log2_exact(a1 - 1);
    return out;
  }
  return out;  // NO_CASE
}

namespace {

/// Sieve of least prime factors; lpf[1] = 1.
std::vector<int32_t> lpf_sieve(long n) {
  std::vector<int32_t> lpf(n + 1, 0);
  for (long i = 2; i <= n; ++i) {
    if (lpf[i] == 0)
      for (long j = i; j <= n; j += i)
        if (lpf[j] == 0) lpf[j] = static_cast<int32_t>(i);
  }
  if (n >= 1) lpf[1] = 1;
  return lpf;
}

void support_of(long v, const std::vector<int32_t>& lpf, std::set<long>& out) {
  while (v > 1) {
    long p = lpf[v];
    out.insert(p);
    while (v % p == 0) v /= p;
  }
}

}  // namespace

std::vector<std::pair<std::vector<long>, TwoPrimeAPCase>>
enumerate_primitive_two_prime_aps(long max_term, int min_len) {
  if (max_term < 4) throw std::invalid_argument("enumerate: max_term must be >= 4");
  if (min_len < 3) throw std::invalid_argument("enumerate: min_len must be >= 3");
  if (max_term > kMaxEnumerationTerm)
    throw std::invalid_argument("enumerate: max_term exceeds the resource cap");
  auto lpf = lpf_sieve(max_term);

  std::vector<std::pair<std::vector<long>, TwoPrimeAPCase>> out;
  auto emit_runs = [&](long a0, long d) {
    // extend from a0 while the prime support stays within two primes;
    // every long-enough prefix is a qualifying AP
    std::set<long> support;
    std::vector<long> terms;
    for (long t = a0; t <= max_term; t += d) {
      support_of(t, lpf, support);
      if (support.size() > 2) break;
      terms.push_back(t);
      if (static_cast<int>(terms.size()) >= min_len)
        out.emplace_back(terms, classify_two_prime_ap(terms));
    }
  };

  // a0 = 1: every d gives a primitive AP; scan all of them.
  for (long d = 1; 1 + 2 * d <= max_term; ++d) emit_runs(1, d);

  // a0 = 2: primitivity forces d odd, so the third term 2 + 2d has no odd
  // part in common with 2 + d; with at most two primes this pins the third
  // term to a power of two, d = 2^(c-1) - 1.
  for (long t2 = 4; t2 <= max_term; t2 *= 2) emit_runs(2, t2 / 2 - 1);

  // a0 >= 3 cannot occur: a0 must be a prime power p^a (a two-prime AP with
  // delta = 1 leaves no room for a second prime in a0), the third term is
  // then a higher power of p, and (p^c - p^a)/2 shares a factor p (p odd)
  // or 2 (p = 2, a >= 2) with a0, contradicting delta = 1. The unit tests
  // cross-check this against a naive (a0, d) scan.

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tuple(x.first[0], x.first[1] - x.first[0], x.first.size()) <
           std::tuple(y.first[0], y.first[1] - y.first[0], y.first.size());
  });
  return out;
}

}  // namespace nt
}  // namespace csap
