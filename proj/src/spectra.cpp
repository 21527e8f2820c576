#include "csap/spectra.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace csap {

APReport detect_ap(const std::set<long>& values) {
  if (values.empty()) throw std::invalid_argument("detect_ap: empty input");
  std::vector<long> v(values.begin(), values.end());
  APReport rep;
  rep.a0 = v.front();
  if (v.size() == 1) {
    rep.is_ap = true;
    rep.r = 0;
    rep.d = 0;
    rep.delta = v.front();
    rep.primitive = true;
    return rep;
  }
  long d = v[1] - v[0];
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] - v[i - 1] != d) return rep;  // is_ap stays false
  rep.is_ap = true;
  rep.d = d;
  rep.r = static_cast<long>(v.size()) - 1;
  rep.delta = std::gcd(rep.a0, d);
  rep.primitive = rep.delta == 1;
  return rep;
}

long conjugacy_rank(const ClassData& cd) {
  return static_cast<long>(cd.cs_star_set.size());
}

std::optional<std::pair<long, long>> largest_two(const ClassData& cd) {
  if (cd.cs_star_set.size() < 2) return std::nullopt;
  auto it = cd.cs_star_set.rbegin();
  long n = *it++;
  long m = *it;
  return std::make_pair(m, n);
}

std::set<long> prime_support(const std::set<long>& values) {
  if (values.empty()) throw std::invalid_argument("prime_support: empty input");
  std::set<long> primes;
  for (long v : values) {
    if (v < 1) throw std::invalid_argument("prime_support: values must be positive");
    for (long p = 2; p * p <= v; ++p) {
      if (v % p == 0) {
        primes.insert(p);
        while (v % p == 0) v /= p;
      }
    }
    if (v > 1) primes.insert(v);
  }
  return primes;
}

}  // namespace csap
