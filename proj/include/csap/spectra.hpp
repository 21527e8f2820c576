#ifndef CSAP_SPECTRA_HPP
#define CSAP_SPECTRA_HPP

#include <optional>
#include <set>
#include <utility>

#include "csap/classes.hpp"

namespace csap {

/// Arithmetic-progression structure of a set of positive integers.
/// A singleton reports is_ap with r = 0, d = 0 and primitive = true by
/// convention; theorem checkers requiring r >= 2 are unaffected.
struct APReport {
  bool is_ap = false;
  long a0 = 0;
  long d = 0;
  long r = 0;  // number of steps, r+1 terms
  long delta = 0;
  bool primitive = false;
};

APReport detect_ap(const std::set<long>& values);

long conjugacy_rank(const ClassData& cd);

/// The two largest members of cs*, absent when |cs*| < 2.
std::optional<std::pair<long, long>> largest_two(const ClassData& cd);

std::set<long> prime_support(const std::set<long>& values);

}  // namespace csap

#endif
