#ifndef CSAP_CLASSES_HPP
#define CSAP_CLASSES_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "csap/group.hpp"

namespace csap {

/// Conjugacy classes of a group, with the class-size statistics.
struct ClassData {
  struct ConjClass {
    int representative;        // least member index
    std::vector<int> members;  // sorted
  };
  std::vector<ConjClass> classes;       // ordered by representative
  std::set<long> cs_set;                // class sizes including 1
  std::set<long> cs_star_set;           // cs_set minus {1}
  std::map<long, long> multiplicities;  // size -> number of classes

  int class_of(int element_index) const { return class_index_[element_index]; }

  std::vector<int> class_index_;  // element index -> position in classes
};

ClassData conjugacy_classes(const FiniteGroup& G);

Subgroup centralizer(const FiniteGroup& G, int i);
Subgroup center(const FiniteGroup& G);
Subgroup derived_subgroup(const FiniteGroup& G);

/// Full p-part Sylow subgroup, by greedy normalizer extension.
/// Returns the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& G, long p);

bool is_nilpotent(const FiniteGroup& G);
bool is_solvable(const FiniteGroup& G);

/// H cap H^g = 1 for every g outside H.
bool is_frobenius_complement(const FiniteGroup& G, const Subgroup& H);

/// The elements whose order involves only the primes of n, returned as a
/// subgroup iff they form one of order exactly n. Requires gcd(n, |G|/n) = 1.
std::optional<Subgroup> pi_hall_candidate(const FiniteGroup& G, long n);

/// H with G isomorphic to H x C, C abelian, H without nontrivial abelian
/// direct factors. Abelian input yields the trivial group.
FiniteGroup strip_abelian_direct_factors(const FiniteGroup& G);

/// Deterministic greedy generating subset of a member set (least index first).
std::vector<int> small_generating_set(const FiniteGroup& G,
                                      const std::vector<int>& members);

/// Like subgroup_as_group but with a small generating set.
FiniteGroup subgroup_as_group_small(const Subgroup& H);

}  // namespace csap

#endif
