#ifndef CSAP_GROUP_HPP
#define CSAP_GROUP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "csap/perm.hpp"

namespace csap {

constexpr long kDefaultOrderCap = 20000;

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A fully enumerated permutation group. Immutable after construction.
/// Element order is breadth-first from the identity with generators
/// applied in declaration order; all downstream determinism relies on it.
class FiniteGroup {
public:
  static FiniteGroup enumerate_closure(std::vector<Permutation> generators,
                                       long cap = kDefaultOrderCap);

  /// Trivial group of the given degree.
  static FiniteGroup trivial(int degree = 1);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return generator_indices_; }
  int identity_index() const { return identity_index_; }

  const Permutation& element(int i) const { return elements_[i]; }
  int index_of(const Permutation& p) const;
  std::optional<int> find(const Permutation& p) const;

  int mul(int i, int j) const;      // index of elements[i] * elements[j]
  int inv(int i) const;             // index of elements[i]^{-1}
  int conj(int i, int g) const;     // index of g^{-1} * x * g
  int element_order(int i) const;

  /// Names for generators, used by the f246 grammar; empty when anonymous.
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  void set_generator_names(std::vector<std::string> names);

private:
  FiniteGroup() = default;

  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<int> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<std::vector<int>, int, VecHash> index_;
  int identity_index_ = 0;
  std::vector<std::string> generator_names_;
};

/// A subgroup given by its sorted member indices in the parent group.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted element indices

  long order() const { return static_cast<long>(members.size()); }
  bool contains(int i) const;
  bool is_trivial() const;
  bool operator==(const Subgroup& o) const {
    return parent == o.parent && members == o.members;
  }
};

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& seeds);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);

bool is_subgroup_closed(const FiniteGroup& G, const std::vector<int>& members);
bool is_normal(const FiniteGroup& G, const Subgroup& N, int* witness_conjugator = nullptr);

/// Realize a subgroup as a standalone FiniteGroup (same points, members as
/// generators in index order).
FiniteGroup subgroup_as_group(const Subgroup& H);

/// G acting on the right cosets of a normal subgroup N.
struct Quotient {
  FiniteGroup group;
  std::vector<int> coset_of;   // parent element index -> point (coset id)
  std::vector<int> coset_rep;  // coset id -> least parent element index

  /// Index in `group` of the image of parent element i.
  int image_index(const FiniteGroup& parent, int i) const;

  /// Image of a subgroup of the parent.
  Subgroup image_subgroup(const FiniteGroup& parent, const Subgroup& H) const;
};

Quotient quotient_by_normal(const FiniteGroup& G, const Subgroup& N);

/// Isomorphism-invariant fingerprint.
struct GroupSignature {
  long order = 0;
  std::vector<std::pair<long, long>> cs_multiset;  // (class size, multiplicity), sorted
  long center_order = 0;
  long derived_order = 0;
  long exponent = 0;
  std::map<long, long> order_histogram;  // element order -> count

  bool operator==(const GroupSignature& o) const = default;
  bool operator<(const GroupSignature& o) const;
};

GroupSignature signature(const FiniteGroup& G);

}  // namespace csap

#endif
