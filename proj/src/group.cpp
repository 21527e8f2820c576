#include "csap/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "csap/classes.hpp"

namespace csap {

FiniteGroup FiniteGroup::enumerate_closure(std::vector<Permutation> generators,
                                           long cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  int degree = generators.empty() ? 1 : generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generators must share a degree");

  FiniteGroup G;
  G.degree_ = degree;
  G.generators_ = std::move(generators);

  Permutation id = Permutation::identity(degree);
  G.elements_.push_back(id);
  G.index_.emplace(id.images(), 0);
  G.identity_index_ = 0;

  // Breadth-first closure; generator order fixes the element order.
  for (std::size_t front = 0; front < G.elements_.size(); ++front) {
    for (const auto& g : G.generators_) {
      Permutation next = compose(G.elements_[front], g);
      auto [it, inserted] =
          G.index_.emplace(next.images(), static_cast<int>(G.elements_.size()));
      if (inserted) {
        G.elements_.push_back(std::move(next));
        if (static_cast<long>(G.elements_.size()) > cap)
          throw std::runtime_error("group too large: closure exceeds cap " +
                                   std::to_string(cap));
      }
    }
  }

  G.generator_indices_.reserve(G.generators_.size());
  for (const auto& g : G.generators_)
    G.generator_indices_.push_back(G.index_.at(g.images()));
  return G;
}

FiniteGroup FiniteGroup::trivial(int degree) {
  return enumerate_closure({Permutation::identity(degree)});
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p.images());
  if (it == index_.end())
    throw std::invalid_argument("permutation is not a group element");
  return it->second;
}

std::optional<int> FiniteGroup::find(const Permutation& p) const {
  auto it = index_.find(p.images());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FiniteGroup::mul(int i, int j) const {
  return index_of(compose(elements_[i], elements_[j]));
}

int FiniteGroup::inv(int i) const { return index_of(elements_[i].inverse()); }

int FiniteGroup::conj(int i, int g) const {
  return index_of(conjugate(elements_[i], elements_[g]));
}

int FiniteGroup::element_order(int i) const {
  int k = 1;
  int cur = i;
  while (cur != identity_index_) {
    cur = mul(cur, i);
    ++k;
  }
  return k;
}

void FiniteGroup::set_generator_names(std::vector<std::string> names) {
  if (names.size() != generators_.size())
    throw std::invalid_argument("one name per generator required");
  generator_names_ = std::move(names);
}

bool Subgroup::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool Subgroup::is_trivial() const {
  return members.size() == 1 && members[0] == parent->identity_index();
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& seeds) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> frontier;
  in[G.identity_index()] = 1;
  frontier.push_back(G.identity_index());
  std::vector<int> gens;
  for (int s : seeds) {
    if (s < 0 || s >= G.order()) throw std::invalid_argument("bad seed index");
    gens.push_back(s);
  }
  for (std::size_t front = 0; front < frontier.size(); ++front) {
    for (int g : gens) {
      int next = G.mul(frontier[front], g);
      if (!in[next]) {
        in[next] = 1;
        frontier.push_back(next);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return Subgroup{&G, std::move(frontier)};
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  return Subgroup{&G, {G.identity_index()}};
}

Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{&G, std::move(all)};
}

bool is_subgroup_closed(const FiniteGroup& G, const std::vector<int>& members) {
  Subgroup H = subgroup_generated(G, members);
  return H.members.size() == members.size();
}

bool is_normal(const FiniteGroup& G, const Subgroup& N, int* witness_conjugator) {
  // Conjugation by generators suffices.
  for (int g : G.generator_indices()) {
    for (int n : N.members) {
      if (!N.contains(G.conj(n, g))) {
        if (witness_conjugator) *witness_conjugator = g;
        return false;
      }
    }
  }
  return true;
}

FiniteGroup subgroup_as_group(const Subgroup& H) {
  std::vector<Permutation> gens;
  gens.reserve(H.members.size());
  for (int i : H.members) gens.push_back(H.parent->element(i));
  return FiniteGroup::enumerate_closure(std::move(gens),
                                        static_cast<long>(H.members.size()));
}

int Quotient::image_index(const FiniteGroup& parent, int i) const {
  std::vector<int> im(coset_rep.size());
  for (std::size_t c = 0; c < coset_rep.size(); ++c)
    im[c] = coset_of[parent.mul(coset_rep[c], i)];
  return group.index_of(Permutation(std::move(im)));
}

Subgroup Quotient::image_subgroup(const FiniteGroup& parent,
                                  const Subgroup& H) const {
  std::vector<int> im;
  for (int i : H.members) im.push_back(image_index(parent, i));
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return Subgroup{&group, std::move(im)};
}

Quotient quotient_by_normal(const FiniteGroup& G, const Subgroup& N) {
  int witness = -1;
  if (!is_normal(G, N, &witness))
    throw std::runtime_error("not normal: conjugation by element " +
                             std::to_string(witness) + " moves the subgroup");

  // Right cosets Ng, identified by their least member; coset ids are
  // assigned in order of that least member.
  std::vector<int> coset_of(G.order(), -1);
  std::vector<int> coset_rep;
  for (int g = 0; g < G.order(); ++g) {
    if (coset_of[g] != -1) continue;
    int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(g);
    for (int n : N.members) coset_of[G.mul(n, g)] = id;
  }

  int deg = static_cast<int>(coset_rep.size());
  std::vector<Permutation> gens;
  for (int g : G.generator_indices()) {
    std::vector<int> im(deg);
    for (int c = 0; c < deg; ++c) im[c] = coset_of[G.mul(coset_rep[c], g)];
    gens.push_back(Permutation(std::move(im)));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(deg));

  return Quotient{FiniteGroup::enumerate_closure(std::move(gens), G.order()),
                  std::move(coset_of), std::move(coset_rep)};
}

bool GroupSignature::operator<(const GroupSignature& o) const {
  auto key = [](const GroupSignature& s) {
    return std::tie(s.order, s.cs_multiset, s.center_order, s.derived_order,
                    s.exponent, s.order_histogram);
  };
  return key(*this) < key(o);
}

GroupSignature signature(const FiniteGroup& G) {
  GroupSignature s;
  s.order = G.order();
  ClassData cd = conjugacy_classes(G);
  for (const auto& [size, mult] : cd.multiplicities)
    s.cs_multiset.emplace_back(size, mult);
  s.center_order = center(G).order();
  s.derived_order = derived_subgroup(G).order();
  s.exponent = 1;
  for (int i = 0; i < G.order(); ++i) {
    long k = G.element_order(i);
    s.exponent = std::lcm(s.exponent, k);
    ++s.order_histogram[k];
  }
  return s;
}

}  // namespace csap
