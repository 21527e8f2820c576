#include "csap/classes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csap {

namespace {

std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_p_power_order(const FiniteGroup& G, int i, long p) {
  long k = G.element_order(i);
  while (k % p == 0) k /= p;
  return k == 1;
}

}  // namespace

ClassData conjugacy_classes(const FiniteGroup& G) {
  ClassData cd;
  cd.class_index_.assign(G.order(), -1);
  for (int i = 0; i < G.order(); ++i) {
    if (cd.class_index_[i] != -1) continue;
    int cls = static_cast<int>(cd.classes.size());
    std::vector<int> orbit{i};
    cd.class_index_[i] = cls;
    // Orbit under conjugation by generators.
    for (std::size_t front = 0; front < orbit.size(); ++front) {
      for (int g : G.generator_indices()) {
        int next = G.conj(orbit[front], g);
        if (cd.class_index_[next] == -1) {
          cd.class_index_[next] = cls;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cd.classes.push_back({i, std::move(orbit)});
  }
  long total = 0;
  for (const auto& c : cd.classes) {
    long size = static_cast<long>(c.members.size());
    cd.cs_set.insert(size);
    if (size > 1) cd.cs_star_set.insert(size);
    ++cd.multiplicities[size];
    total += size;
    if (G.order() % size != 0)
      throw std::logic_error("class size does not divide the group order");
  }
  if (total != G.order())
    throw std::logic_error("class equation violated");
  return cd;
}

Subgroup centralizer(const FiniteGroup& G, int i) {
  if (i < 0 || i >= G.order()) throw std::invalid_argument("bad element index");
  std::vector<int> members;
  for (int g = 0; g < G.order(); ++g)
    if (G.mul(g, i) == G.mul(i, g)) members.push_back(g);
  return Subgroup{&G, std::move(members)};
}

Subgroup center(const FiniteGroup& G) {
  std::vector<int> members;
  for (int x = 0; x < G.order(); ++x) {
    bool central = true;
    for (int g : G.generator_indices()) {
      if (G.mul(x, g) != G.mul(g, x)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return Subgroup{&G, std::move(members)};
}

/// Deterministic small generating set: scan members in order, keep the ones
/// enlarging the generated subgroup.
std::vector<int> small_generating_set(const FiniteGroup& G,
                                      const std::vector<int>& members) {
  std::vector<int> gens;
  Subgroup span = trivial_subgroup(G);
  for (int m : members) {
    if (!span.contains(m)) {
      gens.push_back(m);
      span = subgroup_generated(G, gens);
      if (span.members.size() == members.size()) break;
    }
  }
  return gens;
}

namespace {

/// Normal closure of the given seeds inside the subgroup generated by hgens.
std::vector<int> normal_closure_in(const FiniteGroup& G,
                                   const std::vector<int>& seeds,
                                   const std::vector<int>& hgens) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> frontier{G.identity_index()};
  in[G.identity_index()] = 1;
  std::vector<int> gens = seeds;
  for (std::size_t front = 0; front < frontier.size(); ++front) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int next = G.mul(frontier[front], gens[gi]);
      if (!in[next]) {
        in[next] = 1;
        frontier.push_back(next);
      }
    }
    // close under conjugation by the ambient generators
    for (int h : hgens) {
      int next = G.conj(frontier[front], h);
      if (!in[next]) {
        in[next] = 1;
        frontier.push_back(next);
        gens.push_back(next);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

/// Derived subgroup of the subgroup of G generated by hgens.
std::vector<int> derived_members(const FiniteGroup& G,
                                 const std::vector<int>& hgens) {
  std::vector<int> seeds;
  for (int x : hgens)
    for (int g : hgens) {
      // [x,g] = x^{-1} x^g
      int c = G.mul(G.inv(x), G.conj(x, g));
      seeds.push_back(c);
    }
  return normal_closure_in(G, seeds, hgens);
}

}  // namespace

Subgroup derived_subgroup(const FiniteGroup& G) {
  return Subgroup{&G, derived_members(G, G.generator_indices())};
}

Subgroup sylow_subgroup(const FiniteGroup& G, long p) {
  auto ps = prime_divisors(p);
  if (ps.size() != 1 || ps[0] != p)
    throw std::invalid_argument("p must be prime");
  long p_part = 1;
  long n = G.order();
  while (n % p == 0) {
    n /= p;
    p_part *= p;
  }
  if (p_part == 1) return trivial_subgroup(G);

  std::vector<int> gens;
  Subgroup P = trivial_subgroup(G);
  while (P.order() < p_part) {
    // least p-element of the normalizer outside P
    int pick = -1;
    for (int g = 0; g < G.order() && pick == -1; ++g) {
      if (P.contains(g)) continue;
      bool normalizes = true;
      for (int s : gens) {
        if (!P.contains(G.conj(s, g))) {
          normalizes = false;
          break;
        }
      }
      if (normalizes && is_p_power_order(G, g, p) && g != G.identity_index())
        pick = g;
    }
    if (pick == -1)
      throw std::logic_error("sylow extension stalled");
    gens.push_back(pick);
    P = subgroup_generated(G, gens);
  }
  return P;
}

bool is_nilpotent(const FiniteGroup& G) {
  for (long p : prime_divisors(G.order())) {
    Subgroup P = sylow_subgroup(G, p);
    if (!is_normal(G, P)) return false;
  }
  return true;
}

bool is_solvable(const FiniteGroup& G) {
  std::vector<int> gens = G.generator_indices();
  long size = G.order();
  for (;;) {
    std::vector<int> d = derived_members(G, gens);
    long dsize = static_cast<long>(d.size());
    if (dsize == 1) return true;
    if (dsize == size) return false;
    size = dsize;
    gens = small_generating_set(G, d);
  }
}

bool is_frobenius_complement(const FiniteGroup& G, const Subgroup& H) {
  if (H.order() <= 1 || H.order() == G.order())
    throw std::invalid_argument("not a proper subgroup");
  for (int g = 0; g < G.order(); ++g) {
    if (H.contains(g)) continue;
    int common = 0;
    for (int h : H.members)
      if (H.contains(G.conj(h, g))) ++common;
    if (common > 1) return false;  // identity is always shared
  }
  return true;
}

std::optional<Subgroup> pi_hall_candidate(const FiniteGroup& G, long n) {
  if (n < 1 || G.order() % n != 0 || std::gcd(n, G.order() / n) != 1)
    throw std::invalid_argument("n must be a Hall divisor of |G|");
  auto primes = prime_divisors(n);
  std::vector<int> members;
  for (int i = 0; i < G.order(); ++i) {
    long k = G.element_order(i);
    for (long p : primes)
      while (k % p == 0) k /= p;
    if (k == 1) members.push_back(i);
  }
  if (static_cast<long>(members.size()) != n) return std::nullopt;
  if (!is_subgroup_closed(G, members)) return std::nullopt;
  return Subgroup{&G, std::move(members)};
}

namespace {

bool is_abelian(const FiniteGroup& G) {
  const auto& gi = G.generator_indices();
  for (std::size_t a = 0; a < gi.size(); ++a)
    for (std::size_t b = a + 1; b < gi.size(); ++b)
      if (G.mul(gi[a], gi[b]) != G.mul(gi[b], gi[a])) return false;
  return true;
}

/// Kernels of surjective homomorphisms G -> C_p, enumerated by assigning
/// values to the generators and propagating through the closure.
std::vector<std::vector<int>> index_p_normal_kernels(const FiniteGroup& G, long p) {
  const auto& gens = G.generator_indices();
  std::size_t k = gens.size();
  std::vector<std::vector<int>> kernels;
  std::vector<long> assign(k, 0);
  for (;;) {
    // advance odometer; skip the all-zero assignment
    std::size_t pos = 0;
    while (pos < k && ++assign[pos] == p) assign[pos++] = 0;
    if (pos == k) break;

    std::vector<long> val(G.order(), -1);
    val[G.identity_index()] = 0;
    std::vector<int> queue{G.identity_index()};
    bool ok = true;
    for (std::size_t front = 0; front < queue.size() && ok; ++front) {
      for (std::size_t gi = 0; gi < k; ++gi) {
        int next = G.mul(queue[front], gens[gi]);
        long v = (val[queue[front]] + assign[gi]) % p;
        if (val[next] == -1) {
          val[next] = v;
          queue.push_back(next);
        } else if (val[next] != v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<int> kernel;
    for (int i = 0; i < G.order(); ++i)
      if (val[i] == 0) kernel.push_back(i);
    if (static_cast<long>(kernel.size()) * p == G.order())
      kernels.push_back(std::move(kernel));
  }
  return kernels;
}

}  // namespace

FiniteGroup subgroup_as_group_small(const Subgroup& H) {
  std::vector<int> gens = small_generating_set(*H.parent, H.members);
  std::vector<Permutation> perms;
  for (int i : gens) perms.push_back(H.parent->element(i));
  if (perms.empty()) perms.push_back(Permutation::identity(H.parent->degree()));
  return FiniteGroup::enumerate_closure(std::move(perms),
                                        static_cast<long>(H.members.size()));
}

FiniteGroup strip_abelian_direct_factors(const FiniteGroup& G) {
  if (is_abelian(G)) return FiniteGroup::trivial();
  FiniteGroup cur = G;
  for (;;) {
    Subgroup Z = center(cur);
    bool stripped = false;
    for (long p : prime_divisors(Z.order())) {
      // a direct complement of a central <z> of order p has index p and
      // contains the derived subgroup; search the kernels of maps cur -> C_p
      auto kernels = index_p_normal_kernels(cur, p);
      for (int z : Z.members) {
        if (cur.element_order(z) != p) continue;
        for (auto& kernel : kernels) {
          if (std::binary_search(kernel.begin(), kernel.end(), z)) continue;
          Subgroup N{&cur, std::move(kernel)};
          cur = subgroup_as_group_small(N);
          stripped = true;
          break;
        }
        if (stripped) break;
      }
      if (stripped) break;
    }
    if (!stripped) return cur;
    if (is_abelian(cur)) return FiniteGroup::trivial();
  }
}

}  // namespace csap
