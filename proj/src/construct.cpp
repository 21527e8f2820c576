#include "csap/construct.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace csap {

namespace {

long power_mod(long base, long exp, long mod) {
  if (mod == 1) return 0;
  long r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_power_of_two(long n) { return n >= 1 && (n & (n - 1)) == 0; }

/// Right regular representation of an abstract group given by a
/// multiplication on {0..n-1} with identity 0.
FiniteGroup regular_rep(long n, const std::function<long(long, long)>& mult,
                        const std::vector<long>& gen_ids,
                        const std::vector<std::string>& names, long cap) {
  if (n > cap)
    throw std::runtime_error("group too large: order " + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
  std::vector<Permutation> gens;
  for (long g : gen_ids) {
    std::vector<int> im(n);
    for (long i = 0; i < n; ++i) im[i] = static_cast<int>(mult(i, g));
    gens.push_back(Permutation(std::move(im)));
  }
  FiniteGroup G = FiniteGroup::enumerate_closure(std::move(gens), cap);
  if (G.order() != n)
    throw std::logic_error("regular representation has wrong order");
  if (!names.empty()) G.set_generator_names(names);
  return G;
}

}  // namespace

FiniteGroup cyclic_group(long n, long cap) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be at least 1");
  if (n == 1) return FiniteGroup::trivial();
  std::vector<int> im(n);
  for (long i = 0; i < n; ++i) im[i] = static_cast<int>((i + 1) % n);
  FiniteGroup G = FiniteGroup::enumerate_closure({Permutation(std::move(im))}, cap);
  G.set_generator_names({"a"});
  return G;
}

FiniteGroup dihedral_group(long n, long cap) {
  if (n < 3) throw std::invalid_argument("dihedral: n must be at least 3");
  std::vector<int> rot(n), refl(n);
  for (long i = 0; i < n; ++i) {
    rot[i] = static_cast<int>((i + 1) % n);
    refl[i] = static_cast<int>((n - i) % n);
  }
  FiniteGroup G = FiniteGroup::enumerate_closure(
      {Permutation(std::move(rot)), Permutation(std::move(refl))}, cap);
  G.set_generator_names({"r", "s"});
  return G;
}

FiniteGroup quaternion_group(long order, long cap) {
  if (order < 8 || !is_power_of_two(order))
    throw std::invalid_argument("quaternion: order must be 2^k with k >= 3");
  long half = order / 2;
  // elements y^j x^i with x^half = 1, y^2 = x^(half/2), x^y = x^{-1}
  auto mult = [half](long e1, long e2) {
    long j1 = e1 / half, i1 = e1 % half;
    long j2 = e2 / half, i2 = e2 % half;
    long i = ((j2 ? half - i1 : i1) + i2) % half;
    long j = j1 + j2;
    if (j == 2) i = (i + half / 2) % half;
    return (j % 2) * half + i;
  };
  return regular_rep(order, mult, {1, half}, {"x", "y"}, cap);
}

FiniteGroup symmetric_group(int n, long cap) {
  if (n < 1) throw std::invalid_argument("symmetric: degree must be at least 1");
  if (n == 1) return FiniteGroup::trivial();
  std::vector<int> swp(n), cyc(n);
  std::iota(swp.begin(), swp.end(), 0);
  swp[0] = 1;
  swp[1] = 0;
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::vector<Permutation> gens{Permutation(std::move(swp))};
  std::vector<std::string> names{"t"};
  if (n > 2) {
    gens.push_back(Permutation(std::move(cyc)));
    names.push_back("c");
  }
  FiniteGroup G = FiniteGroup::enumerate_closure(std::move(gens), cap);
  G.set_generator_names(std::move(names));
  return G;
}

FiniteGroup alternating_group(int n, long cap) {
  if (n < 1) throw std::invalid_argument("alternating: degree must be at least 1");
  if (n <= 2) return FiniteGroup::trivial(std::max(n, 1));
  std::vector<int> three(n), cyc(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<Permutation> gens{Permutation(std::move(three))};
  std::vector<std::string> names{"u"};
  if (n > 3) {
    std::iota(cyc.begin(), cyc.end(), 0);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    } else {
      for (int i = 1; i < n; ++i) cyc[i] = i % (n - 1) + 1;
    }
    gens.push_back(Permutation(std::move(cyc)));
    names.push_back("c");
  }
  FiniteGroup G = FiniteGroup::enumerate_closure(std::move(gens), cap);
  G.set_generator_names(std::move(names));
  return G;
}

FiniteGroup elem_abelian_group(long p, int rank, long cap) {
  if (!is_prime(p)) throw std::invalid_argument("elem_abelian: p must be prime");
  if (rank < 1) throw std::invalid_argument("elem_abelian: rank must be at least 1");
  int deg = static_cast<int>(p) * rank;
  std::vector<Permutation> gens;
  std::vector<std::string> names;
  for (int r = 0; r < rank; ++r) {
    std::vector<int> im(deg);
    std::iota(im.begin(), im.end(), 0);
    for (long i = 0; i < p; ++i)
      im[r * p + i] = static_cast<int>(r * p + (i + 1) % p);
    gens.push_back(Permutation(std::move(im)));
    names.push_back("g" + std::to_string(r + 1));
  }
  FiniteGroup G = FiniteGroup::enumerate_closure(std::move(gens), cap);
  G.set_generator_names(std::move(names));
  return G;
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H, long cap) {
  int dG = G.degree(), dH = H.degree();
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<int> im(dG + dH);
    for (int i = 0; i < dG; ++i) im[i] = g[i];
    for (int i = 0; i < dH; ++i) im[dG + i] = dG + i;
    gens.push_back(Permutation(std::move(im)));
  }
  for (const auto& h : H.generators()) {
    std::vector<int> im(dG + dH);
    for (int i = 0; i < dG; ++i) im[i] = i;
    for (int i = 0; i < dH; ++i) im[dG + i] = dG + h[i];
    gens.push_back(Permutation(std::move(im)));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(dG + dH));
  FiniteGroup P = FiniteGroup::enumerate_closure(std::move(gens), cap);
  if (!G.generator_names().empty() && !H.generator_names().empty()) {
    std::vector<std::string> names = G.generator_names();
    names.insert(names.end(), H.generator_names().begin(),
                 H.generator_names().end());
    P.set_generator_names(std::move(names));
  }
  return P;
}

namespace {

int unique_central_involution(const FiniteGroup& G) {
  int found = -1;
  for (int i = 0; i < G.order(); ++i) {
    if (G.element_order(i) != 2) continue;
    bool central = true;
    for (int g : G.generator_indices()) central &= G.mul(i, g) == G.mul(g, i);
    if (!central) continue;
    if (found != -1)
      throw std::invalid_argument(
          "central product: factor has more than one central involution");
    found = i;
  }
  if (found == -1)
    throw std::invalid_argument(
        "central product: factor has no central involution");
  return found;
}

}  // namespace

FiniteGroup central_product_c2(const FiniteGroup& G, const FiniteGroup& H,
                               long cap) {
  int zg = unique_central_involution(G);
  int zh = unique_central_involution(H);
  FiniteGroup P = direct_product(G, H, cap);
  std::vector<int> im(P.degree());
  for (int i = 0; i < G.degree(); ++i) im[i] = G.element(zg)[i];
  for (int i = 0; i < H.degree(); ++i)
    im[G.degree() + i] = G.degree() + H.element(zh)[i];
  Subgroup N = subgroup_generated(P, {P.index_of(Permutation(std::move(im)))});
  Quotient q = quotient_by_normal(P, N);
  FiniteGroup R = std::move(q.group);
  if (!P.generator_names().empty())
    R.set_generator_names(P.generator_names());
  return R;
}

FiniteGroup semidirect_cyclic(long n, long m, long k, long cap) {
  if (n < 1 || m < 1) throw std::invalid_argument("semidirect: n, m must be positive");
  long kr = ((k % n) + n) % n;
  if (n > 1 && (std::gcd(kr, n) != 1 || power_mod(kr, m, n) != 1))
    throw std::invalid_argument(
        "invalid action exponent: need gcd(k,n)=1 and k^m = 1 mod n");
  // elements a^j b^i with b^a = b^k; (j1,i1)(j2,i2) = (j1+j2, i1*k^j2 + i2)
  std::vector<long> kpow(m);
  for (long j = 0; j < m; ++j) kpow[j] = power_mod(kr, j, std::max(n, 2L));
  auto mult = [n, m, &kpow](long e1, long e2) {
    long j1 = e1 / n, i1 = e1 % n;
    long j2 = e2 / n, i2 = e2 % n;
    return ((j1 + j2) % m) * n + (i1 * kpow[j2] + i2) % n;
  };
  std::vector<long> gen_ids;
  std::vector<std::string> names;
  if (m > 1) {
    gen_ids.push_back(n);  // a
    names.push_back("a");
  }
  if (n > 1) {
    gen_ids.push_back(1);  // b
    names.push_back("b");
  }
  if (gen_ids.empty()) return FiniteGroup::trivial();
  return regular_rep(n * m, mult, gen_ids, names, cap);
}

FiniteGroup semidirect_matrix(long p, int dim, long m,
                              const std::vector<std::vector<long>>& M, long cap) {
  if (!is_prime(p)) throw std::invalid_argument("semidirect_matrix: p must be prime");
  if (dim < 1 || m < 1)
    throw std::invalid_argument("semidirect_matrix: dim, m must be positive");
  if (static_cast<int>(M.size()) != dim)
    throw std::invalid_argument("semidirect_matrix: matrix must be dim x dim");
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("semidirect_matrix: matrix must be dim x dim");

  auto matmul = [p, dim](const std::vector<std::vector<long>>& a,
                         const std::vector<std::vector<long>>& b) {
    std::vector<std::vector<long>> c(dim, std::vector<long>(dim, 0));
    for (int i = 0; i < dim; ++i)
      for (int l = 0; l < dim; ++l)
        for (int j = 0; j < dim; ++j)
          c[i][j] = (c[i][j] + a[i][l] * b[l][j]) % p;
    return c;
  };
  std::vector<std::vector<std::vector<long>>> mp;
  std::vector<std::vector<long>> id(dim, std::vector<long>(dim, 0));
  for (int i = 0; i < dim; ++i) id[i][i] = 1;
  std::vector<std::vector<long>> Mr(dim, std::vector<long>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) Mr[i][j] = ((M[i][j] % p) + p) % p;
  mp.push_back(id);
  for (long j = 1; j < m; ++j) mp.push_back(matmul(mp.back(), Mr));
  if (matmul(mp.back(), Mr) != id)
    throw std::invalid_argument("semidirect_matrix: matrix is singular or M^m != I mod p");

  long pd = 1;
  for (int i = 0; i < dim; ++i) {
    pd *= p;
    if (pd > cap) throw std::runtime_error("group too large: p^dim exceeds cap");
  }
  auto vec_of = [p, dim](long idx) {
    std::vector<long> v(dim);
    for (int i = 0; i < dim; ++i) {
      v[i] = idx % p;
      idx /= p;
    }
    return v;
  };
  auto idx_of = [p, dim](const std::vector<long>& v) {
    long idx = 0;
    for (int i = dim - 1; i >= 0; --i) idx = idx * p + v[i];
    return idx;
  };
  // elements t^j v; (j1,v1)(j2,v2) = (j1+j2, M^j2 v1 + v2)
  auto mult = [&, p, m, pd](long e1, long e2) {
    long j1 = e1 / pd, j2 = e2 / pd;
    auto v1 = vec_of(e1 % pd);
    auto v2 = vec_of(e2 % pd);
    const auto& A = mp[j2];
    std::vector<long> v(dim);
    for (int i = 0; i < dim; ++i) {
      long s = v2[i];
      for (int l = 0; l < dim; ++l) s += A[i][l] * v1[l];
      v[i] = s % p;
    }
    return ((j1 + j2) % m) * pd + idx_of(v);
  };
  std::vector<long> gen_ids;
  std::vector<std::string> names;
  if (m > 1) {
    gen_ids.push_back(pd);
    names.push_back("t");
  }
  for (int i = 0; i < dim; ++i) {
    std::vector<long> e(dim, 0);
    e[i] = 1;
    gen_ids.push_back(idx_of(e));
    names.push_back("v" + std::to_string(i + 1));
  }
  return regular_rep(pd * m, mult, gen_ids, names, cap);
}

FiniteGroup wreath_c2_ck(int k, long cap) {
  if (k < 2) throw std::invalid_argument("wreath: k must be at least 2");
  int deg = 2 * k;
  std::vector<int> flip(deg), shift(deg);
  std::iota(flip.begin(), flip.end(), 0);
  flip[0] = 1;
  flip[1] = 0;
  for (int i = 0; i < deg; ++i) shift[i] = (i + 2) % deg;
  FiniteGroup G = FiniteGroup::enumerate_closure(
      {Permutation(std::move(flip)), Permutation(std::move(shift))}, cap);
  G.set_generator_names({"f", "c"});
  return G;
}

FiniteGroup family_gn(int n, long cap) {
  if (n < 1) throw std::invalid_argument("family_gn: n must be at least 1");
  long two_n = 1L << n;
  return semidirect_cyclic(3, two_n, 2, cap);
}

Family246 family_246(const FiniteGroup& A, const std::set<int>& inverting,
                     long cap) {
  if (!is_power_of_two(A.order()))
    throw std::invalid_argument("f246: A must be a 2-group");
  std::size_t ngen = A.generators().size();
  for (int i : inverting)
    if (i < 0 || i >= static_cast<int>(ngen))
      throw std::invalid_argument("f246: inverting position out of range");

  // propagate the +-1 assignment through the closure; any collision means
  // the assignment does not extend to a homomorphism
  std::vector<int> phi(A.order(), -1);
  phi[A.identity_index()] = 0;
  std::vector<int> queue{A.identity_index()};
  for (std::size_t front = 0; front < queue.size(); ++front) {
    for (std::size_t gi = 0; gi < ngen; ++gi) {
      int g = A.generator_indices()[gi];
      int bit = inverting.count(static_cast<int>(gi)) ? 1 : 0;
      int next = A.mul(queue[front], g);
      int v = phi[queue[front]] ^ bit;
      if (phi[next] == -1) {
        phi[next] = v;
        queue.push_back(next);
      } else if (phi[next] != v) {
        throw std::invalid_argument(
            "inconsistent action: inverting set does not extend to a homomorphism");
      }
    }
  }
  bool nontrivial = false;
  for (int v : phi) nontrivial |= (v == 1);
  if (!nontrivial)
    throw std::invalid_argument("action must be nontrivial");

  // elements a*b with a in A, b in B = C_3; (a1 b1)(a2 b2) = a1 a2 b1^phi(a2) b2
  long nA = A.order();
  auto mult = [&A, &phi](long e1, long e2) {
    long a1 = e1 / 3, b1 = e1 % 3;
    long a2 = e2 / 3, b2 = e2 % 3;
    long b1c = phi[a2] ? (3 - b1) % 3 : b1;
    return static_cast<long>(A.mul(static_cast<int>(a1), static_cast<int>(a2))) * 3 +
           (b1c + b2) % 3;
  };
  std::vector<long> gen_ids;
  std::vector<std::string> names;
  for (std::size_t gi = 0; gi < ngen; ++gi) {
    gen_ids.push_back(static_cast<long>(A.generator_indices()[gi]) * 3);
    names.push_back(A.generator_names().empty() ? ("g" + std::to_string(gi + 1))
                                                : A.generator_names()[gi]);
  }
  gen_ids.push_back(A.identity_index() * 3 + 1);  // w, generating B
  names.push_back("w");
  FiniteGroup G = regular_rep(nA * 3, mult, gen_ids, names, cap);

  // locate subgroup members through their regular permutations
  auto find_abstract = [&](long e) {
    std::vector<int> im(nA * 3);
    for (long i = 0; i < nA * 3; ++i) im[i] = static_cast<int>(mult(i, e));
    return G.index_of(Permutation(std::move(im)));
  };

  std::vector<int> a_m, b_m, cab_m, za_m;
  for (long a = 0; a < nA; ++a) a_m.push_back(find_abstract(a * 3));
  for (long b = 0; b < 3; ++b)
    b_m.push_back(find_abstract(A.identity_index() * 3 + b));
  for (long a = 0; a < nA; ++a)
    if (phi[a] == 0) cab_m.push_back(find_abstract(a * 3));
  for (int a = 0; a < nA; ++a) {
    bool central = true;
    for (int g : A.generator_indices())
      if (A.mul(a, g) != A.mul(g, a)) {
        central = false;
        break;
      }
    if (central) za_m.push_back(find_abstract(static_cast<long>(a) * 3));
  }
  for (auto* v : {&a_m, &b_m, &cab_m, &za_m}) std::sort(v->begin(), v->end());
  return Family246{std::move(G), std::move(a_m), std::move(b_m), std::move(cab_m),
                   std::move(za_m)};
}

}  // namespace csap
