#ifndef CSAP_CONSTRUCT_HPP
#define CSAP_CONSTRUCT_HPP

#include <set>
#include <string>
#include <vector>

#include "csap/group.hpp"

namespace csap {

// Atoms, in their natural action where one exists and the regular
// representation otherwise. Dihedral(n) has order 2n.
FiniteGroup cyclic_group(long n, long cap = kDefaultOrderCap);
FiniteGroup dihedral_group(long n, long cap = kDefaultOrderCap);
FiniteGroup quaternion_group(long order, long cap = kDefaultOrderCap);  // order 2^k, k >= 3
FiniteGroup symmetric_group(int n, long cap = kDefaultOrderCap);
FiniteGroup alternating_group(int n, long cap = kDefaultOrderCap);
FiniteGroup elem_abelian_group(long p, int rank, long cap = kDefaultOrderCap);

/// Disjoint-union action on degree(G) + degree(H) points.
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                           long cap = kDefaultOrderCap);

/// C_n x| C_m where the C_m generator conjugates the C_n generator to its
/// k-th power. Regular representation of order n*m.
FiniteGroup semidirect_cyclic(long n, long m, long k, long cap = kDefaultOrderCap);

/// (C_p)^dim x| C_m with the C_m generator acting as the matrix M mod p.
FiniteGroup semidirect_matrix(long p, int dim, long m,
                              const std::vector<std::vector<long>>& M,
                              long cap = kDefaultOrderCap);

/// C_2 wr C_k of order 2^k * k, acting imprimitively on 2k points.
FiniteGroup wreath_c2_ck(int k, long cap = kDefaultOrderCap);

/// Central product G o H identifying the unique central involution of each
/// factor; both factors must have exactly one such element. Acts on the
/// cosets of the identified diagonal.
FiniteGroup central_product_c2(const FiniteGroup& G, const FiniteGroup& H,
                               long cap = kDefaultOrderCap);

/// G_n = <a,b | a^(2^n) = b^3 = 1, b^a = b^(-1)>, of order 3*2^n.
FiniteGroup family_gn(int n, long cap = kDefaultOrderCap);

/// G = C_3 x| A where generator i of A inverts the C_3 iff i is in
/// `inverting`, with the witnesses needed by the cs* = {2,4,6} checkers.
struct Family246 {
  FiniteGroup G;
  std::vector<int> a_members, b_members, cab_members, za_members;

  Subgroup A() const { return {&G, a_members}; }       // the 2-group factor
  Subgroup B() const { return {&G, b_members}; }       // the normal C_3
  Subgroup C_A_B() const { return {&G, cab_members}; } // kernel of the action
  Subgroup Z_A() const { return {&G, za_members}; }
};

Family246 family_246(const FiniteGroup& A, const std::set<int>& inverting,
                     long cap = kDefaultOrderCap);

}  // namespace csap

#endif
