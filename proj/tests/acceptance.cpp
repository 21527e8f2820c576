#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "csap/classes.hpp"
#include "csap/construct.hpp"
#include "csap/corpus.hpp"
#include "csap/numtheory.hpp"
#include "csap/spectra.hpp"
#include "csap/theorems.hpp"

using namespace csap;

namespace {

void verdict(int criterion, bool ok, const std::string& detail) {
  std::cout << "[criterion " << criterion << "] " << (ok ? "PASS" : "FAIL")
            << " - " << detail << "\n";
  CHECK_MESSAGE(ok, "criterion ", criterion, ": ", detail);
}

// The 2-group bases the family_246 corpus is generated from.
std::vector<std::pair<std::string, FiniteGroup>> base_list() {
  FiniteGroup D4 = dihedral_group(4), Q8 = quaternion_group(8);
  std::vector<std::pair<std::string, FiniteGroup>> bases;
  auto add = [&](const std::string& name, FiniteGroup G) {
    bases.emplace_back(name, std::move(G));
  };
  for (long n : {2L, 4L, 8L, 16L, 32L, 64L})
    add("C" + std::to_string(n), cyclic_group(n));
  add("E4", elem_abelian_group(2, 2));
  add("E8", elem_abelian_group(2, 3));
  add("C4xC2", direct_product(cyclic_group(4), cyclic_group(2)));
  add("C8xC2", direct_product(cyclic_group(8), cyclic_group(2)));
  add("C4xC4", direct_product(cyclic_group(4), cyclic_group(4)));
  add("C8xC4", direct_product(cyclic_group(8), cyclic_group(4)));
  add("C16xC2", direct_product(cyclic_group(16), cyclic_group(2)));
  add("C4xC2xC2",
      direct_product(cyclic_group(4), elem_abelian_group(2, 2)));
  for (long n : {4L, 8L, 16L, 32L})
    add("D" + std::to_string(2 * n), dihedral_group(n));
  for (long n : {8L, 16L, 32L, 64L})
    add("Q" + std::to_string(n), quaternion_group(n));
  add("D4xC2", direct_product(D4, cyclic_group(2)));
  add("D4xC4", direct_product(D4, cyclic_group(4)));
  add("D4xC2xC2", direct_product(D4, elem_abelian_group(2, 2)));
  add("Q8xC2", direct_product(Q8, cyclic_group(2)));
  add("Q8xC4", direct_product(Q8, cyclic_group(4)));
  add("D8xC2", direct_product(dihedral_group(8), cyclic_group(2)));
  add("D8xC4", direct_product(dihedral_group(8), cyclic_group(4)));
  add("D16xC2", direct_product(dihedral_group(16), cyclic_group(2)));
  add("Q16xC2", direct_product(quaternion_group(16), cyclic_group(2)));
  add("D4xD4", direct_product(D4, D4));
  add("D4xQ8", direct_product(D4, Q8));
  add("Q8xQ8", direct_product(Q8, Q8));
  add("M4(2)", semidirect_cyclic(8, 2, 5));
  add("SD16", semidirect_cyclic(8, 2, 3));
  add("M5(2)", semidirect_cyclic(16, 2, 9));
  add("SD32", semidirect_cyclic(16, 2, 7));
  add("ES32+", central_product_c2(D4, D4));
  add("ES32-", central_product_c2(D4, Q8));
  add("ES32+b", central_product_c2(Q8, Q8));
  return bases;
}

}  // namespace

TEST_CASE("criterion 1: S_n class size table, n = 2..6") {
  std::vector<std::set<long>> expected = {
      {}, {2, 3}, {3, 6, 8}, {10, 15, 20, 24, 30},
      {15, 40, 45, 90, 120, 144}};
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 6; ++n) {
    std::set<long> got = conjugacy_classes(symmetric_group(n)).cs_star_set;
    if (got != expected[n - 2]) {
      ok = false;
      detail += "cs*(S" + std::to_string(n) + ") mismatch; ";
    }
  }
  if (ok) detail = "cs*(S_n) matches the table for n = 2..6";
  verdict(1, ok, detail);
}

TEST_CASE("criterion 2: cs(Gn(n) x C) = {1,2,3}") {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 7; ++n) {
    FiniteGroup Gn = family_gn(n);
    for (long c : {1L, 2L, 6L}) {
      FiniteGroup G =
          c == 1 ? Gn : direct_product(Gn, cyclic_group(c));
      if (conjugacy_classes(G).cs_set != std::set<long>{1, 2, 3}) {
        ok = false;
        detail += "Gn(" + std::to_string(n) + ") x C" + std::to_string(c) +
                  " mismatch; ";
      }
    }
  }
  if (ok) detail = "cs = {1,2,3} for n = 1..7 and C in {1, C2, C6}";
  verdict(2, ok, detail);
}

TEST_CASE("criterion 3: Theorem 246 over a generated corpus") {
  int total = 0, fails = 0, applicable = 0;
  for (const auto& [name, A] : base_list()) {
    int ngen = static_cast<int>(A.generators().size());
    for (int mask = 1; mask < (1 << ngen); ++mask) {
      std::set<int> inv;
      for (int i = 0; i < ngen; ++i)
        if (mask & (1 << i)) inv.insert(i);
      try {
        Family246 f = family_246(A, inv);
        ++total;
        TheoremReport r = check_thm_246(f.G);
        if (r.applicable) ++applicable;
        if (!r.passed()) ++fails;
      } catch (const std::invalid_argument&) {
        // inconsistent inverting assignment: not a group of the family
      }
    }
  }
  // perturbed constructions violating individual conditions
  std::vector<FiniteGroup> perturbed;
  perturbed.push_back(direct_product(dihedral_group(4), cyclic_group(3)));
  perturbed.push_back(direct_product(quaternion_group(8), cyclic_group(3)));
  perturbed.push_back(
      direct_product(dihedral_group(8), cyclic_group(3)));  // C_A(B) = A
  for (int n = 1; n <= 6; ++n) perturbed.push_back(family_gn(n));  // |A'| = 1
  perturbed.push_back(symmetric_group(4));                // B not normal
  perturbed.push_back(semidirect_matrix(2, 2, 3, {{0, 1}, {1, 1}}));  // A4
  perturbed.push_back(direct_product(semidirect_matrix(2, 2, 3, {{0, 1}, {1, 1}}),
                                     cyclic_group(4)));
  perturbed.push_back(wreath_c2_ck(3));  // |A'| = 4 at order 24? checker decides
  perturbed.push_back(family_246(dihedral_group(8), {1}).G);  // |A'| = 4
  perturbed.push_back(family_246(quaternion_group(16), {1}).G);
  perturbed.push_back(family_246(semidirect_cyclic(8, 2, 3), {1}).G);
  for (const FiniteGroup& G : perturbed) {
    ++total;
    TheoremReport r = check_thm_246(G);
    if (r.applicable) ++applicable;
    if (!r.passed()) ++fails;
  }
  bool ok = total >= 200 && fails == 0;
  verdict(3, ok,
          std::to_string(total) + " groups (" + std::to_string(applicable) +
              " applicable), " + std::to_string(fails) + " fail verdicts");
}

TEST_CASE("criterion 4: Theorem T:KL forward and reverse") {
  struct Fwd {
    std::string name;
    FiniteGroup G;
    long m, n;
  };
  std::vector<Fwd> forward;
  forward.push_back({"F21", semidirect_cyclic(7, 3, 2), 3, 7});
  forward.push_back({"F20", semidirect_cyclic(5, 4, 2), 4, 5});
  forward.push_back({"C13:C3", semidirect_cyclic(13, 3, 3), 3, 13});
  forward.push_back({"C11:C5", semidirect_cyclic(11, 5, 3), 5, 11});
  forward.push_back({"E8:C7",
                     semidirect_matrix(2, 3, 7, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}),
                     7, 8});
  bool ok = true;
  std::string detail;
  for (const auto& f : forward) {
    TheoremReport r = check_thm_kl(f.G);
    bool good = r.applicable && r.passed() && r.witnesses.count("m") &&
                r.witnesses.count("n") && r.witnesses.at("m") == f.m &&
                r.witnesses.at("n") == f.n &&
                (r.witnesses.at("n") - 1) % r.witnesses.at("m") == 0;
    if (!good) {
      ok = false;
      detail += f.name + " failed; ";
    }
  }
  for (auto [name, G] :
       std::vector<std::pair<std::string, FiniteGroup>>{
           {"A5", alternating_group(5)},
           {"S4", symmetric_group(4)},
           {"SL2(4)", alternating_group(5)}}) {
    TheoremReport r = check_thm_kl(G);
    if (!(r.applicable && r.passed())) {
      ok = false;
      detail += name + " reverse failed; ";
    }
  }
  if (ok) detail = "5 forward witnesses with n = 1 mod m, 3 reverse passes";
  verdict(4, ok, detail);
}

TEST_CASE("criterion 5: order-96 signature count for cs* = {2,4,6}") {
  std::set<GroupSignature> sigs;
  int outputs = 0;
  for (const auto& [name, A] : base_list()) {
    if (A.order() != 32) continue;
    int ngen = static_cast<int>(A.generators().size());
    for (int mask = 1; mask < (1 << ngen); ++mask) {
      std::set<int> inv;
      for (int i = 0; i < ngen; ++i)
        if (mask & (1 << i)) inv.insert(i);
      try {
        Family246 f = family_246(A, inv);
        ++outputs;
        if (conjugacy_classes(f.G).cs_star_set == std::set<long>{2, 4, 6})
          sigs.insert(signature(f.G));
      } catch (const std::invalid_argument&) {
      }
    }
  }
  bool ok = sigs.size() >= 1 && sigs.size() <= 4;
  verdict(5, ok,
          std::to_string(sigs.size()) + " distinct signatures among " +
              std::to_string(outputs) + " order-96 outputs (bound [1,4])");
}

TEST_CASE("criterion 6: primitive two-prime AP enumeration to 10^6") {
  auto all = nt::enumerate_primitive_two_prime_aps(1000000, 3);
  int no_case = 0, long_aps = 0, len4 = 0;
  bool unique1234 = true;
  for (const auto& [ap, c] : all) {
    if (c.label == nt::APCase::NO_CASE) ++no_case;
    if (ap.size() >= 5) ++long_aps;
    if (ap.size() == 4) {
      ++len4;
      if (ap != std::vector<long>{1, 2, 3, 4}) unique1234 = false;
    }
  }
  bool ok = no_case == 0 && long_aps == 0 && len4 == 1 && unique1234;
  verdict(6, ok,
          std::to_string(all.size()) + " APs, " + std::to_string(no_case) +
              " NO_CASE, " + std::to_string(long_aps) + " of length >= 5, " +
              std::to_string(len4) + " of length 4");
}

TEST_CASE("criterion 7: Thompson search to n = 62") {
  auto sols = nt::thompson_search(62);
  bool ok = true;
  std::string detail;
  int with_m2 = 0;
  for (const auto& s : sols) {
    if (s.m >= 2) {
      ++with_m2;
      if (!(s == nt::ThompsonSolution{3, 2, 3, +1})) ok = false;
    } else {
      long v = (1L << s.n) + s.sign;
      if (s.p != v || !nt::is_prime(s.p)) ok = false;  // Mersenne or Fermat
      if (s.sign == +1 && ((s.n & (s.n - 1)) != 0)) ok = false;  // Fermat form
    }
  }
  if (with_m2 != 1) ok = false;
  verdict(7, ok,
          std::to_string(sols.size()) + " solutions, only (3,2,3,+1) has m >= 2");
}

TEST_CASE("criterion 8: wreath class sizes contain k and 2^(k-1)") {
  bool ok = true;
  std::string detail;
  for (int k = 2; k <= 4; ++k) {
    std::set<long> cs = conjugacy_classes(wreath_c2_ck(k)).cs_set;
    if (!cs.count(k) || !cs.count(1L << (k - 1))) {
      ok = false;
      detail += "W(" + std::to_string(k) + ") missing; ";
    }
  }
  if (ok) detail = "k and 2^(k-1) in cs(W(k)) for k = 2,3,4";
  verdict(8, ok, detail);
}

TEST_CASE("criterion 9: invariant suite over the built-in corpus") {
  const char* path = std::getenv("CSAP_CORPUS_FILE");
  std::ifstream in(path ? path : "data/corpus.txt");
  REQUIRE_MESSAGE(in.good(), "corpus file not found");
  auto entries = parse_corpus(in);
  long violations = 0, groups = 0;
  for (const auto& e : entries) {
    FiniteGroup G = build_group(e.spec);
    ++groups;
    ClassData cd = conjugacy_classes(G);
    long total = 0;
    for (const auto& c : cd.classes) {
      total += static_cast<long>(c.members.size());
      for (int m : c.members)
        if (static_cast<long>(c.members.size()) * centralizer(G, m).order() !=
            G.order())
          ++violations;  // centralizer-orbit product
    }
    if (total != G.order()) ++violations;  // class equation
    for (const Subgroup& H :
         {center(G), derived_subgroup(G), sylow_subgroup(G, 2),
          sylow_subgroup(G, 3)})
      if (G.order() % H.order() != 0) ++violations;  // Lagrange
    if (!check_ito(G).passed()) ++violations;
    if (!check_kazarin(G).passed()) ++violations;
  }
  bool ok = groups > 0 && violations == 0;
  verdict(9, ok,
          std::to_string(groups) + " corpus groups, " +
              std::to_string(violations) + " invariant violations");
}
