#ifndef CSAP_THEOREMS_HPP
#define CSAP_THEOREMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csap/classes.hpp"
#include "csap/construct.hpp"
#include "csap/spectra.hpp"

namespace csap {

enum class TheoremId {
  T_KL,
  PROP_COPRIME,
  T246,
  L_CONSTRUCT,
  CENTRAL_SYLOW,
  ITO,
  KAZARIN,
};

std::string to_string(TheoremId id);

/// Pass/fail verdict for one theorem statement on one group, with enough
/// witnesses to reproduce the check by hand.
struct TheoremReport {
  TheoremId theorem_id;
  bool applicable = false;
  std::optional<bool> verdict;  // present iff applicable
  std::map<std::string, long> witnesses;
  std::vector<std::string> diagnostics;

  bool passed() const { return !applicable || (verdict && *verdict); }
};

TheoremReport check_central_sylow(const FiniteGroup& G);
TheoremReport check_thm_kl(const FiniteGroup& G);
TheoremReport check_prop_coprime(const FiniteGroup& G);
TheoremReport check_thm_246(const FiniteGroup& G);
TheoremReport check_lemma_construct(const FiniteGroup& G, const Subgroup& A,
                                    const Subgroup& B);
TheoremReport check_ito(const FiniteGroup& G);
TheoremReport check_kazarin(const FiniteGroup& G);

/// Stable JSON rendering: {theorem_id, applicable, verdict, witnesses{},
/// diagnostics[]} with fixed key order.
std::string report_to_json(const TheoremReport& r);

}  // namespace csap

#endif
