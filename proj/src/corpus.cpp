#include "csap/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace csap {

const std::vector<std::string> kAllCheckIds = {
    "t-kl", "coprime", "t246", "construct", "ito", "kazarin", "central-sylow"};

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::set<std::string> labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("corpus line " + std::to_string(lineno) +
                               ": expected 'label = spec ; checks'");
    CorpusEntry e;
    e.label = trim(line.substr(0, eq));
    std::string rest = line.substr(eq + 1);
    // the checks separator is the last ';' whose tail reads as a check list;
    // this keeps ';' usable inside perm(...) specs
    auto semi = rest.rfind(';');
    std::string checks_part;
    if (semi != std::string::npos) {
      std::string tail = trim(rest.substr(semi + 1));
      bool ident_tokens = true;
      std::istringstream ts(tail);
      std::string tok;
      while (std::getline(ts, tok, ',')) {
        tok = trim(tok);
        for (char ch : tok)
          if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' &&
              ch != '_')
            ident_tokens = false;
      }
      if (ident_tokens) {
        checks_part = tail;
        rest.resize(semi);
      }
    }
    e.spec_text = trim(rest);
    if (e.label.empty() || e.spec_text.empty())
      throw std::runtime_error("corpus line " + std::to_string(lineno) +
                               ": empty label or spec");
    if (!labels.insert(e.label).second)
      throw std::runtime_error("corpus line " + std::to_string(lineno) +
                               ": duplicate label '" + e.label + "'");
    try {
      e.spec = parse_group_spec(e.spec_text);
    } catch (const std::exception& ex) {
      throw std::runtime_error("corpus entry '" + e.label +
                               "': " + ex.what());
    }
    if (checks_part.empty() || checks_part == "all") {
      e.checks = kAllCheckIds;
    } else {
      std::istringstream cs(checks_part);
      std::string id;
      while (std::getline(cs, id, ',')) {
        id = trim(id);
        if (id.empty()) continue;
        if (std::find(kAllCheckIds.begin(), kAllCheckIds.end(), id) ==
            kAllCheckIds.end())
          throw std::runtime_error("corpus entry '" + e.label +
                                   "': unknown check '" + id + "'");
        e.checks.push_back(id);
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

TheoremReport run_check(const std::string& id, const GroupSpec& spec, long cap) {
  if (id == "construct") {
    if (is_family_246(spec)) {
      Family246 fam = build_family_246(spec, cap);
      return check_lemma_construct(fam.G, fam.A(), fam.B());
    }
    FiniteGroup G = build_group(spec, cap);
    Subgroup A = sylow_subgroup(G, 2);
    Subgroup B = sylow_subgroup(G, 3);
    return check_lemma_construct(G, A, B);
  }
  FiniteGroup G = build_group(spec, cap);
  if (id == "t-kl") return check_thm_kl(G);
  if (id == "coprime") return check_prop_coprime(G);
  if (id == "t246") return check_thm_246(G);
  if (id == "ito") return check_ito(G);
  if (id == "kazarin") return check_kazarin(G);
  if (id == "central-sylow") return check_central_sylow(G);
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     long cap) {
  std::vector<CorpusResult> results;
  for (const auto& e : entries)
    for (const auto& id : e.checks)
      results.push_back({e.label, id, run_check(id, e.spec, cap)});
  return results;
}

}  // namespace csap
