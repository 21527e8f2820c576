#ifndef CSAP_CORPUS_HPP
#define CSAP_CORPUS_HPP

#include <istream>
#include <string>
#include <vector>

#include "csap/specparse.hpp"
#include "csap/theorems.hpp"

namespace csap {

extern const std::vector<std::string> kAllCheckIds;

struct CorpusEntry {
  std::string label;
  std::string spec_text;
  GroupSpec spec;
  std::vector<std::string> checks;
};

/// Flat config format, one entry per line:
///   label = spec ; check1, check2
/// '#' starts a comment; an empty check list or 'all' means every checker.
/// Any malformed line or unparsable spec aborts the whole parse.
std::vector<CorpusEntry> parse_corpus(std::istream& in);

/// Run one checker id (t-kl, coprime, t246, construct, ito, kazarin,
/// central-sylow) on a built spec.
TheoremReport run_check(const std::string& id, const GroupSpec& spec, long cap);

struct CorpusResult {
  std::string label;
  std::string check;
  TheoremReport report;
};

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     long cap);

}  // namespace csap

#endif
