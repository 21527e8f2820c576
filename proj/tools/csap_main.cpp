#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "csap/corpus.hpp"
#include "csap/numtheory.hpp"
#include "csap/spectra.hpp"

using json = nlohmann::ordered_json;

namespace {

json set_to_json(const std::set<long>& s) { return json(s); }

json ap_to_json(const csap::APReport& ap) {
  json j;
  j["is_ap"] = ap.is_ap;
  if (ap.is_ap) {
    j["a0"] = ap.a0;
    j["d"] = ap.d;
    j["r"] = ap.r;
    j["delta"] = ap.delta;
    j["primitive"] = ap.primitive;
  }
  return j;
}

std::string ap_to_text(const csap::APReport& ap) {
  if (!ap.is_ap) return "not an AP";
  std::string s = "a0=" + std::to_string(ap.a0) + " d=" + std::to_string(ap.d) +
                  " r=" + std::to_string(ap.r) +
                  " delta=" + std::to_string(ap.delta);
  s += ap.primitive ? " primitive" : " non-primitive";
  return s;
}

std::string join_set(const std::set<long>& s) {
  std::string out = "{";
  bool first = true;
  for (long v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

int cmd_analyze(const std::string& spec_text, bool as_json, long cap) {
  csap::GroupSpec spec = csap::parse_group_spec(spec_text);
  csap::FiniteGroup G = csap::build_group(spec, cap);
  csap::ClassData cd = csap::conjugacy_classes(G);
  csap::GroupSignature sig = csap::signature(G);
  csap::APReport ap_cs = csap::detect_ap(cd.cs_set);
  csap::APReport ap_star;
  if (!cd.cs_star_set.empty()) ap_star = csap::detect_ap(cd.cs_star_set);
  auto two = csap::largest_two(cd);
  std::set<long> support = csap::prime_support(cd.cs_set);

  if (as_json) {
    json j;
    j["spec"] = csap::render_group_spec(spec);
    j["order"] = G.order();
    j["cs"] = set_to_json(cd.cs_set);
    j["cs_star"] = set_to_json(cd.cs_star_set);
    j["rank"] = csap::conjugacy_rank(cd);
    j["ap_cs"] = ap_to_json(ap_cs);
    j["ap_cs_star"] = cd.cs_star_set.empty() ? json(nullptr) : ap_to_json(ap_star);
    j["center_order"] = sig.center_order;
    j["derived_order"] = sig.derived_order;
    if (two) {
      j["largest_two"] = {{"m", two->first},
                          {"n", two->second},
                          {"gcd", std::gcd(two->first, two->second)}};
    } else {
      j["largest_two"] = nullptr;
    }
    j["prime_support"] = set_to_json(support);
    json s;
    s["order"] = sig.order;
    json cm = json::array();
    for (auto [size, mult] : sig.cs_multiset) cm.push_back({size, mult});
    s["cs_multiset"] = cm;
    s["center_order"] = sig.center_order;
    s["derived_order"] = sig.derived_order;
    s["exponent"] = sig.exponent;
    json h = json::object();
    for (auto [k, v] : sig.order_histogram) h[std::to_string(k)] = v;
    s["order_histogram"] = h;
    j["signature"] = s;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "spec: " << csap::render_group_spec(spec) << "\n"
              << "order: " << G.order() << "\n"
              << "cs: " << join_set(cd.cs_set) << "\n"
              << "cs*: " << join_set(cd.cs_star_set) << "\n"
              << "rank: " << csap::conjugacy_rank(cd) << "\n"
              << "ap(cs): " << ap_to_text(ap_cs) << "\n"
              << "ap(cs*): "
              << (cd.cs_star_set.empty() ? "empty" : ap_to_text(ap_star)) << "\n"
              << "|Z(G)|: " << sig.center_order << "\n"
              << "|G'|: " << sig.derived_order << "\n"
              << "exponent: " << sig.exponent << "\n";
    if (two)
      std::cout << "largest two: m=" << two->first << " n=" << two->second
                << " gcd=" << std::gcd(two->first, two->second) << "\n";
    else
      std::cout << "largest two: absent\n";
    std::cout << "prime support of cs: " << join_set(support) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& id, const std::string& spec_text, bool as_json,
              bool require_applicable, long cap) {
  csap::GroupSpec spec = csap::parse_group_spec(spec_text);
  csap::TheoremReport rep = csap::run_check(id, spec, cap);
  if (as_json) {
    std::cout << csap::report_to_json(rep) << "\n";
  } else {
    std::cout << csap::to_string(rep.theorem_id) << ": "
              << (!rep.applicable ? "not applicable"
                                  : (*rep.verdict ? "pass" : "FAIL"))
              << "\n";
    for (const auto& [k, v] : rep.witnesses)
      std::cout << "  " << k << " = " << v << "\n";
    for (const auto& d : rep.diagnostics) std::cout << "  note: " << d << "\n";
  }
  if (rep.applicable && !*rep.verdict) return 2;
  if (!rep.applicable && require_applicable) return 3;
  return 0;
}

int cmd_corpus_run(const std::string& path, long cap) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open corpus file '" << path << "'\n";
    return 1;
  }
  auto entries = csap::parse_corpus(in);
  auto results = csap::run_corpus(entries, cap);
  long fails = 0, passes = 0, vacuous = 0;
  for (const auto& r : results) {
    json j;
    j["label"] = r.label;
    j["check"] = r.check;
    j["report"] = json::parse(csap::report_to_json(r.report));
    std::cout << j.dump() << "\n";
    if (!r.report.applicable)
      ++vacuous;
    else if (*r.report.verdict)
      ++passes;
    else
      ++fails;
  }
  json summary;
  summary["summary"] = {{"entries", entries.size()},
                        {"checks", results.size()},
                        {"pass", passes},
                        {"not_applicable", vacuous},
                        {"fail", fails}};
  std::cout << summary.dump() << "\n";
  return fails ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group conjugacy class size toolkit"};
  app.require_subcommand(1);
  long cap = csap::kDefaultOrderCap;
  app.add_option("--cap", cap, "group order cap (hard error when exceeded)");

  std::string spec_text, theorem_id, corpus_path;
  bool as_json = false, require_applicable = false;

  auto* analyze = app.add_subcommand("analyze", "class-size analysis of a group spec");
  analyze->add_option("spec", spec_text, "group spec")->required();
  analyze->add_flag("--json", as_json, "JSON output");

  auto* check = app.add_subcommand("check", "run one theorem checker");
  check->add_option("theorem", theorem_id, "t-kl|coprime|t246|construct|ito|kazarin|central-sylow")
      ->required();
  check->add_option("spec", spec_text, "group spec")->required();
  check->add_flag("--json", as_json, "JSON output");
  check->add_flag("--require-applicable", require_applicable,
                  "exit 3 when the hypotheses are not met");

  auto* corpus = app.add_subcommand("corpus", "corpus operations");
  auto* corpus_run = corpus->add_subcommand("run", "run all configured checks");
  corpus_run->add_option("file", corpus_path, "corpus config file")->required();

  auto* ntc = app.add_subcommand("nt", "number-theoretic tools");
  int max_exp = 62;
  long max_term = 1000000;
  int min_len = 3;
  std::vector<long> terms;
  auto* thompson = ntc->add_subcommand("thompson", "solutions of p^m = 2^n +- 1");
  thompson->add_option("--max-exp", max_exp, "largest exponent n (<= 62)");
  auto* apclassify = ntc->add_subcommand("ap-classify", "classify a primitive two-prime AP");
  apclassify->add_option("terms", terms, "AP terms")->required()->expected(-3);
  auto* apenum = ntc->add_subcommand("ap-enumerate", "enumerate primitive two-prime APs");
  apenum->add_option("--max-term", max_term, "largest allowed term");
  apenum->add_option("--min-len", min_len, "minimum AP length (>= 3)");
  ntc->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return cmd_analyze(spec_text, as_json, cap);
    if (*check) {
      bool known = false;
      for (const auto& id : csap::kAllCheckIds) known |= id == theorem_id;
      if (!known) {
        std::cerr << "error: unknown theorem id '" << theorem_id << "'\n";
        return 1;
      }
      return cmd_check(theorem_id, spec_text, as_json, require_applicable, cap);
    }
    if (*corpus_run) return cmd_corpus_run(corpus_path, cap);
    if (*thompson) {
      for (const auto& s : csap::nt::thompson_search(max_exp)) {
        json j;
        j["p"] = s.p;
        j["m"] = s.m;
        j["n"] = s.n;
        j["sign"] = s.sign > 0 ? "+" : "-";
        std::cout << j.dump() << "\n";
      }
      return 0;
    }
    if (*apclassify) {
      auto c = csap::nt::classify_two_prime_ap(terms);
      json j;
      j["terms"] = terms;
      j["case"] = csap::nt::to_string(c.label);
      if (c.p) j["p"] = c.p;
      if (c.q) j["q"] = c.q;
      if (c.alpha) j["alpha"] = c.alpha;
      if (c.beta) j["beta"] = c.beta;
      if (c.label == csap::nt::APCase::NOT_PRIMITIVE) {
        j["delta"] = c.delta;
        j["reduced"] = c.reduced;
        j["reduced_case"] =
            csap::nt::to_string(csap::nt::classify_two_prime_ap(c.reduced).label);
      }
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*apenum) {
      for (const auto& [ap, c] : csap::nt::enumerate_primitive_two_prime_aps(
               max_term, min_len)) {
        json j;
        j["terms"] = ap;
        j["case"] = csap::nt::to_string(c.label);
        std::cout << j.dump() << "\n";
      }
      return 0;
    }
  } catch (const csap::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
