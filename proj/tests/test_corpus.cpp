#include <doctest.h>

#include <sstream>

#include "csap/corpus.hpp"

using namespace csap;

TEST_CASE("parse_corpus format") {
  std::istringstream in(
      "# comment line\n"
      "s3 = S(3) ; t-kl, ito\n"
      "\n"
      "f21 = sd(7,3,2)   # trailing comment\n"
      "g2 = Gn(2) ; all\n");
  auto entries = parse_corpus(in);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].label == "s3");
  CHECK(entries[0].checks == std::vector<std::string>{"t-kl", "ito"});
  CHECK(entries[1].label == "f21");
  CHECK(entries[1].checks == kAllCheckIds);  // empty list means all
  CHECK(entries[2].checks == kAllCheckIds);
}

TEST_CASE("parse_corpus rejects malformed input") {
  std::istringstream dup("a = S(3)\na = S(4)\n");
  CHECK_THROWS_WITH_AS(parse_corpus(dup), doctest::Contains("duplicate"),
                       std::exception);

  std::istringstream noeq("just words\n");
  CHECK_THROWS(parse_corpus(noeq));

  std::istringstream badspec("a = S(3\n");
  CHECK_THROWS(parse_corpus(badspec));

  std::istringstream badcheck("a = S(3) ; frobnicate\n");
  CHECK_THROWS_WITH_AS(parse_corpus(badcheck),
                       doctest::Contains("unknown check"), std::exception);

  std::istringstream empty("# nothing\n\n");
  CHECK(parse_corpus(empty).empty());
}

TEST_CASE("run_corpus produces zero fails on a known-good slice") {
  std::istringstream in(
      "s3 = S(3)\n"
      "s4 = S(4)\n"
      "f21 = sd(7,3,2)\n"
      "f20 = sd(5,4,2)\n"
      "g2c2 = Gn(2) x C(2)\n"
      "d4s = f246(D(4),[s])\n"
      "q8 = Q(8) ; ito, kazarin, central-sylow\n");
  auto entries = parse_corpus(in);
  auto results = run_corpus(entries, kDefaultOrderCap);
  CHECK(results.size() == 6 * kAllCheckIds.size() + 3);
  int applicable = 0;
  for (const auto& r : results) {
    CHECK(r.report.passed());
    if (r.report.applicable) ++applicable;
  }
  CHECK(applicable > 0);
}

TEST_CASE("run_check dispatches construct with f246 witnesses") {
  GroupSpec spec = parse_group_spec("f246(D(4),[s])");
  TheoremReport r = run_check("construct", spec, kDefaultOrderCap);
  CHECK(r.applicable);
  CHECK(r.passed());
  // non-f246 roots fall back to Sylow subgroups
  TheoremReport s = run_check("construct", parse_group_spec("S(4)"),
                              kDefaultOrderCap);
  CHECK(!s.applicable);
  CHECK_THROWS(run_check("nonsense", spec, kDefaultOrderCap));
}
