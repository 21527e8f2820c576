#ifndef CSAP_SPECPARSE_HPP
#define CSAP_SPECPARSE_HPP

#include <string>
#include <vector>

#include "csap/construct.hpp"

namespace csap {

/// Abstract syntax of the group-spec mini-language:
///   atoms       C(n) D(n) Q(n) S(n) A(n) E(p,k) Gn(n) W(k)
///   combinators X x Y, sd(n,m,k), sdm(p,dim,m,[[..],..]),
///               f246(ASPEC,[names]), perm(d; (cycles), ...)
/// Cycle notation is 1-based in text and 0-based internally.
struct GroupSpec {
  enum class Kind {
    Cyclic,
    Dihedral,
    Quaternion,
    Symmetric,
    Alternating,
    ElemAbelian,
    FamilyGn,
    Wreath,
    DirectProduct,
    SemidirectCyclic,
    SemidirectMatrix,
    Family246,
    ExplicitPerm,
  };

  Kind kind = Kind::Cyclic;
  std::vector<long> params;
  std::vector<GroupSpec> children;               // product: 2; f246: 1
  std::vector<std::vector<long>> matrix;         // sdm
  std::vector<std::string> inverting;            // f246 generator names
  long degree = 0;                               // perm
  std::vector<std::vector<std::vector<int>>> cycles;  // perm: gen -> cycles

  bool operator==(const GroupSpec&) const = default;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

GroupSpec parse_group_spec(const std::string& text);

/// Canonical text; rendering then reparsing yields an equal tree.
std::string render_group_spec(const GroupSpec& spec);

FiniteGroup build_group(const GroupSpec& spec, long cap = kDefaultOrderCap);

/// Build with the f246 witnesses when the root is f246 (needed by the
/// construction-lemma checker); other roots get Sylow-based witnesses later.
bool is_family_246(const GroupSpec& spec);
Family246 build_family_246(const GroupSpec& spec, long cap = kDefaultOrderCap);

}  // namespace csap

#endif
