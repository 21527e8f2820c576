#include "csap/specparse.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace csap {

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = parse_product();
    skip_ws();
    if (pos_ != text_.size()) err("trailing input");
    return s;
  }

private:
  [[noreturn]] void err(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      err(std::string("expected '") + c + "'");
    ++pos_;
  }

  long number() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      err("expected a number");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000L) err("number too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) err("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  // the product operator is the character 'x'; no atom name starts with it,
  // so no lookahead is needed
  bool accept_product_op() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      return true;
    }
    return false;
  }

  GroupSpec parse_product() {
    GroupSpec left = parse_term();
    while (accept_product_op()) {
      GroupSpec node;
      node.kind = GroupSpec::Kind::DirectProduct;
      node.children.push_back(std::move(left));
      node.children.push_back(parse_term());
      left = std::move(node);
    }
    return left;
  }

  GroupSpec parse_term() {
    skip_ws();
    if (peek_char('(')) {
      expect('(');
      GroupSpec s = parse_product();
      expect(')');
      return s;
    }
    std::size_t at = pos_;
    std::string name = ident();
    GroupSpec s;
    auto one_param = [&](GroupSpec::Kind k) {
      s.kind = k;
      expect('(');
      s.params.push_back(number());
      expect(')');
    };
    if (name == "C") one_param(GroupSpec::Kind::Cyclic);
    else if (name == "D") one_param(GroupSpec::Kind::Dihedral);
    else if (name == "Q") one_param(GroupSpec::Kind::Quaternion);
    else if (name == "S") one_param(GroupSpec::Kind::Symmetric);
    else if (name == "A") one_param(GroupSpec::Kind::Alternating);
    else if (name == "Gn") one_param(GroupSpec::Kind::FamilyGn);
    else if (name == "W") one_param(GroupSpec::Kind::Wreath);
    else if (name == "E") {
      s.kind = GroupSpec::Kind::ElemAbelian;
      expect('(');
      s.params.push_back(number());
      expect(',');
      s.params.push_back(number());
      expect(')');
    } else if (name == "sd") {
      s.kind = GroupSpec::Kind::SemidirectCyclic;
      expect('(');
      s.params.push_back(number());
      expect(',');
      s.params.push_back(number());
      expect(',');
      s.params.push_back(number());
      expect(')');
    } else if (name == "sdm") {
      s.kind = GroupSpec::Kind::SemidirectMatrix;
      expect('(');
      s.params.push_back(number());
      expect(',');
      s.params.push_back(number());
      expect(',');
      s.params.push_back(number());
      expect(',');
      expect('[');
      do {
        expect('[');
        std::vector<long> row;
        do row.push_back(number());
        while (accept(','));
        expect(']');
        s.matrix.push_back(std::move(row));
      } while (accept(','));
      expect(']');
      expect(')');
    } else if (name == "f246") {
      s.kind = GroupSpec::Kind::Family246;
      expect('(');
      s.children.push_back(parse_product());
      expect(',');
      expect('[');
      if (!peek_char(']')) {
        do s.inverting.push_back(ident());
        while (accept(','));
      }
      expect(']');
      expect(')');
    } else if (name == "perm") {
      s.kind = GroupSpec::Kind::ExplicitPerm;
      expect('(');
      s.degree = number();
      expect(';');
      do {
        std::vector<std::vector<int>> gen;
        while (peek_char('(')) {
          expect('(');
          std::vector<int> cycle;
          while (!peek_char(')')) cycle.push_back(static_cast<int>(number()));
          expect(')');
          if (!cycle.empty()) gen.push_back(std::move(cycle));
        }
        s.cycles.push_back(std::move(gen));
      } while (accept(','));
      expect(')');
    } else {
      pos_ = at;
      err("unknown constructor '" + name + "'");
    }
    return s;
  }

  bool accept(char c) {
    if (peek_char(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string render_perm_gen(const std::vector<std::vector<int>>& cycles) {
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cycles) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i] + 1;  // back to 1-based
    }
    out << ')';
  }
  return out.str();
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  Parser p(text);
  GroupSpec s = p.parse();
  // convert perm cycles from 1-based text to 0-based internal form
  struct Fix {
    static void run(GroupSpec& s) {
      if (s.kind == GroupSpec::Kind::ExplicitPerm) {
        if (s.degree < 1) throw ParseError("perm degree must be positive", 0);
        for (auto& gen : s.cycles) {
          std::vector<bool> seen(s.degree, false);
          for (auto& cyc : gen)
            for (auto& pt : cyc) {
              if (pt < 1 || pt > s.degree)
                throw ParseError("cycle point " + std::to_string(pt) +
                                     " outside 1.." + std::to_string(s.degree),
                                 0);
              if (seen[pt - 1])
                throw ParseError("cycle point " + std::to_string(pt) +
                                     " repeated within one generator",
                                 0);
              seen[pt - 1] = true;
              --pt;
            }
        }
      }
      for (auto& c : s.children) run(c);
    }
  };
  Fix::run(s);
  return s;
}

std::string render_group_spec(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  std::ostringstream out;
  auto p = [&](std::size_t i) { return std::to_string(s.params[i]); };
  switch (s.kind) {
    case K::Cyclic: return "C(" + p(0) + ")";
    case K::Dihedral: return "D(" + p(0) + ")";
    case K::Quaternion: return "Q(" + p(0) + ")";
    case K::Symmetric: return "S(" + p(0) + ")";
    case K::Alternating: return "A(" + p(0) + ")";
    case K::FamilyGn: return "Gn(" + p(0) + ")";
    case K::Wreath: return "W(" + p(0) + ")";
    case K::ElemAbelian: return "E(" + p(0) + "," + p(1) + ")";
    case K::SemidirectCyclic:
      return "sd(" + p(0) + "," + p(1) + "," + p(2) + ")";
    case K::SemidirectMatrix: {
      out << "sdm(" << p(0) << "," << p(1) << "," << p(2) << ",[";
      for (std::size_t i = 0; i < s.matrix.size(); ++i) {
        if (i) out << ",";
        out << "[";
        for (std::size_t j = 0; j < s.matrix[i].size(); ++j) {
          if (j) out << ",";
          out << s.matrix[i][j];
        }
        out << "]";
      }
      out << "])";
      return out.str();
    }
    case K::DirectProduct: {
      auto wrap = [](const GroupSpec& c) {
        // parenthesize nested products on the right to keep left association
        std::string t = render_group_spec(c);
        if (c.kind == K::DirectProduct) return "(" + t + ")";
        return t;
      };
      return wrap(s.children[0]) + " x " + wrap(s.children[1]);
    }
    case K::Family246: {
      out << "f246(" << render_group_spec(s.children[0]) << ",[";
      for (std::size_t i = 0; i < s.inverting.size(); ++i) {
        if (i) out << ",";
        out << s.inverting[i];
      }
      out << "])";
      return out.str();
    }
    case K::ExplicitPerm: {
      out << "perm(" << s.degree << "; ";
      for (std::size_t i = 0; i < s.cycles.size(); ++i) {
        if (i) out << ", ";
        out << render_perm_gen(s.cycles[i]);
      }
      out << ")";
      return out.str();
    }
  }
  return "";
}

namespace {

std::set<int> resolve_inverting(const FiniteGroup& A,
                                const std::vector<std::string>& names) {
  std::set<int> positions;
  const auto& gnames = A.generator_names();
  for (const auto& name : names) {
    int found = -1;
    // positional alias g1..gk always works
    if (name.size() >= 2 && name[0] == 'g' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int idx = std::stoi(name.substr(1)) - 1;
      if (idx >= 0 && idx < static_cast<int>(A.generators().size())) found = idx;
    }
    if (found == -1) {
      for (std::size_t i = 0; i < gnames.size(); ++i) {
        if (gnames[i] == name) {
          if (found != -1)
            throw std::invalid_argument("ambiguous generator name '" + name + "'");
          found = static_cast<int>(i);
        }
      }
    }
    if (found == -1)
      throw std::invalid_argument("unknown generator name '" + name + "'");
    positions.insert(found);
  }
  return positions;
}

}  // namespace

bool is_family_246(const GroupSpec& s) {
  return s.kind == GroupSpec::Kind::Family246;
}

Family246 build_family_246(const GroupSpec& s, long cap) {
  if (!is_family_246(s)) throw std::invalid_argument("spec is not f246");
  FiniteGroup A = build_group(s.children[0], cap);
  return family_246(A, resolve_inverting(A, s.inverting), cap);
}

FiniteGroup build_group(const GroupSpec& s, long cap) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::Cyclic: return cyclic_group(s.params[0], cap);
    case K::Dihedral: return dihedral_group(s.params[0], cap);
    case K::Quaternion: return quaternion_group(s.params[0], cap);
    case K::Symmetric: return symmetric_group(static_cast<int>(s.params[0]), cap);
    case K::Alternating: return alternating_group(static_cast<int>(s.params[0]), cap);
    case K::ElemAbelian:
      return elem_abelian_group(s.params[0], static_cast<int>(s.params[1]), cap);
    case K::FamilyGn: return family_gn(static_cast<int>(s.params[0]), cap);
    case K::Wreath: return wreath_c2_ck(static_cast<int>(s.params[0]), cap);
    case K::DirectProduct:
      return direct_product(build_group(s.children[0], cap),
                            build_group(s.children[1], cap), cap);
    case K::SemidirectCyclic:
      return semidirect_cyclic(s.params[0], s.params[1], s.params[2], cap);
    case K::SemidirectMatrix:
      return semidirect_matrix(s.params[0], static_cast<int>(s.params[1]),
                               s.params[2], s.matrix, cap);
    case K::Family246: return build_family_246(s, cap).G;
    case K::ExplicitPerm: {
      if (s.degree < 1) throw std::invalid_argument("perm: degree must be positive");
      std::vector<Permutation> gens;
      for (const auto& gen : s.cycles) {
        std::vector<int> im(s.degree);
        std::iota(im.begin(), im.end(), 0);
        for (const auto& cyc : gen) {
          for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from >= s.degree || to >= s.degree)
              throw std::invalid_argument("perm: cycle point exceeds degree");
            im[from] = to;
          }
        }
        gens.push_back(Permutation(std::move(im)));
      }
      if (gens.empty()) gens.push_back(Permutation::identity(static_cast<int>(s.degree)));
      FiniteGroup G = FiniteGroup::enumerate_closure(std::move(gens), cap);
      std::vector<std::string> names;
      for (std::size_t i = 0; i < s.cycles.size(); ++i)
        names.push_back("g" + std::to_string(i + 1));
      if (!names.empty()) G.set_generator_names(std::move(names));
      return G;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace csap
