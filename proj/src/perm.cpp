#include "csap/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace csap {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of different degree");
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = q[p[i]];
  return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g.inverse(), x), g);
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<char> done(p.degree(), 0);
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (done[i] || p[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << j;
      done[j] = 1;
      j = p[j];
      first = false;
    } while (j != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace csap
