#ifndef CSAP_PERM_HPP
#define CSAP_PERM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace csap {

/// A permutation of {0..degree-1}, stored as its image table.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  std::vector<int> images_;
};

/// Apply p first, then q: result[i] = q[p[i]].
Permutation compose(const Permutation& p, const Permutation& q);

/// g^{-1} * x * g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"; "()" for identity.
std::string to_cycle_string(const Permutation& p);

}  // namespace csap

#endif
