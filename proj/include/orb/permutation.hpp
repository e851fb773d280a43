#pragma once

#include <string>
#include <vector>

#include "orb/errors.hpp"

namespace orb {

// A permutation of {0,…,n−1}, stored as its image array.  The composition
// convention is left-to-right throughout the library: (p ∘ q)(α) = q(p(α)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int degree);
  // Parses disjoint-cycle notation over 0-based points, e.g. "(0 1 2)(3 4)";
  // "()" denotes the identity.  Points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::string& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[size_t(point)]; }
  const std::vector<int>& images() const { return images_; }

  // Left-to-right product: (this · o)(α) = o(this(α)).
  Permutation compose(const Permutation& o) const;
  Permutation inverse() const;
  bool is_identity() const;
  long long order() const;  // lcm of cycle lengths

  std::string cycle_str() const;  // "()" for the identity

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  // Lexicographic on image arrays; gives every enumerated group a canonical
  // element order.
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

}  // namespace orb
