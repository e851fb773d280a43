#include "orb/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "orb/rational.hpp"

namespace orb {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || size_t(x) >= images_.size() || seen[size_t(x)])
      fail(ErrorCode::BadInput, "image array is not a bijection on {0..n-1}");
    seen[size_t(x)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(size_t(degree), 0);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::string& cycles) {
  std::vector<int> im(size_t(degree), 0);
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> moved(size_t(degree), 0);
  size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
  };
  skip_ws();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') fail(ErrorCode::BadInput, "expected '(' in cycle notation: " + cycles);
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < cycles.size() && cycles[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(cycles[pos])))
        fail(ErrorCode::BadInput, "expected a point index in cycle notation: " + cycles);
      int v = 0;
      while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos])))
        v = v * 10 + (cycles[pos++] - '0');
      if (v >= degree)
        fail(ErrorCode::BadInput, "point " + std::to_string(v) + " out of range in " + cycles);
      if (moved[size_t(v)])
        fail(ErrorCode::BadInput, "point " + std::to_string(v) + " repeated in " + cycles);
      moved[size_t(v)] = 1;
      cyc.push_back(v);
      skip_ws();
    }
    if (pos >= cycles.size()) fail(ErrorCode::BadInput, "unterminated cycle in " + cycles);
    ++pos;  // ')'
    for (size_t i = 0; i < cyc.size(); ++i) im[size_t(cyc[i])] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (degree() != o.degree())
    fail(ErrorCode::DegreeMismatch, "composing permutations of degree " +
                                        std::to_string(degree()) + " and " +
                                        std::to_string(o.degree()));
  std::vector<int> im(images_.size());
  for (size_t a = 0; a < images_.size(); ++a) im[a] = o.images_[size_t(images_[a])];
  Permutation p;
  p.images_ = std::move(im);  // composition of bijections needs no re-validation
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t a = 0; a < images_.size(); ++a) im[size_t(images_[a])] = static_cast<int>(a);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (size_t a = 0; a < images_.size(); ++a)
    if (images_[a] != static_cast<int>(a)) return false;
  return true;
}

long long Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  long long ord = 1;
  for (size_t a = 0; a < images_.size(); ++a) {
    if (seen[a]) continue;
    long long len = 0;
    for (size_t b = a; !seen[b]; b = size_t(images_[b])) {
      seen[b] = 1;
      ++len;
    }
    ord = lcm_ll(ord, len);
  }
  return ord;
}

std::string Permutation::cycle_str() const {
  std::vector<char> seen(images_.size(), 0);
  std::string out;
  for (size_t a = 0; a < images_.size(); ++a) {
    if (seen[a] || images_[a] == static_cast<int>(a)) continue;
    out += "(";
    bool first = true;
    for (size_t b = a; !seen[b]; b = size_t(images_[b])) {
      seen[b] = 1;
      if (!first) out += " ";
      out += std::to_string(b);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace orb
