#include "orb/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace orb {

GroupData make_group(int degree, std::vector<Permutation> generators) {
  if (degree <= 0) fail(ErrorCode::BadInput, "group degree must be positive");
  if (generators.empty()) fail(ErrorCode::BadInput, "a group needs at least one generator");
  for (const Permutation& p : generators)
    if (p.degree() != degree)
      fail(ErrorCode::DegreeMismatch, "generator of degree " + std::to_string(p.degree()) +
                                          " in a group of degree " + std::to_string(degree));
  GroupData g;
  g.degree = degree;
  g.generators = std::move(generators);
  return g;
}

GroupData enumerate_group(const GroupData& g, long long cap) {
  if (g.generators.empty()) fail(ErrorCode::BadInput, "cannot enumerate without generators");
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(g.degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& s : g.generators) {
      Permutation next = cur.compose(s);
      if (seen.insert(next).second) {
        if (static_cast<long long>(seen.size()) > cap)
          fail(ErrorCode::CapExceeded,
               "group closure exceeded the cap of " + std::to_string(cap) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  GroupData out;
  out.degree = g.degree;
  out.generators = g.generators;
  out.elements.assign(seen.begin(), seen.end());  // set order = canonical sorted order
  out.order = static_cast<long long>(out.elements.size());
  return out;
}

bool group_contains(const GroupData& g, const Permutation& p) {
  require_internal(g.enumerated(), "membership test requires an enumerated group");
  return std::binary_search(g.elements.begin(), g.elements.end(), p);
}

int element_index(const GroupData& g, const Permutation& p) {
  require_internal(g.enumerated(), "element_index requires an enumerated group");
  auto it = std::lower_bound(g.elements.begin(), g.elements.end(), p);
  if (it == g.elements.end() || *it != p)
    fail(ErrorCode::NotFound, "permutation " + p.cycle_str() + " is not in the group");
  return static_cast<int>(it - g.elements.begin());
}

std::vector<int> point_orbit(const GroupData& g, int start) {
  require_internal(start >= 0 && start < g.degree, "orbit start point out of range");
  std::vector<char> seen(size_t(g.degree), 0);
  std::vector<int> orbit{start};
  seen[size_t(start)] = 1;
  for (size_t i = 0; i < orbit.size(); ++i)
    for (const Permutation& s : g.generators) {
      int img = s.apply(orbit[i]);
      if (!seen[size_t(img)]) {
        seen[size_t(img)] = 1;
        orbit.push_back(img);
      }
    }
  return orbit;
}

bool is_transitive(const GroupData& g) {
  return static_cast<int>(point_orbit(g, 0).size()) == g.degree;
}

long long normalizer_index(const GroupData& g, long long p) {
  require_internal(g.enumerated(), "normalizer_index requires an enumerated group");
  if (p <= 1 || g.order % p != 0)
    fail(ErrorCode::NoElementOfOrderP,
         std::to_string(p) + " does not divide the group order " + std::to_string(g.order));
  if ((g.order / p) % p == 0)
    fail(ErrorCode::PSquaredDividesOrder,
         std::to_string(p) + "^2 divides the group order " + std::to_string(g.order) +
             "; the order-p subgroup is not determined up to conjugacy this way");
  const Permutation* gen = nullptr;
  for (const Permutation& e : g.elements)
    if (e.order() == p) {
      gen = &e;
      break;
    }
  if (gen == nullptr)
    fail(ErrorCode::NoElementOfOrderP, "no element of order " + std::to_string(p) + " found");
  std::set<Permutation> subgroup;
  Permutation x = Permutation::identity(g.degree);
  for (long long k = 0; k < p; ++k) {
    subgroup.insert(x);
    x = x.compose(*gen);
  }
  long long size = 0;
  for (const Permutation& u : g.elements) {
    Permutation conj = u.inverse().compose(*gen).compose(u);
    if (subgroup.count(conj) != 0) ++size;  // u normalizes the cyclic subgroup
  }
  require_internal(size % p == 0, "normalizer order must be divisible by p");
  return size / p;
}

}  // namespace orb
