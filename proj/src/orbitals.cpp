#include "orb/orbitals.hpp"

#include <algorithm>
#include <numeric>

namespace orb {

OrbitalDecomposition orbital_decomposition(const GroupData& g) {
  if (!is_transitive(g))
    fail(ErrorCode::NotTransitive,
         "pair-orbit decomposition requires a transitive action; point orbit of 0 has size " +
             std::to_string(point_orbit(g, 0).size()) + " of " + std::to_string(g.degree));
  const int n = g.degree;
  const size_t nn = size_t(n) * size_t(n);
  std::vector<int> raw(nn, -1);
  int raw_count = 0;
  std::vector<size_t> stack;
  for (size_t start = 0; start < nn; ++start) {
    if (raw[start] != -1) continue;
    int id = raw_count++;
    raw[start] = id;
    stack.assign(1, start);
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      int a = static_cast<int>(cur / size_t(n));
      int b = static_cast<int>(cur % size_t(n));
      for (const Permutation& s : g.generators) {
        size_t img = size_t(s.apply(a)) * size_t(n) + size_t(s.apply(b));
        if (raw[img] == -1) {
          raw[img] = id;
          stack.push_back(img);
        }
      }
    }
  }
  // (0,0) is visited first, so the diagonal orbit has raw id 0.
  require_internal(raw[0] == 0, "diagonal class must be discovered first");

  // Canonical order: diagonal first, then by (subdegree, least witness in row 0).
  std::vector<long long> raw_subdeg(size_t(raw_count), 0);
  std::vector<int> witness(size_t(raw_count), n);
  for (int b = 0; b < n; ++b) {
    int c = raw[size_t(b)];  // row 0: entries (0, b)
    ++raw_subdeg[size_t(c)];
    witness[size_t(c)] = std::min(witness[size_t(c)], b);
  }
  for (int c = 0; c < raw_count; ++c)
    require_internal(witness[size_t(c)] < n, "every class must appear in row 0");
  std::vector<int> order(size_t(raw_count), 0);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (x == 0 || y == 0) return x == 0;  // diagonal stays first
    if (raw_subdeg[size_t(x)] != raw_subdeg[size_t(y)])
      return raw_subdeg[size_t(x)] < raw_subdeg[size_t(y)];
    return witness[size_t(x)] < witness[size_t(y)];
  });
  std::vector<int> to_canonical(size_t(raw_count), 0);
  for (int k = 0; k < raw_count; ++k) to_canonical[size_t(order[size_t(k)])] = k;

  OrbitalDecomposition od;
  od.n = n;
  od.r = raw_count;
  od.color.resize(nn);
  for (size_t i = 0; i < nn; ++i) od.color[i] = to_canonical[size_t(raw[i])];
  od.subdegrees.assign(size_t(raw_count), 0);
  for (int b = 0; b < n; ++b) ++od.subdegrees[size_t(od.color_at(0, b))];
  od.pairing.assign(size_t(raw_count), -1);
  for (int b = 0; b < n; ++b) {
    int c = od.color_at(0, b);
    int rev = od.color_at(b, 0);
    require_internal(od.pairing[size_t(c)] == -1 || od.pairing[size_t(c)] == rev,
                     "pair reversal must be class-constant");
    od.pairing[size_t(c)] = rev;
  }
  for (int c = 0; c < raw_count; ++c) {
    require_internal(od.pairing[size_t(od.pairing[size_t(c)])] == c, "pairing must be an involution");
    require_internal(od.subdegrees[size_t(c)] == od.subdegrees[size_t(od.pairing[size_t(c)])],
                     "paired classes must have equal subdegrees");
  }
  require_internal(od.subdegrees[0] == 1 && od.pairing[0] == 0,
                   "diagonal class must be the trivial suborbit");
  require_internal(std::accumulate(od.subdegrees.begin(), od.subdegrees.end(), 0LL) == n,
                   "subdegrees must sum to the degree");
  return od;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[size_t(x)] != x) {
    parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    x = parent[size_t(x)];
  }
  return x;
}

// Size of the block containing 0 in the minimal G-congruence merging {0, β}.
int minimal_block_size(const GroupData& g, int beta) {
  const int n = g.degree;
  std::vector<int> parent(size_t(n), 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a == b) return false;
    parent[size_t(std::max(a, b))] = std::min(a, b);
    return true;
  };
  unite(0, beta);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Permutation& s : g.generators)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (find_root(parent, a) == find_root(parent, b) &&
              unite(s.apply(a), s.apply(b)))
            changed = true;
  }
  int root0 = find_root(parent, 0);
  int size = 0;
  for (int x = 0; x < n; ++x)
    if (find_root(parent, x) == root0) ++size;
  return size;
}

}  // namespace

bool is_primitive_blocks(const GroupData& g) {
  if (!is_transitive(g))
    fail(ErrorCode::NotTransitive, "primitivity is defined for transitive actions only");
  if (g.degree == 1) return true;
  for (int beta = 1; beta < g.degree; ++beta)
    if (minimal_block_size(g, beta) != g.degree) return false;
  return true;
}

}  // namespace orb
