#include "orb/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "orb/rational.hpp"

namespace orb {
namespace {

// --------------------------------------------------------------- actions ----

Permutation induce_on_pairs(const Permutation& s, const std::vector<std::pair<int, int>>& pairs,
                            const std::vector<std::vector<int>>& pair_index) {
  std::vector<int> im(pairs.size());
  for (size_t k = 0; k < pairs.size(); ++k)
    im[k] = pair_index[size_t(s.apply(pairs[k].first))][size_t(s.apply(pairs[k].second))];
  return Permutation(std::move(im));
}

int pow_mod(int base, int exp, int mod) {
  long long acc = 1, b = ((base % mod) + mod) % mod;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
  }
  return static_cast<int>(acc);
}

// Least primitive root mod q: no proper divisor d of q−1 may have c^d = 1.
int primitive_root(int q) {
  for (int c = 2; c < q; ++c) {
    bool ok = true;
    for (int d = 1; d < q - 1 && ok; ++d)
      if ((q - 1) % d == 0 && pow_mod(c, d, q) == 1) ok = false;
    if (ok) return c;
  }
  fail(ErrorCode::Internal, "no primitive root found modulo " + std::to_string(q));
}

// ------------------------------------------------------ subgroup handling ----

std::vector<int> canonical_index_set(const GroupData& g, const std::vector<Permutation>& sub) {
  std::vector<int> idx;
  idx.reserve(sub.size());
  for (const Permutation& p : sub) idx.push_back(element_index(g, p));
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<Permutation> closure_of(int degree, const std::vector<Permutation>& gens,
                                    long long cap) {
  GroupData closed = enumerate_group(make_group(degree, gens), cap);
  return closed.elements;
}

// All conjugates of one subgroup under the group generators, as canonical
// index sets (the subgroup itself included).
std::set<std::vector<int>> conjugation_orbit(const GroupData& g,
                                             const std::vector<Permutation>& sub) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<Permutation>> queue{sub};
  seen.insert(canonical_index_set(g, sub));
  while (!queue.empty()) {
    std::vector<Permutation> cur = std::move(queue.back());
    queue.pop_back();
    for (const Permutation& s : g.generators) {
      Permutation si = s.inverse();
      std::vector<Permutation> img;
      img.reserve(cur.size());
      for (const Permutation& x : cur) img.push_back(si.compose(x).compose(s));
      std::sort(img.begin(), img.end());
      if (seen.insert(canonical_index_set(g, img)).second) queue.push_back(std::move(img));
    }
  }
  return seen;
}

std::vector<std::vector<Permutation>> sylow2_family(const GroupData& g) {
  require_internal(g.enumerated(), "Sylow search requires an enumerated group");
  long long pow2 = 1;
  while (g.order % (pow2 * 2) == 0) pow2 *= 2;
  if (pow2 == 1) fail(ErrorCode::NotFound, "the group has odd order; no Sylow 2-subgroups");

  // Grow a single 2-subgroup by repeatedly extending inside its normalizer.
  std::set<Permutation> current{Permutation::identity(g.degree)};
  while (static_cast<long long>(current.size()) < pow2) {
    std::vector<Permutation> normalizer;
    for (const Permutation& u : g.elements) {
      Permutation ui = u.inverse();
      bool norm = true;
      for (const Permutation& x : current)
        if (current.count(ui.compose(x).compose(u)) == 0) {
          norm = false;
          break;
        }
      if (norm) normalizer.push_back(u);
    }
    bool grown = false;
    for (const Permutation& y : normalizer) {
      if (current.count(y) != 0) continue;
      long long oy = y.order();
      if ((oy & (oy - 1)) != 0) continue;  // need 2-power order
      std::vector<Permutation> gens(current.begin(), current.end());
      gens.push_back(y);
      std::vector<Permutation> extended = closure_of(g.degree, gens, pow2);
      if (static_cast<long long>(extended.size()) <= static_cast<long long>(current.size()))
        continue;
      if ((extended.size() & (extended.size() - 1)) != 0) continue;
      current = std::set<Permutation>(extended.begin(), extended.end());
      grown = true;
      break;
    }
    require_internal(grown, "2-subgroup growth stalled below the Sylow order");
  }

  // Sylow's theorem: the full family is one conjugation orbit.
  std::set<std::vector<int>> orbit =
      conjugation_orbit(g, std::vector<Permutation>(current.begin(), current.end()));
  std::vector<std::vector<Permutation>> family;
  for (const std::vector<int>& idx : orbit) {
    std::vector<Permutation> sub;
    sub.reserve(idx.size());
    for (int e : idx) sub.push_back(g.elements[size_t(e)]);
    family.push_back(std::move(sub));
  }
  return family;  // set iteration order = lexicographic on index sets
}

std::vector<std::vector<Permutation>> a5_class_representatives(const GroupData& g) {
  require_internal(g.enumerated(), "subgroup search requires an enumerated group");
  std::vector<int> involutions, fives;
  for (int i = 0; i < static_cast<int>(g.elements.size()); ++i) {
    long long o = g.elements[size_t(i)].order();
    if (o == 2) involutions.push_back(i);
    if (o == 5) fives.push_back(i);
  }
  std::vector<std::vector<Permutation>> reps;
  std::set<std::vector<int>> known_sets;            // every conjugate of every found class
  std::vector<std::vector<int>> member_of(g.elements.size());  // element → known subgroup ids
  int subgroup_count = 0;
  for (int xi : involutions) {
    for (int yi : fives) {
      // If some already-known order-60 subgroup contains both generators, the
      // closure is that subgroup; skip without re-closing.
      const std::vector<int>&a = member_of[size_t(xi)], &b = member_of[size_t(yi)];
      bool covered = false;
      for (int id : a)
        if (std::find(b.begin(), b.end(), id) != b.end()) {
          covered = true;
          break;
        }
      if (covered) continue;
      const Permutation& x = g.elements[size_t(xi)];
      const Permutation& y = g.elements[size_t(yi)];
      if (x.compose(y).order() != 3) continue;
      // ⟨x,y⟩ with orders (2,5,3) is a nontrivial quotient of the (2,5,3)
      // triangle group, hence has order 60.
      std::vector<Permutation> sub = closure_of(g.degree, {x, y}, 60);
      require_internal(sub.size() == 60, "(2,5,3) closure must have order 60");
      std::vector<int> key = canonical_index_set(g, sub);
      if (known_sets.count(key) != 0) continue;
      reps.push_back(sub);
      for (const std::vector<int>& conj : conjugation_orbit(g, sub)) {
        if (!known_sets.insert(conj).second) continue;
        for (int e : conj) member_of[size_t(e)].push_back(subgroup_count);
        ++subgroup_count;
      }
    }
  }
  if (reps.empty()) fail(ErrorCode::NotFound, "no order-60 subgroup found");
  return reps;
}

// ---------------------------------------------------------------- builtin ----

GroupData cyclic_regular(int n) {
  std::vector<int> im(size_t(n), 0);
  for (int i = 0; i < n; ++i) im[size_t(i)] = (i + 1) % n;
  return enumerate_group(make_group(n, {Permutation(std::move(im))}));
}

}  // namespace

GroupData pairs_action(int n, bool alternating) {
  if (n < 4)
    fail(ErrorCode::DegreeTooSmall, "pairs action needs n >= 4, got " + std::to_string(n));
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_index(size_t(n), std::vector<int>(size_t(n), -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pair_index[size_t(i)][size_t(j)] = pair_index[size_t(j)][size_t(i)] =
          static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  std::vector<Permutation> base;
  if (alternating) {
    base.push_back(Permutation::from_cycles(n, "(0 1 2)"));
    // A long odd-length cycle: all n points when n is odd, else 1..n−1.
    std::string cyc = "(";
    int from = n % 2 == 1 ? 0 : 1;
    for (int i = from; i < n; ++i) cyc += (i > from ? " " : "") + std::to_string(i);
    cyc += ")";
    base.push_back(Permutation::from_cycles(n, cyc));
  } else {
    base.push_back(Permutation::from_cycles(n, "(0 1)"));
    std::string cyc = "(0";
    for (int i = 1; i < n; ++i) cyc += " " + std::to_string(i);
    cyc += ")";
    base.push_back(Permutation::from_cycles(n, cyc));
  }
  std::vector<Permutation> gens;
  gens.reserve(base.size());
  for (const Permutation& b : base) gens.push_back(induce_on_pairs(b, pairs, pair_index));
  return enumerate_group(make_group(static_cast<int>(pairs.size()), std::move(gens)));
}

GroupData psl2_line_action(int q, bool projective) {
  if (q < 3 || q > 23 || q % 2 == 0 || !is_prime_ll(q))
    fail(ErrorCode::UnsupportedField,
         "projective-line fixtures support odd primes q <= 23, got " + std::to_string(q));
  const int inf = q, degree = q + 1;
  std::vector<int> t_im(size_t(degree), 0), m_im(size_t(degree), 0), s_im(size_t(degree), 0);
  int c = primitive_root(q);
  int mult = projective ? c : pow_mod(c, 2, q);
  for (int z = 0; z < q; ++z) {
    t_im[size_t(z)] = (z + 1) % q;
    m_im[size_t(z)] = static_cast<int>(static_cast<long long>(mult) * z % q);
    s_im[size_t(z)] = z == 0 ? inf : (q - pow_mod(z, q - 2, q)) % q;  // z ↦ −1/z
  }
  t_im[size_t(inf)] = inf;
  m_im[size_t(inf)] = inf;
  s_im[size_t(inf)] = 0;
  GroupData g =
      enumerate_group(make_group(degree, {Permutation(std::move(t_im)), Permutation(std::move(m_im)),
                                          Permutation(std::move(s_im))}));
  long long expect = static_cast<long long>(q) * (static_cast<long long>(q) * q - 1);
  if (!projective) expect /= 2;
  require_internal(g.order == expect, "projective-line action has unexpected order " +
                                          std::to_string(g.order));
  return g;
}

GroupData coset_action(const GroupData& g, const std::vector<Permutation>& subgroup) {
  require_internal(g.enumerated(), "coset action requires an enumerated group");
  if (subgroup.empty()) fail(ErrorCode::NotASubgroup, "empty subgroup");
  std::set<Permutation> sub(subgroup.begin(), subgroup.end());
  if (sub.count(Permutation::identity(g.degree)) == 0)
    fail(ErrorCode::NotASubgroup, "subgroup does not contain the identity");
  for (const Permutation& x : sub)
    if (!group_contains(g, x))
      fail(ErrorCode::NotASubgroup, "element " + x.cycle_str() + " lies outside the group");
  for (const Permutation& x : sub)
    for (const Permutation& y : sub)
      if (sub.count(x.compose(y)) == 0)
        fail(ErrorCode::NotASubgroup, "subgroup not closed under composition");
  long long index = g.order / static_cast<long long>(sub.size());
  require_internal(index * static_cast<long long>(sub.size()) == g.order,
                   "subgroup order must divide the group order");
  if (index > 1000)
    fail(ErrorCode::IndexTooLarge, "coset action of index " + std::to_string(index));

  // Sweep elements in canonical order; the first member of each right coset
  // becomes its representative, so coset ids are canonical too.
  std::vector<int> coset_of(g.elements.size(), -1);
  std::vector<int> reps;
  for (int ei = 0; ei < static_cast<int>(g.elements.size()); ++ei) {
    if (coset_of[size_t(ei)] != -1) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(ei);
    for (const Permutation& h : sub) {
      int member = element_index(g, h.compose(g.elements[size_t(ei)]));
      require_internal(coset_of[size_t(member)] == -1 || coset_of[size_t(member)] == cid,
                       "coset assignment must be consistent");
      coset_of[size_t(member)] = cid;
    }
  }
  require_internal(static_cast<long long>(reps.size()) == index, "coset count must equal the index");

  std::vector<Permutation> gens;
  for (const Permutation& s : g.generators) {
    std::vector<int> im(reps.size());
    for (size_t k = 0; k < reps.size(); ++k)
      im[k] = coset_of[size_t(element_index(g, g.elements[size_t(reps[k])].compose(s)))];
    gens.push_back(Permutation(std::move(im)));
  }
  return enumerate_group(make_group(static_cast<int>(reps.size()), std::move(gens)));
}

std::vector<std::vector<Permutation>> find_subgroup(const GroupData& g, SubgroupTarget target) {
  switch (target) {
    case SubgroupTarget::A5: return a5_class_representatives(g);
    case SubgroupTarget::Sylow2: return sylow2_family(g);
  }
  fail(ErrorCode::BadInput, "unknown subgroup target");
}

GroupData conjugation_action(const GroupData& g,
                             const std::vector<std::vector<Permutation>>& family) {
  require_internal(g.enumerated(), "conjugation action requires an enumerated group");
  if (family.empty()) fail(ErrorCode::BadInput, "empty subgroup family");
  std::map<std::vector<int>, int> position;
  std::vector<std::vector<int>> sets;
  for (const std::vector<Permutation>& sub : family) sets.push_back(canonical_index_set(g, sub));
  std::sort(sets.begin(), sets.end());
  for (size_t k = 0; k < sets.size(); ++k) {
    if (!position.emplace(sets[k], static_cast<int>(k)).second)
      fail(ErrorCode::BadInput, "duplicate subgroup in the family");
  }
  std::vector<Permutation> gens;
  for (const Permutation& s : g.generators) {
    Permutation si = s.inverse();
    std::vector<int> im(sets.size());
    for (size_t k = 0; k < sets.size(); ++k) {
      std::vector<int> img;
      img.reserve(sets[k].size());
      for (int e : sets[k])
        img.push_back(element_index(g, si.compose(g.elements[size_t(e)]).compose(s)));
      std::sort(img.begin(), img.end());
      auto it = position.find(img);
      if (it == position.end())
        fail(ErrorCode::NotClosed, "family is not closed under conjugation by " + s.cycle_str());
      im[k] = it->second;
    }
    gens.push_back(Permutation(std::move(im)));
  }
  return enumerate_group(make_group(static_cast<int>(sets.size()), std::move(gens)));
}

const std::vector<std::string>& builtin_fixture_names() {
  static const std::vector<std::string> names = {
      "a6-pairs",        "s6-pairs",           "a7-pairs",
      "s7-pairs",        "psl25-line",         "pgl27-sylow2",
      "psl27-sylow2",    "psl219-a5cosets",    "psl219-a5cosets-alt",
      "c5-regular",      "c6-regular",
  };
  return names;
}

BuiltinFixture build_fixture(const std::string& name) {
  // Construction of the larger fixtures costs a few seconds; cache them so
  // repeated lookups (tests, CLI verify) stay cheap.
  static std::map<std::string, BuiltinFixture> cache;
  auto hit = cache.find(name);
  if (hit != cache.end()) return hit->second;

  BuiltinFixture f;
  auto desc = [&](int degree, long long order, int rank, std::vector<long long> subdegrees,
                  bool primitive, std::string golden) {
    f.descriptor = {name, degree, order, rank, std::move(subdegrees), primitive,
                    std::move(golden)};
  };
  if (name == "a6-pairs") {
    desc(15, 360, 3, {1, 6, 8}, true, "eig-a6-pairs");
    f.group = pairs_action(6, true);
  } else if (name == "s6-pairs") {
    desc(15, 720, 3, {1, 6, 8}, true, "eig-s6-pairs");
    f.group = pairs_action(6, false);
  } else if (name == "a7-pairs") {
    desc(21, 2520, 3, {1, 10, 10}, true, "eig-a7-pairs");
    f.group = pairs_action(7, true);
  } else if (name == "s7-pairs") {
    desc(21, 5040, 3, {1, 10, 10}, true, "eig-s7-pairs");
    f.group = pairs_action(7, false);
  } else if (name == "psl25-line") {
    desc(6, 60, 2, {1, 5}, true, "eig-psl25-line");
    f.group = psl2_line_action(5, false);
  } else if (name == "pgl27-sylow2") {
    desc(21, 336, 4, {1, 4, 8, 8}, true, "eig-pgl27-sylow2");
    GroupData pgl = psl2_line_action(7, true);
    f.group = conjugation_action(pgl, find_subgroup(pgl, SubgroupTarget::Sylow2));
  } else if (name == "psl27-sylow2") {
    desc(21, 168, 6, {1, 2, 2, 4, 4, 8}, false, "");
    GroupData psl = psl2_line_action(7, false);
    f.group = conjugation_action(psl, find_subgroup(psl, SubgroupTarget::Sylow2));
  } else if (name == "psl219-a5cosets" || name == "psl219-a5cosets-alt") {
    desc(57, 3420, 4, {1, 6, 20, 30}, true, "eig-psl219-a5cosets");
    GroupData psl = psl2_line_action(19, false);
    std::vector<std::vector<Permutation>> classes = find_subgroup(psl, SubgroupTarget::A5);
    require_internal(classes.size() == 2, "expected two classes of order-60 subgroups, found " +
                                              std::to_string(classes.size()));
    f.group = coset_action(psl, classes[name == "psl219-a5cosets" ? 0 : 1]);
  } else if (name == "c5-regular") {
    desc(5, 5, 5, {1, 1, 1, 1, 1}, true, "");
    f.group = cyclic_regular(5);
  } else if (name == "c6-regular") {
    desc(6, 6, 6, {1, 1, 1, 1, 1, 1}, false, "");
    f.group = cyclic_regular(6);
  } else {
    fail(ErrorCode::NotFound, "unknown fixture: " + name);
  }
  cache.emplace(name, f);
  return f;
}

std::string group_to_json(const GroupData& g) {
  nlohmann::json j;
  j["degree"] = g.degree;
  nlohmann::json arr = nlohmann::json::array();
  for (const Permutation& p : g.generators) arr.push_back(p.images());
  j["generators"] = std::move(arr);
  return j.dump();
}

GroupData group_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadInput, std::string("invalid group JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators") ||
      !j["degree"].is_number_integer() || !j["generators"].is_array())
    fail(ErrorCode::BadInput, "group JSON must be {\"degree\": n, \"generators\": [[..],..]}");
  int degree = j["degree"].get<int>();
  std::vector<Permutation> gens;
  for (const nlohmann::json& entry : j["generators"]) {
    if (!entry.is_array()) fail(ErrorCode::BadInput, "generator must be an image array");
    std::vector<int> im;
    for (const nlohmann::json& v : entry) {
      if (!v.is_number_integer()) fail(ErrorCode::BadInput, "generator images must be integers");
      im.push_back(v.get<int>());
    }
    if (static_cast<int>(im.size()) != degree)
      fail(ErrorCode::DegreeMismatch, "generator length differs from the declared degree");
    gens.push_back(Permutation(std::move(im)));
  }
  return make_group(degree, std::move(gens));
}

}  // namespace orb
