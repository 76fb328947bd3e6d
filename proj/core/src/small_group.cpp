#include "minrep/small_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "minrep/errors.hpp"

namespace minrep {

namespace {

constexpr std::uint32_t kTableLimit = 4096;

}  // namespace

SmallGroup SmallGroup::cyclic(std::uint32_t k) {
  if (k == 0 || k > kTableLimit) throw InvalidInput("SmallGroup::cyclic: bad order");
  SmallGroup G;
  G.size = k;
  G.mul.resize(std::size_t(k) * k);
  G.inv.resize(k);
  for (std::uint32_t x = 0; x < k; ++x) {
    for (std::uint32_t y = 0; y < k; ++y) G.mul[x * k + y] = static_cast<std::uint16_t>((x + y) % k);
    G.inv[x] = static_cast<std::uint16_t>((k - x) % k);
  }
  return G;
}

SmallGroup SmallGroup::from_table(const std::vector<std::vector<std::uint16_t>>& table) {
  const std::uint32_t k = static_cast<std::uint32_t>(table.size());
  if (k == 0 || k > kTableLimit) throw InvalidInput("SmallGroup::from_table: bad order");
  SmallGroup G;
  G.size = k;
  G.mul.resize(std::size_t(k) * k);
  G.inv.assign(k, UINT16_MAX);
  for (std::uint32_t x = 0; x < k; ++x) {
    if (table[x].size() != k) throw InvalidInput("SmallGroup::from_table: ragged table");
    for (std::uint32_t y = 0; y < k; ++y) {
      if (table[x][y] >= k) throw InvalidInput("SmallGroup::from_table: entry out of range");
      G.mul[x * k + y] = table[x][y];
      if (table[x][y] == 0) G.inv[x] = static_cast<std::uint16_t>(y);
    }
    if (G.mul[x * k] != x || G.mul[x] != x)
      throw InvalidInput("SmallGroup::from_table: element 0 is not the identity");
  }
  for (std::uint32_t x = 0; x < k; ++x)
    if (G.inv[x] == UINT16_MAX) throw InvalidInput("SmallGroup::from_table: missing inverse");
  return G;
}

SmallGroup small_group_from_elements(const Field& F, const std::vector<Mat>& elems) {
  const std::uint32_t k = static_cast<std::uint32_t>(elems.size());
  if (k == 0) throw InvalidInput("small_group_from_elements: empty element list");
  if (k > kTableLimit) throw CapExceeded("small_group_from_elements: group too large");

  // identity first, rest in input order
  const Mat id = identity(F, elems.front().n);
  std::vector<Mat> ordered;
  ordered.reserve(k);
  ordered.push_back(id);
  for (const Mat& m : elems)
    if (!(m == id)) ordered.push_back(m);
  if (ordered.size() != k)
    throw InvalidInput("small_group_from_elements: identity missing or duplicates present");

  std::map<std::vector<Field::Elt>, std::uint16_t> index;
  auto key_of = [](const Mat& m) {
    return std::vector<Field::Elt>(m.a.begin(), m.a.begin() + m.n * m.n);
  };
  for (std::uint32_t i = 0; i < k; ++i) index[key_of(ordered[i])] = static_cast<std::uint16_t>(i);

  SmallGroup G;
  G.size = k;
  G.mul.resize(std::size_t(k) * k);
  G.inv.assign(k, UINT16_MAX);
  for (std::uint32_t x = 0; x < k; ++x)
    for (std::uint32_t y = 0; y < k; ++y) {
      auto it = index.find(key_of(mul(F, ordered[x], ordered[y])));
      if (it == index.end())
        throw InvalidInput("small_group_from_elements: set is not closed under product");
      G.mul[x * k + y] = it->second;
      if (it->second == 0) G.inv[x] = static_cast<std::uint16_t>(y);
    }
  return G;
}

std::uint32_t ElemSet::count() const {
  std::uint32_t c = 0;
  for (std::uint64_t word : w) c += static_cast<std::uint32_t>(__builtin_popcountll(word));
  return c;
}

std::vector<std::uint32_t> ElemSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    std::uint64_t word = w[wi];
    while (word) {
      const int b = __builtin_ctzll(word);
      out.push_back(static_cast<std::uint32_t>(wi * 64 + b));
      word &= word - 1;
    }
  }
  return out;
}

ElemSet intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet r;
  r.w.resize(a.w.size());
  for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
  return r;
}

bool is_subset(const ElemSet& a, const ElemSet& b) {
  for (std::size_t i = 0; i < a.w.size(); ++i)
    if (a.w[i] & ~b.w[i]) return false;
  return true;
}

ElemSet subgroup_join(const SmallGroup& G, const ElemSet& h, std::uint32_t g) {
  ElemSet set = h;
  std::vector<std::uint32_t> elems = h.members();
  std::vector<std::uint32_t> stack{g};
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    if (set.test(x)) continue;
    set.set(x);
    for (std::uint32_t y : elems) {
      stack.push_back(G.prod(x, y));
      stack.push_back(G.prod(y, x));
    }
    stack.push_back(G.prod(x, x));
    elems.push_back(x);
  }
  return set;
}

namespace {

// Orbit of the identity under right multiplication by the generators; in a
// finite group this is the generated subgroup.
ElemSet span_of(const SmallGroup& G, const std::vector<std::uint16_t>& gens) {
  ElemSet s(G.size);
  s.set(0);
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    for (std::uint16_t g : gens) {
      const std::uint32_t y = G.prod(x, g);
      if (!s.test(y)) {
        s.set(y);
        stack.push_back(y);
      }
    }
  }
  return s;
}

}  // namespace

std::vector<ElemSet> subgroup_lattice(const SmallGroup& G, std::uint32_t order_cap) {
  if (G.size > order_cap) throw CapExceeded("subgroup_lattice: |G| above cap");

  // each discovered subgroup keeps a small generating set; joins stay linear
  // in the join's order
  std::map<std::vector<std::uint64_t>, std::uint32_t> seen;  // bitset words -> index
  std::vector<ElemSet> subs;
  std::vector<std::vector<std::uint16_t>> gens_of;
  std::deque<std::uint32_t> todo;

  auto add = [&](ElemSet s, std::vector<std::uint16_t> gens) {
    auto [it, fresh] = seen.emplace(s.w, static_cast<std::uint32_t>(subs.size()));
    if (fresh) {
      subs.push_back(std::move(s));
      gens_of.push_back(std::move(gens));
      todo.push_back(it->second);
    }
  };

  add(span_of(G, {}), {});  // trivial subgroup
  for (std::uint16_t x = 1; x < G.size; ++x) add(span_of(G, {x}), {x});

  while (!todo.empty()) {
    const std::uint32_t hi = todo.front();
    todo.pop_front();
    const ElemSet h = subs[hi];
    if (h.count() == G.size) continue;
    const std::vector<std::uint16_t> hgens = gens_of[hi];
    const std::vector<std::uint32_t> members = h.members();
    // one join per coset of h: each coset's least element is the adjoint
    ElemSet covered = h;
    for (std::uint32_t g = 0; g < G.size; ++g) {
      if (covered.test(g)) continue;
      for (std::uint32_t m : members) covered.set(G.prod(g, m));
      std::vector<std::uint16_t> jgens = hgens;
      jgens.push_back(static_cast<std::uint16_t>(g));
      ElemSet joined = span_of(G, jgens);
      add(std::move(joined), std::move(jgens));
    }
  }

  std::sort(subs.begin(), subs.end(), [](const ElemSet& a, const ElemSet& b) {
    const std::uint32_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return subs;
}

ElemSet core_of(const SmallGroup& G, const ElemSet& h) {
  ElemSet core(G.size);
  for (std::uint32_t m : h.members()) {
    bool keep = true;
    for (std::uint32_t x = 0; x < G.size; ++x) {
      if (!h.test(G.conj(x, m))) {
        keep = false;
        break;
      }
    }
    if (keep) core.set(m);
  }
  return core;
}

OracleResult minimal_degree_oracle(const SmallGroup& G, std::uint32_t order_cap) {
  const std::vector<ElemSet> subs = subgroup_lattice(G, order_cap);

  // weight per distinct core: least index among subgroups with that core
  struct CoreInfo {
    ElemSet core;
    std::uint64_t weight;
    std::uint32_t witness;  // index into subs
  };
  std::map<std::vector<std::uint64_t>, CoreInfo> by_core;
  for (std::uint32_t i = 0; i < subs.size(); ++i) {
    const ElemSet c = core_of(G, subs[i]);
    const std::uint64_t index = G.size / subs[i].count();
    auto it = by_core.find(c.w);
    if (it == by_core.end())
      by_core.emplace(c.w, CoreInfo{c, index, i});
    else if (index < it->second.weight) {
      it->second.weight = index;
      it->second.witness = i;
    }
  }

  std::vector<CoreInfo> cores;
  cores.reserve(by_core.size());
  for (auto& [k, v] : by_core) cores.push_back(v);
  std::sort(cores.begin(), cores.end(),
            [](const CoreInfo& a, const CoreInfo& b) { return a.weight < b.weight; });

  // suffix intersections for pruning
  std::vector<ElemSet> suffix(cores.size() + 1, ElemSet(G.size));
  ElemSet all(G.size);
  for (std::uint32_t x = 0; x < G.size; ++x) all.set(x);
  suffix[cores.size()] = all;
  for (std::size_t i = cores.size(); i-- > 0;)
    suffix[i] = intersect(suffix[i + 1], cores[i].core);

  ElemSet trivial(G.size);
  trivial.set(0);

  std::uint64_t best = UINT64_MAX;
  std::vector<std::uint32_t> best_pick, pick;

  auto dfs = [&](auto&& self, std::size_t i, const ElemSet& inter, std::uint64_t cost) -> void {
    if (cost >= best) return;
    if (inter == trivial && !pick.empty()) {  // collections have >= 1 member
      best = cost;
      best_pick = pick;
      return;
    }
    if (i == cores.size()) return;
    if (!(intersect(inter, suffix[i]) == trivial)) return;  // cannot reach trivial
    pick.push_back(static_cast<std::uint32_t>(i));
    self(self, i + 1, intersect(inter, cores[i].core), cost + cores[i].weight);
    pick.pop_back();
    self(self, i + 1, inter, cost);
  };
  dfs(dfs, 0, all, 0);

  if (best == UINT64_MAX) throw Error("minimal_degree_oracle: no faithful collection found");
  OracleResult r;
  r.degree = best;
  for (std::uint32_t i : best_pick) r.witness.push_back(subs[cores[i].witness]);
  return r;
}

OracleResult minimal_degree_oracle(const GroupId& id, std::uint32_t order_cap) {
  if (group_order(id) > order_cap) throw CapExceeded("minimal_degree_oracle: |G| above cap");
  const std::vector<Mat> elems = enumerate_elements(id, order_cap);
  return minimal_degree_oracle(small_group_from_elements(id.F(), elems), order_cap);
}

}  // namespace minrep
