#include "minrep/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "minrep/errors.hpp"

namespace minrep {

const char* to_string(GroupKind k) { return k == GroupKind::SL ? "SL" : "GL"; }

GroupId make_group(GroupKind kind, std::uint32_t n, FieldPtr field) {
  if (!field) throw InvalidInput("make_group: field required");
  if (n < 2 || n > kMaxDim) throw InvalidInput("make_group: n must be in [2, 8]");
  return GroupId{kind, n, std::move(field)};
}

unsigned __int128 group_order(const GroupId& id) {
  const unsigned __int128 q = id.q();
  unsigned __int128 qn = 1;
  for (std::uint32_t i = 0; i < id.n; ++i) qn *= q;
  unsigned __int128 order = 1;
  unsigned __int128 qi = 1;
  for (std::uint32_t i = 0; i < id.n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  if (id.kind == GroupKind::SL) order /= q - 1;
  return order;
}

std::vector<Mat> generators(const GroupId& id) {
  const Field& F = id.F();
  std::vector<Mat> gens;
  // primitive powers 1, w, ..., w^{e-1} span F_q over F_p
  for (std::uint32_t i = 0; i + 1 < id.n; ++i) {
    for (std::uint32_t k = 0; k < F.e(); ++k) {
      const Field::Elt lam = F.pow(F.primitive(), k);
      gens.push_back(transvection(F, id.n, i, i + 1, lam));
      gens.push_back(transvection(F, id.n, i + 1, i, lam));
    }
  }
  if (id.kind == GroupKind::GL) {
    Mat d = identity(F, id.n);
    d.at(0, 0) = F.primitive();
    gens.push_back(d);
  }
  return gens;
}

namespace {

// Base-q packing of all entries into one 64-bit key, when it fits.
struct Packer {
  std::uint64_t q = 0;
  std::uint32_t count = 0;
  bool ok = false;

  Packer(std::uint64_t q_, std::uint32_t n) : q(q_), count(n * n) {
    __uint128_t span = 1;
    ok = true;
    for (std::uint32_t i = 0; i < count; ++i) {
      span *= q;
      if (span > (__uint128_t(1) << 64)) {
        ok = false;
        break;
      }
    }
  }

  std::uint64_t pack(const Mat& m) const {
    std::uint64_t key = 0;
    for (std::uint32_t i = count; i-- > 0;) key = key * q + m.a[i];
    return key;
  }

  Mat unpack(std::uint64_t key, std::uint32_t n) const {
    Mat m;
    m.n = n;
    for (std::uint32_t i = 0; i < count; ++i) {
      m.a[i] = static_cast<Field::Elt>(key % q);
      key /= q;
    }
    return m;
  }
};

std::string string_key(const Mat& m) {
  return std::string(reinterpret_cast<const char*>(m.a.data()),
                     sizeof(Field::Elt) * m.n * m.n);
}

// Calls visit(element) exactly once per element of the closure, in BFS order.
template <typename Visit>
std::uint64_t bfs_closure(const Field& F, const std::vector<Mat>& gens, std::uint64_t cap,
                          Visit visit) {
  if (gens.empty()) throw InvalidInput("closure: at least one generator required");
  const std::uint32_t n = gens.front().n;
  const Packer packer(F.q(), n);

  std::uint64_t count = 0;
  if (packer.ok) {
    // queue packed keys so the frontier stays compact on large groups
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(1024);
    std::deque<std::uint64_t> queue;
    const Mat id = identity(F, n);
    seen.insert(packer.pack(id));
    queue.push_back(packer.pack(id));
    ++count;
    visit(id);
    while (!queue.empty()) {
      const Mat x = packer.unpack(queue.front(), n);
      queue.pop_front();
      for (const Mat& g : gens) {
        const std::uint64_t key = packer.pack(mul(F, x, g));
        if (seen.insert(key).second) {
          if (++count > cap) throw CapExceeded("closure: element cap exceeded");
          visit(packer.unpack(key, n));
          queue.push_back(key);
        }
      }
    }
  } else {
    std::unordered_set<std::string> seen;
    std::deque<Mat> queue;
    const Mat id = identity(F, n);
    seen.insert(string_key(id));
    queue.push_back(id);
    ++count;
    visit(id);
    while (!queue.empty()) {
      const Mat x = queue.front();
      queue.pop_front();
      for (const Mat& g : gens) {
        Mat y = mul(F, x, g);
        if (seen.insert(string_key(y)).second) {
          if (++count > cap) throw CapExceeded("closure: element cap exceeded");
          visit(y);
          queue.push_back(std::move(y));
        }
      }
    }
  }
  return count;
}

}  // namespace

std::vector<Mat> enumerate_elements(const Field& F, const std::vector<Mat>& gens,
                                    std::uint64_t cap) {
  std::vector<Mat> out;
  bfs_closure(F, gens, cap, [&](const Mat& m) { out.push_back(m); });
  return out;
}

std::vector<Mat> enumerate_elements(const GroupId& id, std::uint64_t cap) {
  return enumerate_elements(id.F(), generators(id), cap);
}

void audit_predicate(const GroupId& id, const MembershipPredicate& h,
                     std::uint32_t pair_samples) {
  const Field& F = id.F();
  if (!h(identity(F, id.n)))
    throw NotASubgroup("predicate audit: identity rejected (" + h.kind + ")");

  const std::vector<Mat> gens = generators(id);
  std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (F.q() * 131 + id.n);
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };

  std::vector<Mat> members{identity(F, id.n)};
  Mat walk = identity(F, id.n);
  const std::uint32_t want = std::min<std::uint32_t>(pair_samples, 48);
  for (std::uint32_t step = 0; step < 4096 && members.size() < want; ++step) {
    walk = mul(F, walk, gens[next() % gens.size()]);
    if (h(walk)) members.push_back(walk);
  }
  for (std::uint32_t i = 0; i < pair_samples; ++i) {
    const Mat& x = members[next() % members.size()];
    const Mat& y = members[next() % members.size()];
    if (!h(mul(F, x, y)))
      throw NotASubgroup("predicate audit: not closed under product (" + h.kind + ")");
    if (!h(inverse(F, x)))
      throw NotASubgroup("predicate audit: not closed under inverse (" + h.kind + ")");
  }
}

CosetTable coset_enumeration(const GroupId& id, const MembershipPredicate& h,
                             std::uint32_t degree_cap) {
  const Field& F = id.F();
  const std::vector<Mat> gens = generators(id);
  if (!h(identity(F, id.n)))
    throw NotASubgroup("coset_enumeration: predicate rejects the identity");

  CosetTable t;
  t.reps.push_back(identity(F, id.n));
  t.reps_inv.push_back(identity(F, id.n));
  t.gen_action.assign(gens.size(), {});

  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Mat cand = mul(F, gens[k], t.reps[i]);
      // match against every known coset; two matches means h is not closed
      std::uint32_t match = UINT32_MAX;
      for (std::size_t j = 0; j < t.reps.size(); ++j) {
        if (h(mul(F, t.reps_inv[j], cand))) {
          if (match != UINT32_MAX)
            throw NotASubgroup("coset_enumeration: candidate lies in two cosets");
          match = static_cast<std::uint32_t>(j);
        }
      }
      if (match == UINT32_MAX) {
        if (t.reps.size() >= degree_cap)
          throw DegreeCapExceeded("coset_enumeration: degree cap exceeded");
        match = static_cast<std::uint32_t>(t.reps.size());
        t.reps.push_back(cand);
        t.reps_inv.push_back(inverse(F, cand));
      }
      t.gen_action[k].push_back(match);
    }
  }
  return t;
}

std::vector<Mat> center_elements(const GroupId& id) {
  const Field& F = id.F();
  std::vector<Mat> out;
  for (std::uint64_t k = 0; k < F.q() - 1; ++k) {
    const Field::Elt a = F.pow(F.primitive(), k);
    if (id.kind == GroupKind::SL && F.pow(a, id.n) != F.one()) continue;
    out.push_back(scalar_mat(F, id.n, a));
  }
  return out;
}

namespace {

// Smallest u | q-1 such that S = { k in [0, q-1) : scalar w^k accepted } is
// exactly the multiples of u. S must be a subgroup of exponents.
std::uint64_t central_index_of(const Field& F, const std::vector<std::uint64_t>& accepted) {
  const std::uint64_t qm1 = F.q() - 1;
  std::uint64_t u = qm1;  // empty/identity-only set
  for (std::uint64_t k : accepted)
    if (k != 0) u = std::gcd(u, k);
  // verify the accepted set is the full cyclic subgroup generated by u
  if (accepted.size() != qm1 / u)
    throw NotASubgroup("core: accepted scalars do not form a subgroup");
  return u;
}

}  // namespace

NormalDescriptor core_structural(const GroupId& id, const MembershipPredicate& h) {
  const Field& F = id.F();
  if (F.q() < 5)
    throw SmallFieldUnsupported("core_structural: q >= 5 required; use core_bruteforce");

  // Contains every transvection <=> contains SL_n.
  bool has_sl = true;
  for (std::uint32_t i = 0; i + 1 < id.n && has_sl; ++i)
    for (std::uint32_t k = 0; k < F.e() && has_sl; ++k) {
      const Field::Elt lam = F.pow(F.primitive(), k);
      if (!h(transvection(F, id.n, i, i + 1, lam)) ||
          !h(transvection(F, id.n, i + 1, i, lam)))
        has_sl = false;
    }

  if (has_sl) {
    if (id.kind == GroupKind::SL) {
      // H = SL_n; the core's scalars are the whole SL-center.
      const std::uint64_t g = std::gcd<std::uint64_t>(id.n, F.q() - 1);
      return NormalDescriptor{(F.q() - 1) / g, true};
    }
    // H is det-defined: find the least s | q-1 with diag(w^s, 1, ..) in H.
    const std::uint64_t qm1 = F.q() - 1;
    for (std::uint64_t s = 1; s <= qm1; ++s) {
      if (qm1 % s != 0) continue;
      Mat d = identity(F, id.n);
      d.at(0, 0) = F.pow(F.primitive(), s);
      if (h(d)) {
        const std::uint64_t t = s;
        return NormalDescriptor{t / std::gcd<std::uint64_t>(id.n, t), true};
      }
    }
    throw NotASubgroup("core_structural: subgroup contains SL_n but no det image");
  }

  // Core is central: intersect the predicate with the ambient center.
  std::vector<std::uint64_t> accepted;
  const std::uint64_t qm1 = F.q() - 1;
  for (std::uint64_t k = 0; k < qm1; ++k) {
    const Field::Elt a = F.pow(F.primitive(), k);
    if (id.kind == GroupKind::SL && F.pow(a, id.n) != F.one()) continue;
    if (h(scalar_mat(F, id.n, a))) accepted.push_back(k);
  }
  return NormalDescriptor{central_index_of(F, accepted), false};
}

std::string to_string(const NormalDescriptor& d) {
  std::string s = "Z_" + std::to_string(d.central_part);
  if (d.contains_derived) s += " (contains SL)";
  return s;
}

std::vector<Mat> core_bruteforce(const Field& F, const std::vector<Mat>& h_elems,
                                 const std::vector<Mat>& g_elems) {
  if (h_elems.empty() || g_elems.empty())
    throw InvalidInput("core_bruteforce: nonempty element lists required");
  if (g_elems.size() > 10000) throw CapExceeded("core_bruteforce: |G| above 10^4");
  const std::uint32_t n = g_elems.front().n;
  const Packer packer(F.q(), n);

  std::unordered_set<std::uint64_t> h_keys;
  std::unordered_set<std::string> h_skeys;
  if (packer.ok)
    for (const Mat& m : h_elems) h_keys.insert(packer.pack(m));
  else
    for (const Mat& m : h_elems) h_skeys.insert(string_key(m));
  auto in_h = [&](const Mat& m) {
    return packer.ok ? h_keys.count(packer.pack(m)) > 0 : h_skeys.count(string_key(m)) > 0;
  };

  std::vector<Mat> g_inv;
  g_inv.reserve(g_elems.size());
  for (const Mat& x : g_elems) g_inv.push_back(inverse(F, x));

  std::vector<Mat> core;
  for (const Mat& h : h_elems) {
    bool keep = true;
    for (std::size_t i = 0; i < g_elems.size(); ++i) {
      if (!in_h(mul(F, mul(F, g_elems[i], h), g_inv[i]))) {
        keep = false;
        break;
      }
    }
    if (keep) core.push_back(h);
  }
  return core;
}

namespace {

bool acts_trivially(const Field& F, const std::vector<CosetAction>& actions, const Mat& x) {
  for (const CosetAction& act : actions) {
    const auto& t = act.table;
    for (std::size_t i = 0; i < t.reps.size(); ++i) {
      if (!act.pred(mul(F, mul(F, t.reps_inv[i], x), t.reps[i]))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Mat> action_kernel(const Field& F, const std::vector<CosetAction>& actions,
                               const std::vector<Mat>& g_elems) {
  std::vector<Mat> kernel;
  for (const Mat& x : g_elems)
    if (acts_trivially(F, actions, x)) kernel.push_back(x);
  return kernel;
}

std::uint64_t action_kernel_size(const GroupId& id, const std::vector<CosetAction>& actions,
                                 std::uint64_t cap, std::uint64_t* group_size) {
  const Field& F = id.F();
  std::uint64_t kernel = 0;
  const std::uint64_t total = bfs_closure(F, generators(id), cap, [&](const Mat& x) {
    if (acts_trivially(F, actions, x)) ++kernel;
  });
  if (group_size) *group_size = total;
  return kernel;
}

}  // namespace minrep
