#include <algorithm>
#include <set>

#include "doctest.h"
#include "minrep/catalog.hpp"
#include "minrep/errors.hpp"
#include "minrep/group.hpp"
#include "minrep/small_group.hpp"

using namespace minrep;

TEST_CASE("generator closures have the right group orders") {
  CHECK(enumerate_elements(make_group(GroupKind::SL, 2, field_of_order(3)), 100).size() == 24);
  CHECK(enumerate_elements(make_group(GroupKind::GL, 2, field_of_order(3)), 100).size() == 48);
  CHECK(enumerate_elements(make_group(GroupKind::SL, 2, field_of_order(5)), 200).size() == 120);
  CHECK(enumerate_elements(make_group(GroupKind::GL, 2, field_of_order(5)), 500).size() == 480);
  CHECK(enumerate_elements(make_group(GroupKind::SL, 2, field_of_order(9)), 800).size() == 720);
}

TEST_CASE("group order formula matches closures") {
  for (std::uint64_t q : {3ull, 5ull, 7ull}) {
    const GroupId sl = make_group(GroupKind::SL, 2, field_of_order(q));
    const GroupId gl = make_group(GroupKind::GL, 2, field_of_order(q));
    CHECK(static_cast<std::uint64_t>(group_order(sl)) == q * (q * q - 1));
    CHECK(static_cast<std::uint64_t>(group_order(gl)) == (q * q - 1) * (q * q - q));
  }
  CHECK(static_cast<std::uint64_t>(group_order(make_group(
            GroupKind::GL, 3, field_of_order(5)))) == 1488000ull);
}

TEST_CASE("dimension below 2 is rejected") {
  CHECK_THROWS_AS(make_group(GroupKind::SL, 1, field_of_order(5)), InvalidInput);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_elements(make_group(GroupKind::SL, 2, field_of_order(5)), 10),
                  CapExceeded);
}

TEST_CASE("coset enumeration degrees") {
  const GroupId gl25 = make_group(GroupKind::GL, 2, field_of_order(5));
  CHECK(coset_enumeration(gl25, *twisted_odd_borel(gl25.field, 0).predicate, 100).degree() == 24);

  const GroupId sl35 = make_group(GroupKind::SL, 3, field_of_order(5));
  CHECK(coset_enumeration(sl35, *parabolic(sl35).predicate, 100).degree() == 31);

  const GroupId gl27 = make_group(GroupKind::GL, 2, field_of_order(7));
  CHECK(coset_enumeration(gl27, *det_subgroup(gl27, 3).predicate, 100).degree() == 3);

  CHECK_THROWS_AS(coset_enumeration(gl27, *det_subgroup(gl27, 6).predicate, 5),
                  DegreeCapExceeded);
}

TEST_CASE("coset actions are permutations") {
  const GroupId gl = make_group(GroupKind::GL, 2, field_of_order(7));
  const CosetTable t = coset_enumeration(gl, *twisted_odd_borel(gl.field, 0).predicate, 100);
  CHECK(t.degree() == 16);
  for (const auto& perm : t.gen_action) {
    CHECK(perm.size() == t.degree());
    std::set<std::uint32_t> image(perm.begin(), perm.end());
    CHECK(image.size() == t.degree());
  }
}

TEST_CASE("a non-closed predicate is rejected during enumeration") {
  const GroupId gl = make_group(GroupKind::GL, 2, field_of_order(5));
  const FieldPtr F = gl.field;
  MembershipPredicate bad{"bad", {}, [F](const Mat& m) {
                            // fails closure: fixes one off-diagonal entry pattern
                            return m.at(1, 0) == 0 && (m.at(0, 1) == 0 || m.at(0, 1) == 1);
                          }};
  CHECK_THROWS_AS(coset_enumeration(gl, bad, 1000), NotASubgroup);
}

TEST_CASE("center elements") {
  CHECK(center_elements(make_group(GroupKind::GL, 2, field_of_order(5))).size() == 4);
  CHECK(center_elements(make_group(GroupKind::SL, 3, field_of_order(7))).size() == 3);
  CHECK(center_elements(make_group(GroupKind::SL, 3, field_of_order(5))).size() == 1);
}

TEST_CASE("structural core on catalog subgroups") {
  // twisted borel over GL_2(F_7): central index 2, so a core of order 3
  const GroupId gl27 = make_group(GroupKind::GL, 2, field_of_order(7));
  CHECK(core_structural(gl27, *twisted_odd_borel(gl27.field, 0).predicate) ==
        NormalDescriptor{2, false});

  // det subgroup of GL_3(F_5) at t = 4 is normal and contains SL_3
  const GroupId gl35 = make_group(GroupKind::GL, 3, field_of_order(5));
  CHECK(core_structural(gl35, *det_subgroup(gl35, 4).predicate) == NormalDescriptor{4, true});

  // corner-restricted hyperplane stabilizer over GL_3(F_7)
  const GroupId gl37 = make_group(GroupKind::GL, 3, field_of_order(7));
  CHECK(core_structural(gl37, *restricted_hyperplane_stabilizer(gl37).predicate) ==
        NormalDescriptor{3, false});

  const GroupId gl23 = make_group(GroupKind::GL, 2, field_of_order(3));
  CHECK_THROWS_AS(core_structural(gl23, *twisted_odd_borel(gl23.field, 0).predicate),
                  SmallFieldUnsupported);

  // a predicate accepting all of SL_n, in the SL ambient
  const GroupId sl25 = make_group(GroupKind::SL, 2, field_of_order(5));
  const MembershipPredicate whole{"whole", {}, [](const Mat&) { return true; }};
  CHECK(core_structural(sl25, whole) == NormalDescriptor{2, true});
}

TEST_CASE("brute force core") {
  const Field& F3 = *field_of_order(3);
  const GroupId gl23 = make_group(GroupKind::GL, 2, field_of_order(3));
  const std::vector<Mat> all = enumerate_elements(gl23, 100);

  // central subgroups are normal
  const std::vector<Mat> z = center_elements(gl23);
  CHECK(z.size() == 2);
  CHECK(core_bruteforce(F3, z, all).size() == 2);

  // whole group is its own core
  CHECK(core_bruteforce(F3, all, all).size() == all.size());

  // odd borel inside SL_2(F_5) is corefree
  const GroupId sl25 = make_group(GroupKind::SL, 2, field_of_order(5));
  const std::vector<Mat> sl_elems = enumerate_elements(sl25, 200);
  const auto h = odd_borel(sl25.field);
  std::vector<Mat> h_elems;
  for (const Mat& m : sl_elems)
    if ((*h.predicate)(m)) h_elems.push_back(m);
  CHECK(h_elems.size() == 5);  // q * (q-1)/4
  const std::vector<Mat> core = core_bruteforce(*sl25.field, h_elems, sl_elems);
  CHECK(core.size() == 1);
}

TEST_CASE("structural core agrees with brute force on catalog subgroups") {
  for (std::uint64_t q : {5ull, 7ull}) {
    const FieldPtr F = field_of_order(q);
    const GroupId gl = make_group(GroupKind::GL, 2, F);
    const std::vector<Mat> all = enumerate_elements(gl, 3000);
    std::vector<SubgroupSpec> specs;
    specs.push_back(twisted_odd_borel(F, 0));
    specs.push_back(twisted_odd_borel(F, 1));
    for (std::uint64_t t = 1; t < q; ++t)
      if ((q - 1) % t == 0) specs.push_back(det_subgroup(gl, t));
    specs.push_back(hyperplane_stabilizer(gl));
    specs.push_back(restricted_hyperplane_stabilizer(gl));

    for (const SubgroupSpec& s : specs) {
      std::vector<Mat> members;
      for (const Mat& m : all)
        if ((*s.predicate)(m)) members.push_back(m);
      const std::vector<Mat> core = core_bruteforce(*F, members, all);
      const NormalDescriptor d = core_structural(gl, *s.predicate);
      std::uint64_t expect_size;
      if (d.contains_derived)
        expect_size = static_cast<std::uint64_t>(group_order(gl)) / s.claimed_index;
      else
        expect_size = (q - 1) / d.central_part;
      CHECK(core.size() == expect_size);
    }
  }
}

TEST_CASE("action kernels") {
  const FieldPtr F5 = field_of_order(5);
  const GroupId gl25 = make_group(GroupKind::GL, 2, F5);
  const std::vector<Mat> g25 = enumerate_elements(gl25, 500);
  const auto gh5 = twisted_odd_borel(F5, 0);
  std::vector<CosetAction> acts;
  acts.push_back({coset_enumeration(gl25, *gh5.predicate, 100), *gh5.predicate});
  CHECK(action_kernel(*F5, acts, g25).size() == 1);

  const FieldPtr F7 = field_of_order(7);
  const GroupId gl27 = make_group(GroupKind::GL, 2, F7);
  const std::vector<Mat> g27 = enumerate_elements(gl27, 2100);
  const auto gh7 = twisted_odd_borel(F7, 0);
  std::vector<CosetAction> acts7;
  acts7.push_back({coset_enumeration(gl27, *gh7.predicate, 100), *gh7.predicate});
  CHECK(action_kernel(*F7, acts7, g27).size() == 3);

  const auto d3 = det_subgroup(gl27, 3);
  acts7.push_back({coset_enumeration(gl27, *d3.predicate, 100), *d3.predicate});
  CHECK(action_kernel(*F7, acts7, g27).size() == 1);

  // streaming variant agrees
  std::uint64_t order = 0;
  CHECK(action_kernel_size(gl27, acts7, 10000, &order) == 1);
  CHECK(order == 2016);
}

TEST_CASE("subgroup lattice sizes") {
  CHECK(subgroup_lattice(SmallGroup::cyclic(6)).size() == 4);
  CHECK(subgroup_lattice(SmallGroup::cyclic(1)).size() == 1);

  const GroupId sl23 = make_group(GroupKind::SL, 2, field_of_order(3));
  const SmallGroup G = small_group_from_elements(*sl23.field, enumerate_elements(sl23, 100));
  CHECK(subgroup_lattice(G).size() == 15);

  CHECK_THROWS_AS(subgroup_lattice(SmallGroup::cyclic(201)), CapExceeded);
}

TEST_CASE("minimal degree oracle on tiny groups") {
  CHECK(minimal_degree_oracle(SmallGroup::cyclic(6)).degree == 5);

  const OracleResult sl23 =
      minimal_degree_oracle(make_group(GroupKind::SL, 2, field_of_order(3)));
  CHECK(sl23.degree == 8);

  const OracleResult gl23 =
      minimal_degree_oracle(make_group(GroupKind::GL, 2, field_of_order(3)));
  CHECK(gl23.degree == 8);

  // witness is itself a faithful collection: intersection of cores trivial
  const GroupId id = make_group(GroupKind::GL, 2, field_of_order(3));
  const SmallGroup G = small_group_from_elements(*id.field, enumerate_elements(id, 100));
  std::uint64_t witness_degree = 0;
  ElemSet inter(G.size);
  for (std::uint32_t x = 0; x < G.size; ++x) inter.set(x);
  for (const ElemSet& h : gl23.witness) {
    witness_degree += G.size / h.count();
    inter = intersect(inter, core_of(G, h));
  }
  CHECK(witness_degree == 8);
  CHECK(inter.count() == 1);
}

TEST_CASE("multiplication table input and joins") {
  // feeding a table directly is equivalent to the built-in constructor
  const SmallGroup c6 = SmallGroup::cyclic(6);
  std::vector<std::vector<std::uint16_t>> table(6, std::vector<std::uint16_t>(6));
  for (std::uint32_t x = 0; x < 6; ++x)
    for (std::uint32_t y = 0; y < 6; ++y) table[x][y] = c6.prod(x, y);
  const SmallGroup rebuilt = SmallGroup::from_table(table);
  CHECK(subgroup_lattice(rebuilt).size() == 4);

  std::swap(table[0], table[1]);  // identity no longer at index 0
  CHECK_THROWS_AS(SmallGroup::from_table(table), InvalidInput);

  ElemSet even(6);
  even.set(0);
  even.set(2);
  even.set(4);
  CHECK(subgroup_join(c6, even, 3).count() == 6);
  ElemSet triv(6);
  triv.set(0);
  CHECK(subgroup_join(c6, triv, 2) == even);
}

TEST_CASE("oracle on cyclic groups matches the sum of prime-power parts") {
  CHECK(minimal_degree_oracle(SmallGroup::cyclic(12)).degree == 7);   // 4 + 3
  CHECK(minimal_degree_oracle(SmallGroup::cyclic(30)).degree == 10);  // 2 + 3 + 5
  CHECK(minimal_degree_oracle(SmallGroup::cyclic(8)).degree == 8);
  CHECK(minimal_degree_oracle(SmallGroup::cyclic(1)).degree == 1);
}

namespace {

// Exhaustive second oracle: every subgroup subset of size <= 3, minimizing
// the summed indices over faithful ones. Proper subgroups have index >= 2,
// so on groups whose oracle degree is at most 8 no size-4 collection can
// do better; the search is complete for the groups below.
std::uint64_t exhaustive_min_degree(const SmallGroup& G) {
  const std::vector<ElemSet> subs = subgroup_lattice(G);
  ElemSet trivial(G.size);
  trivial.set(0);
  std::uint64_t best = UINT64_MAX;
  const std::size_t k = subs.size();
  auto consider = [&](std::initializer_list<std::size_t> pick) {
    ElemSet meet(G.size);
    for (std::uint32_t x = 0; x < G.size; ++x) meet.set(x);
    std::uint64_t degree = 0;
    for (std::size_t i : pick) {
      meet = intersect(meet, subs[i]);
      degree += G.size / subs[i].count();
    }
    if (degree < best && core_of(G, meet) == trivial) best = degree;
  };
  for (std::size_t i = 0; i < k; ++i) {
    consider({i});
    for (std::size_t j = i + 1; j < k; ++j) {
      consider({i, j});
      for (std::size_t l = j + 1; l < k; ++l) consider({i, j, l});
    }
  }
  return best;
}

}  // namespace

TEST_CASE("oracle agrees with an exhaustive subset search") {
  const SmallGroup c6 = SmallGroup::cyclic(6);
  CHECK(minimal_degree_oracle(c6).degree == exhaustive_min_degree(c6));

  const GroupId sl23 = make_group(GroupKind::SL, 2, field_of_order(3));
  const SmallGroup s = small_group_from_elements(*sl23.field, enumerate_elements(sl23, 100));
  CHECK(minimal_degree_oracle(s).degree == exhaustive_min_degree(s));

  const GroupId gl23 = make_group(GroupKind::GL, 2, field_of_order(3));
  const SmallGroup g = small_group_from_elements(*gl23.field, enumerate_elements(gl23, 100));
  CHECK(minimal_degree_oracle(g).degree == exhaustive_min_degree(g));
}

TEST_CASE("enumeration falls back cleanly when entries do not pack into a word") {
  // q^(n^2) far beyond 64 bits forces the generic dedup path
  const FieldPtr F = field_of_order(65537);
  const GroupId gl = make_group(GroupKind::GL, 2, F);
  const Field::Elt s = F->pow(F->primitive(), (F->q() - 1) / 16);
  const std::vector<Mat> gens{scalar_mat(*F, 2, s)};
  CHECK(enumerate_elements(*F, gens, 100).size() == 16);

  Mat swap_mat;
  swap_mat.n = 2;
  swap_mat.at(0, 1) = F->one();
  swap_mat.at(1, 0) = F->one();
  const std::vector<Mat> two{scalar_mat(*F, 2, s), swap_mat};
  CHECK(enumerate_elements(*F, two, 100).size() == 32);
}

TEST_CASE("brute force core respects its cap") {
  const GroupId gl = make_group(GroupKind::GL, 2, field_of_order(13));
  const std::vector<Mat> all = enumerate_elements(gl, 30000);  // 26208 elements
  CHECK_THROWS_AS(core_bruteforce(*gl.field, all, all), CapExceeded);
}

TEST_CASE("core of intersection equals intersection of cores on small lattices") {
  for (std::uint64_t q : {3ull}) {
    for (GroupKind kind : {GroupKind::SL, GroupKind::GL}) {
      const GroupId id = make_group(kind, 2, field_of_order(q));
      const SmallGroup G = small_group_from_elements(*id.field, enumerate_elements(id, 100));
      const std::vector<ElemSet> subs = subgroup_lattice(G);
      std::vector<ElemSet> cores;
      cores.reserve(subs.size());
      for (const ElemSet& h : subs) cores.push_back(core_of(G, h));
      for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i; j < subs.size(); ++j) {
          const ElemSet meet = intersect(subs[i], subs[j]);
          CHECK(core_of(G, meet) == intersect(cores[i], cores[j]));
        }
    }
  }
}

namespace {

// the GL table with the SL subset flagged, matching the table's element order
struct AmbientGl {
  SmallGroup G;
  ElemSet sl{0};
};

AmbientGl ambient_gl2(std::uint64_t q) {
  const GroupId gl = make_group(GroupKind::GL, 2, field_of_order(q));
  const Field& F = *gl.field;
  const std::vector<Mat> elems = enumerate_elements(gl, 600);
  AmbientGl a{small_group_from_elements(F, elems), ElemSet(0)};
  std::vector<Mat> ordered;
  ordered.push_back(identity(F, 2));
  for (const Mat& m : elems)
    if (!(m == ordered.front())) ordered.push_back(m);
  a.sl = ElemSet(a.G.size);
  for (std::uint32_t i = 0; i < a.G.size; ++i)
    if (det(F, ordered[i]) == F.one()) a.sl.set(i);
  return a;
}

}  // namespace

TEST_CASE("product index identity over the GL_2 lattice, q in {3, 5}") {
  for (std::uint64_t q : {3ull, 5ull}) {
    const AmbientGl a = ambient_gl2(q);
    CHECK(a.sl.count() == q * (q * q - 1));
    for (const ElemSet& h : subgroup_lattice(a.G, 500)) {
      const std::uint32_t h_meet_sl = intersect(h, a.sl).count();
      // |H . SL| from the product formula, exact for normal SL
      const std::uint32_t prod_size = h.count() * a.sl.count() / h_meet_sl;
      CHECK((h.count() / h_meet_sl) * (a.G.size / prod_size) == q - 1);
    }
  }
}

TEST_CASE("subgroups containing SL_2 are exactly the det subgroups, q in {3, 5}") {
  for (std::uint64_t q : {3ull, 5ull}) {
    const AmbientGl a = ambient_gl2(q);
    const GroupId gl = make_group(GroupKind::GL, 2, field_of_order(q));
    const Field& F = *gl.field;
    const std::vector<Mat> elems = enumerate_elements(gl, 600);
    std::vector<Mat> ordered;
    ordered.push_back(identity(F, 2));
    for (const Mat& m : elems)
      if (!(m == ordered.front())) ordered.push_back(m);

    std::uint32_t containing = 0;
    for (const ElemSet& h : subgroup_lattice(a.G, 500)) {
      if (!is_subset(a.sl, h)) continue;
      ++containing;
      const std::uint64_t t = a.G.size / h.count();
      CHECK((q - 1) % t == 0);
      for (std::uint32_t i = 0; i < a.G.size; ++i)
        CHECK(h.test(i) == F.in_index_subgroup(det(F, ordered[i]), t));
    }
    // one overgroup of SL per divisor of q-1
    std::uint32_t divisors = 0;
    for (std::uint64_t t = 1; t <= q - 1; ++t)
      if ((q - 1) % t == 0) ++divisors;
    CHECK(containing == divisors);
  }
}
