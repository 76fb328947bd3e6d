#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "minrep/field.hpp"
#include "minrep/matrix.hpp"

namespace minrep {

enum class GroupKind { SL, GL };

const char* to_string(GroupKind k);

struct GroupId {
  GroupKind kind = GroupKind::SL;
  std::uint32_t n = 2;
  FieldPtr field;

  const Field& F() const { return *field; }
  std::uint64_t q() const { return field->q(); }
};

GroupId make_group(GroupKind kind, std::uint32_t n, FieldPtr field);

/// |G| as a 128-bit integer; degrees in scope always fit 64 bits.
unsigned __int128 group_order(const GroupId& id);

/// Transvections on adjacent positions over a primitive-power spanning set;
/// GL additionally gets diag(primitive, 1, ..., 1).
std::vector<Mat> generators(const GroupId& id);

/// Breadth-first closure of the generated subgroup, deduplicated by canonical
/// entry key. Throws CapExceeded past `cap`.
std::vector<Mat> enumerate_elements(const GroupId& id, std::uint64_t cap);
std::vector<Mat> enumerate_elements(const Field& F, const std::vector<Mat>& gens,
                                    std::uint64_t cap);

/// A membership rule for a subgroup, carried as a closed descriptor so it can
/// be serialized and logged. The evaluator is pure.
struct MembershipPredicate {
  std::string kind;
  std::vector<std::pair<std::string, std::uint64_t>> params;
  std::function<bool(const Mat&)> eval;

  bool operator()(const Mat& m) const { return eval(m); }
};

/// Randomized closure audit: the predicate must accept the identity, and
/// members sampled from a generator walk must stay members under product and
/// inverse. Throws NotASubgroup on a violation. Deterministic.
void audit_predicate(const GroupId& id, const MembershipPredicate& h,
                     std::uint32_t pair_samples = 64);

/// Left cosets of the predicate subgroup, reached breadth-first from the
/// identity coset. gen_action[k] is the permutation of cosets induced by
/// generator k.
struct CosetTable {
  std::vector<Mat> reps;      // index 0 = identity coset
  std::vector<Mat> reps_inv;  // pairwise inverses of reps
  std::vector<std::vector<std::uint32_t>> gen_action;

  std::uint32_t degree() const { return static_cast<std::uint32_t>(reps.size()); }
};

/// Enumerates G/H for the subgroup cut out by `h`. A candidate matching two
/// distinct known cosets means `h` is not closed, reported as NotASubgroup.
CosetTable coset_enumeration(const GroupId& id, const MembershipPredicate& h,
                             std::uint32_t degree_cap);

/// Scalar matrices in the group: all of F_q^x for GL, n-th roots of unity
/// for SL.
std::vector<Mat> center_elements(const GroupId& id);

/// Core of a subgroup, described through the ambient center: the core's
/// scalar part is the index-`central_part` subgroup of F_q^x; when
/// `contains_derived` is set the subgroup (hence its core) contains SL_n.
struct NormalDescriptor {
  std::uint64_t central_part = 1;
  bool contains_derived = false;

  friend bool operator==(const NormalDescriptor& x, const NormalDescriptor& y) {
    return x.central_part == y.central_part && x.contains_derived == y.contains_derived;
  }
};

std::string to_string(const NormalDescriptor& d);

/// Core via the normal-subgroup dichotomy (central, or contains SL_n), valid
/// for q >= 5. q = 3 throws SmallFieldUnsupported; use core_bruteforce there.
NormalDescriptor core_structural(const GroupId& id, const MembershipPredicate& h);

/// Exact core by intersecting conjugates; both element lists fully enumerated.
std::vector<Mat> core_bruteforce(const Field& F, const std::vector<Mat>& h_elems,
                                 const std::vector<Mat>& g_elems);

struct CosetAction {
  CosetTable table;
  MembershipPredicate pred;
};

/// Elements of G acting trivially on every coset of every table.
std::vector<Mat> action_kernel(const Field& F, const std::vector<CosetAction>& actions,
                               const std::vector<Mat>& g_elems);

/// Streaming variant: enumerates G internally and returns the kernel size,
/// without materializing the element list. Throws CapExceeded past `cap`.
std::uint64_t action_kernel_size(const GroupId& id, const std::vector<CosetAction>& actions,
                                 std::uint64_t cap, std::uint64_t* group_size = nullptr);

}  // namespace minrep
