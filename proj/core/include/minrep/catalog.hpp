#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minrep/group.hpp"

namespace minrep {

/// A named subgroup given by a membership predicate, its claimed index and
/// claimed core. The predicate is absent for the one construction whose
/// defining subgroup is not pinned down (see gl3_collection).
struct SubgroupSpec {
  std::string name;
  GroupId group;
  std::optional<MembershipPredicate> predicate;
  std::uint64_t claimed_index = 1;
  NormalDescriptor claimed_core;
  std::vector<std::pair<std::string, std::uint64_t>> params;
};

/// Ordered list of subgroups forming a claimed faithful collection.
struct Collection {
  std::vector<SubgroupSpec> members;
  std::uint64_t claimed_degree = 0;
};

/// { g in GL_n : det g in A_t }, index t, normal.
SubgroupSpec det_subgroup(const GroupId& gl, std::uint64_t t);

/// Upper-triangular subgroup of SL_2 with diagonal (a, a^-1), a in the
/// odd-order part of the multiplicative group. Odd order, corefree,
/// index (q-1)_2 (q+1).
SubgroupSpec odd_borel(FieldPtr field);

/// Extension of odd_borel to GL_2 by the twisted torus
/// { diag(a^{twist+1}, a^{-twist}) }; same index, core Z_{(q-1)_2}.
SubgroupSpec twisted_odd_borel(FieldPtr field, std::uint64_t twist);

/// Block-triangular subgroup of SL_n fixing the last coordinate hyperplane;
/// the proper subgroup of least index, (q^n-1)/(q-1).
SubgroupSpec parabolic(const GroupId& sl);

/// Parabolic members whose (n-1)-block determinant lies in the index-(q-1)_p
/// subgroup; trivial intersection with the order-p central subgroup.
SubgroupSpec block_det_parabolic(const GroupId& sl, std::uint64_t p);

/// Stabilizer in GL_n of the hyperplane spanned by the first n-1 basis
/// vectors: last row zero off the corner. Core is the full center.
SubgroupSpec hyperplane_stabilizer(const GroupId& gl);

/// Hyperplane stabilizer with corner entry restricted to the subgroup of
/// index g_part(q-1). Core Z_{g_part(q-1)}.
SubgroupSpec restricted_hyperplane_stabilizer(const GroupId& gl);

/// GL_3 analog of twisted_odd_borel: peel off diag(a^{t+1}, a^{-t-1}, a) with
/// a = det m, then require the block-det parabolic condition at the prime 3.
SubgroupSpec twisted_parabolic_gl3(FieldPtr field, std::uint64_t twist);

Collection sl2_collection(FieldPtr field);
Collection sl3_collection(FieldPtr field);
Collection gl2_collection(FieldPtr field, std::uint64_t twist = 0);
Collection gl3_collection(FieldPtr field, std::uint64_t twist = 0);

/// The general faithful collection for GL_n: hyperplane stabilizer (corner-
/// restricted when gcd(n, q-1) > 1) together with one det_subgroup per
/// prime-power part of q-1 coprime to the gcd.
Collection gln_upper_collection(std::uint32_t n, FieldPtr field);

/// Order polynomials of the maximal subgroups of SL_3(F_q), with
/// applicability conditions evaluated at q.
struct Sl3MaximalOrder {
  std::string name;
  std::uint64_t order = 0;
  bool applicable = false;
};

std::vector<Sl3MaximalOrder> sl3_maximal_subgroup_orders(std::uint64_t q);

/// JSON descriptor: {name, kind, n, q, params, claimed_index, claimed_core}.
std::string to_json(const SubgroupSpec& spec);

}  // namespace minrep
