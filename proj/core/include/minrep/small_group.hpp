#pragma once

#include <cstdint>
#include <vector>

#include "minrep/group.hpp"

namespace minrep {

/// A finite group given by its full multiplication table, for lattice walks
/// and the exact minimal-degree search. Element 0 is the identity.
struct SmallGroup {
  std::uint32_t size = 0;
  std::vector<std::uint16_t> mul;  // size x size, row-major
  std::vector<std::uint16_t> inv;

  std::uint16_t prod(std::uint32_t x, std::uint32_t y) const { return mul[x * size + y]; }
  std::uint16_t conj(std::uint32_t x, std::uint32_t h) const {
    return mul[std::uint32_t(prod(x, h)) * size + inv[x]];  // x h x^-1
  }

  static SmallGroup cyclic(std::uint32_t k);
  static SmallGroup from_table(const std::vector<std::vector<std::uint16_t>>& table);
};

/// Table for a fully enumerated matrix group; elements keep their input order,
/// with the identity moved to index 0.
SmallGroup small_group_from_elements(const Field& F, const std::vector<Mat>& elems);

/// Bitset over element indices of a SmallGroup.
struct ElemSet {
  std::vector<std::uint64_t> w;

  explicit ElemSet(std::uint32_t size = 0) : w((size + 63) / 64, 0) {}
  bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint32_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  std::uint32_t count() const;
  std::vector<std::uint32_t> members() const;

  friend bool operator==(const ElemSet& a, const ElemSet& b) { return a.w == b.w; }
  friend bool operator<(const ElemSet& a, const ElemSet& b) { return a.w < b.w; }
};

ElemSet intersect(const ElemSet& a, const ElemSet& b);
bool is_subset(const ElemSet& a, const ElemSet& b);

/// Closure of H union {g} under the group product.
ElemSet subgroup_join(const SmallGroup& G, const ElemSet& h, std::uint32_t g);

/// Every subgroup of G: cyclic seeds, then joins to a fixpoint. Deterministic
/// order (sorted by size, then by element bitset). Throws CapExceeded when
/// |G| > order_cap.
std::vector<ElemSet> subgroup_lattice(const SmallGroup& G, std::uint32_t order_cap = 200);

/// Largest normal subgroup of G inside H: elements whose whole conjugacy
/// class lies in H.
ElemSet core_of(const SmallGroup& G, const ElemSet& h);

struct OracleResult {
  std::uint64_t degree = 0;
  std::vector<ElemSet> witness;  // subgroups realizing the minimal collection
};

/// Exact minimal faithful permutation degree: minimum of sum [G:H_i] over
/// collections with trivial intersection of cores. Searches subsets of the
/// distinct cores, weighting each by the least index among subgroups with
/// that exact core.
OracleResult minimal_degree_oracle(const SmallGroup& G, std::uint32_t order_cap = 200);

/// Convenience wrapper for matrix groups within the cap.
OracleResult minimal_degree_oracle(const GroupId& id, std::uint32_t order_cap = 200);

}  // namespace minrep
