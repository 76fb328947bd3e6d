#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace minrep {

/// Exact arithmetic in F_q, q = p^e, p an odd prime, q <= 2^31.
///
/// Elements are stored as indices in [0, q): the element with polynomial
/// coefficients (a_0, ..., a_{e-1}) has index sum a_i p^i. For e = 1 this is
/// the residue itself. The modulus is the lexicographically least monic
/// irreducible of degree e (coefficients compared constant-term first), and
/// the primitive element is the least element, in the same order, whose
/// multiplicative order is exactly q - 1. Both choices are deterministic, so
/// runs are reproducible without external polynomial tables.
class Field {
 public:
  using Elt = std::uint32_t;

  static Field make(std::uint64_t p, std::uint32_t e);

  /// Builds the field of order q; rejects q that is not an odd prime power.
  static Field from_order(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  std::uint64_t p() const { return p_; }
  std::uint32_t e() const { return e_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt primitive() const { return primitive_; }

  /// Monic modulus as e+1 coefficients, constant term first. For e = 1 this
  /// is x, i.e. {0, 1}, collapsing to the prime field convention.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;  // rejects 0
  Elt pow(Elt a, std::uint64_t k) const;

  /// x as an element; for e = 1 reduces mod p, otherwise v must be < q.
  Elt element(std::uint64_t v) const;

  /// Coefficients (a_0, ..., a_{e-1}) of an element.
  std::vector<std::uint32_t> coeffs(Elt a) const;

  /// True iff x lies in the unique index-t subgroup of the multiplicative
  /// group, i.e. the subgroup generated by primitive^t. Requires t | q-1 and
  /// x != 0.
  bool in_index_subgroup(Elt x, std::uint64_t t) const;

  /// Discrete log base the primitive element; requires x != 0.
  std::uint64_t dlog(Elt x) const;

 private:
  Field() = default;

  std::uint64_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint64_t q_ = 0;
  Elt primitive_ = 0;
  std::vector<std::uint32_t> modulus_;

  // Discrete log tables, built whenever q is small enough to afford them.
  std::vector<Elt> exp_;            // exp_[k] = primitive^k, size q-1
  std::vector<std::uint32_t> log_;  // log_[x] for x != 0

  Elt mul_slow(Elt a, Elt b) const;
  Elt pow_slow(Elt a, std::uint64_t k) const;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(std::uint64_t p, std::uint32_t e);
FieldPtr field_of_order(std::uint64_t q);

}  // namespace minrep
