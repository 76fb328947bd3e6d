#pragma once

#include <cstdint>
#include <string>

namespace minrep {

/// How much trust the reported value carries. `theorem` only inside proved
/// parameter ranges; `unresolved_construction` marks a value whose claimed
/// witness subgroup has no settled construction; `ambiguous_tie` marks the
/// boundary case where the two candidate formulas coincide in value but not
/// in witness.
enum class DegreeStatus {
  theorem,
  conjecture,
  upper_bound,
  ambiguous_tie,
  unresolved_construction,
};

const char* to_string(DegreeStatus s);

struct DegreeResult {
  std::uint64_t value = 0;
  DegreeStatus status = DegreeStatus::theorem;
  std::string case_label;
};

/// Sum of the prime-power parts of m over primes not dividing gcd(n, q-1).
std::uint64_t cofactor_degree_sum(std::uint64_t n, std::uint64_t q, std::uint64_t m);

/// Minimal faithful degree of SL_2(F_q): (q-1)_2 (q+1). q odd, >= 3.
DegreeResult p_sl2(std::uint64_t q);

/// Minimal faithful degree of SL_3(F_q), q >= 5, by cases on gcd(3, q-1).
DegreeResult p_sl3(std::uint64_t q);

/// SL_n for very divisible n >= 4 with gcd(n, q-1) > 1.
DegreeResult p_sln_very_divisible(std::uint32_t n, std::uint64_t q);

/// Dispatcher over n; n >= 4 outside the very divisible range is flagged
/// conjecture.
DegreeResult p_sln(std::uint32_t n, std::uint64_t q);

DegreeResult p_gl2(std::uint64_t q);
DegreeResult p_gl3(std::uint64_t q);

/// Conjectured value for GL_n: p(SL_n) + cofactor sum (projective index
/// instead when gcd = 1).
DegreeResult p_gln_conjectured(std::uint32_t n, std::uint64_t q);

/// Dispatcher: proved formulas for n in {2, 3}, conjecture beyond.
DegreeResult p_gln(std::uint32_t n, std::uint64_t q);

/// Faithful-collection upper bound for p(GL_n).
DegreeResult upper_bound_gln(std::uint32_t n, std::uint64_t q);

/// d*t for the least divisor d of gcd(n, q-1) with dt/gcd(n, dt) = t: the
/// minimal index of a subgroup whose central intersection has index t.
/// Requires t | q-1, t != q-1.
std::uint64_t h_t_cost(std::uint32_t n, std::uint64_t q, std::uint64_t t);

}  // namespace minrep
