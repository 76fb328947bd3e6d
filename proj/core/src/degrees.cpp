#include "minrep/degrees.hpp"

#include <numeric>

#include "minrep/arith.hpp"
#include "minrep/errors.hpp"

namespace minrep {

namespace {

void require_odd_prime_power(std::uint64_t q, std::uint64_t min_q) {
  if (q < min_q || q % 2 == 0 || !prime_power_split(q))
    throw InvalidInput("degrees: q must be an odd prime power >= " + std::to_string(min_q));
}

std::uint64_t pow_checked(std::uint64_t q, std::uint32_t n) {
  unsigned __int128 r = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    r *= q;
    if (r > UINT64_MAX) throw InvalidInput("degrees: q^n exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

// Sum over primes p | g of the full p-part of q-1.
std::uint64_t central_prime_part_sum(std::uint64_t g, std::uint64_t q) {
  std::uint64_t sum = 0;
  for (const auto& [p, e] : factorize(g).factors) {
    (void)e;
    sum += p_part(q - 1, p);
  }
  return sum;
}

}  // namespace

const char* to_string(DegreeStatus s) {
  switch (s) {
    case DegreeStatus::theorem:
      return "theorem";
    case DegreeStatus::conjecture:
      return "conjecture";
    case DegreeStatus::upper_bound:
      return "upper_bound";
    case DegreeStatus::ambiguous_tie:
      return "ambiguous_tie";
    case DegreeStatus::unresolved_construction:
      return "unresolved_construction";
  }
  return "?";
}

std::uint64_t cofactor_degree_sum(std::uint64_t n, std::uint64_t q, std::uint64_t m) {
  return split_parts(n, q, m).cofactor_sum;
}

DegreeResult p_sl2(std::uint64_t q) {
  require_odd_prime_power(q, 3);
  return {p_part(q - 1, 2) * (q + 1), DegreeStatus::theorem, "odd_borel"};
}

DegreeResult p_sl3(std::uint64_t q) {
  require_odd_prime_power(q, 5);
  const std::uint64_t q3 = pow_checked(q, 3);
  if ((q - 1) % 3 != 0) return {(q3 - 1) / (q - 1), DegreeStatus::theorem, "g=1 parabolic"};
  const std::uint64_t three_part = p_part(q - 1, 3);
  const std::uint64_t cmp = (q - 1) / 3;
  if (cmp < three_part)
    return {(q3 - 1) / 3, DegreeStatus::unresolved_construction, "g=3 small cofactor"};
  if (cmp > three_part)
    return {(q3 - 1) * three_part / (q - 1), DegreeStatus::theorem, "g=3 block parabolic"};
  return {(q3 - 1) / 3, DegreeStatus::ambiguous_tie, "g=3 boundary"};
}

DegreeResult p_sln_very_divisible(std::uint32_t n, std::uint64_t q) {
  require_odd_prime_power(q, 5);
  if (n < 4) throw InvalidInput("p_sln_very_divisible: n >= 4 required");
  const std::uint64_t g = std::gcd<std::uint64_t>(n, q - 1);
  if (g <= 1) throw InvalidInput("p_sln_very_divisible: gcd(n, q-1) > 1 required");
  if (!is_very_divisible(n, q))
    throw InvalidInput("p_sln_very_divisible: n is not very divisible for this q");

  const std::uint64_t qn = pow_checked(q, n);
  const std::uint64_t sum = central_prime_part_sum(g, q);
  const std::uint64_t cmp = (q - 1) / g;
  if (cmp < sum)
    return {(qn - 1) / g, DegreeStatus::unresolved_construction, "single subgroup"};
  if (cmp > sum)
    return {(qn - 1) / (q - 1) * sum, DegreeStatus::theorem, "per-prime collection"};
  // both candidate formulas evaluate to the same number at the boundary
  return {(qn - 1) / g, DegreeStatus::ambiguous_tie, "boundary"};
}

DegreeResult p_sln(std::uint32_t n, std::uint64_t q) {
  if (n == 2) return p_sl2(q);
  if (n == 3) return p_sl3(q);
  require_odd_prime_power(q, 5);
  const std::uint64_t g = std::gcd<std::uint64_t>(n, q - 1);
  const std::uint64_t qn = pow_checked(q, n);
  if (g == 1) return {(qn - 1) / (q - 1), DegreeStatus::theorem, "g=1 parabolic"};
  if (is_very_divisible(n, q)) return p_sln_very_divisible(n, q);
  const std::uint64_t sum = central_prime_part_sum(g, q);
  const std::uint64_t cmp = (q - 1) / g;
  DegreeResult r;
  r.case_label = "not very divisible";
  r.status = DegreeStatus::conjecture;
  if (cmp < sum)
    r.value = (qn - 1) / g;
  else if (cmp > sum)
    r.value = (qn - 1) / (q - 1) * sum;
  else {
    r.value = (qn - 1) / g;
    r.status = DegreeStatus::ambiguous_tie;
  }
  return r;
}

DegreeResult p_gl2(std::uint64_t q) {
  const DegreeResult sl = p_sl2(q);
  return {sl.value + cofactor_degree_sum(2, q, q - 1), DegreeStatus::theorem, sl.case_label};
}

DegreeResult p_gl3(std::uint64_t q) {
  const DegreeResult sl = p_sl3(q);
  return {sl.value + cofactor_degree_sum(3, q, q - 1), sl.status, sl.case_label};
}

DegreeResult p_gln_conjectured(std::uint32_t n, std::uint64_t q) {
  if (n < 2) throw InvalidInput("p_gln_conjectured: n >= 2 required");
  if (n == 2) return p_gl2(q);
  if (n == 3) return p_gl3(q);
  require_odd_prime_power(q, 5);
  const std::uint64_t g = std::gcd<std::uint64_t>(n, q - 1);
  const std::uint64_t tail = cofactor_degree_sum(n, q, q - 1);
  if (g == 1) {
    const std::uint64_t qn = pow_checked(q, n);
    return {(qn - 1) / (q - 1) + tail, DegreeStatus::conjecture, "g=1"};
  }
  DegreeResult sl = p_sln(n, q);
  DegreeResult r{sl.value + tail, sl.status, sl.case_label};
  if (r.status == DegreeStatus::theorem) r.status = DegreeStatus::conjecture;
  return r;
}

DegreeResult p_gln(std::uint32_t n, std::uint64_t q) {
  if (n == 2) return p_gl2(q);
  if (n == 3) return p_gl3(q);
  return p_gln_conjectured(n, q);
}

DegreeResult upper_bound_gln(std::uint32_t n, std::uint64_t q) {
  require_odd_prime_power(q, 5);
  if (n < 2) throw InvalidInput("upper_bound_gln: n >= 2 required");
  const SplitParts sp = split_parts(n, q, q - 1);
  const std::uint64_t qn = pow_checked(q, n);
  return {(qn - 1) / (q - 1) * sp.g_part + sp.cofactor_sum, DegreeStatus::upper_bound,
          "faithful collection"};
}

std::uint64_t h_t_cost(std::uint32_t n, std::uint64_t q, std::uint64_t t) {
  require_odd_prime_power(q, 3);
  if (t == 0 || (q - 1) % t != 0) throw InvalidInput("h_t_cost: t must divide q-1");
  if (t == q - 1) throw InvalidInput("h_t_cost: t = q-1 excluded");
  const std::uint64_t g = std::gcd<std::uint64_t>(n, q - 1);
  const auto d = least_index_divisor(n, g, t);
  if (!d) throw InvalidInput("h_t_cost: no subgroup with this central index exists");
  return *d * t;
}

}  // namespace minrep
