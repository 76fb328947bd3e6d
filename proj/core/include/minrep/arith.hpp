#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace minrep {

/// Prime factorization of a positive integer, primes strictly increasing.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;  // (prime, exponent)
};

/// Deterministic trial division. m = 1 yields an empty factor list; m = 0 is rejected.
Factorization factorize(std::uint64_t m);

bool is_prime(std::uint64_t n);

/// Largest power of the prime p dividing m.
std::uint64_t p_part(std::uint64_t m, std::uint64_t p);

/// Split of m relative to g = gcd(n, q-1): the part supported on primes of g,
/// and the sum of the remaining prime-power parts.
struct SplitParts {
  std::uint64_t g_part = 1;        // product of p^a over primes p | g with p^a || m
  std::uint64_t cofactor_sum = 0;  // sum of the other prime-power parts of m
  std::uint64_t g = 1;             // gcd(n, q-1)
};

SplitParts split_parts(std::uint64_t n, std::uint64_t q, std::uint64_t m);

/// True iff for every prime p | gcd(n, q-1) the full p-part of q-1 divides n.
/// Vacuously true when the gcd is 1.
bool is_very_divisible(std::uint64_t n, std::uint64_t q);

/// A choice of pairwise coprime prime-power parts t_i of `target`, each coprime
/// to g, with lcm(g_part(target), t_2, ..., t_l) = target, minimizing the
/// summed cost d(t)*t.
struct OptimalChoice {
  std::vector<std::uint64_t> parts;  // sorted ascending
  std::uint64_t cost = 0;
};

/// Least divisor d of g such that d*t / gcd(n, d*t) = t, if one exists.
/// d*t is then the index of the cheapest subgroup whose central intersection
/// has index exactly t.
std::optional<std::uint64_t> least_index_divisor(std::uint64_t n, std::uint64_t g,
                                                 std::uint64_t t);

/// Closed form: the prime-power parts of target over primes not dividing g.
OptimalChoice optimal_choice(std::uint64_t target, std::uint64_t g, std::uint64_t n);

/// Exhaustive branch-and-bound over divisor tuples meeting the lcm constraint.
/// Ties broken by lexicographically smallest sorted part tuple. target <= 10^4.
OptimalChoice optimal_choice_bruteforce(std::uint64_t target, std::uint64_t g,
                                        std::uint64_t n);

/// Odd prime powers p^e in [lo, hi], ascending.
std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi);

/// (p, e) with q = p^e, or nothing if q is not a prime power.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_split(std::uint64_t q);

}  // namespace minrep
