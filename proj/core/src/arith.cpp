#include "minrep/arith.hpp"

#include <algorithm>
#include <numeric>

#include "minrep/errors.hpp"

namespace minrep {

Factorization factorize(std::uint64_t m) {
  if (m == 0) throw InvalidInput("factorize: m must be positive");
  Factorization f;
  f.value = m;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t m, std::uint64_t p) {
  if (m == 0) throw InvalidInput("p_part: m must be positive");
  if (!is_prime(p)) throw InvalidInput("p_part: p must be prime");
  std::uint64_t part = 1;
  while (m % p == 0) {
    m /= p;
    part *= p;
  }
  return part;
}

SplitParts split_parts(std::uint64_t n, std::uint64_t q, std::uint64_t m) {
  if (n == 0 || m == 0) throw InvalidInput("split_parts: n and m must be positive");
  if (q < 3 || q % 2 == 0) throw InvalidInput("split_parts: q must be an odd prime power >= 3");
  SplitParts s;
  s.g = std::gcd(n, q - 1);
  for (const auto& [p, e] : factorize(m).factors) {
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < e; ++i) pe *= p;
    if (s.g % p == 0)
      s.g_part *= pe;
    else
      s.cofactor_sum += pe;
  }
  return s;
}

bool is_very_divisible(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw InvalidInput("is_very_divisible: n must be positive");
  if (q < 3 || q % 2 == 0) throw InvalidInput("is_very_divisible: q must be odd, >= 3");
  const std::uint64_t g = std::gcd(n, q - 1);
  for (const auto& [p, e] : factorize(g).factors) {
    (void)e;
    if (n % p_part(q - 1, p) != 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> least_index_divisor(std::uint64_t n, std::uint64_t g,
                                                 std::uint64_t t) {
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d * d <= g; ++d) {
    if (g % d != 0) continue;
    divs.push_back(d);
    if (d != g / d) divs.push_back(g / d);
  }
  std::sort(divs.begin(), divs.end());
  for (std::uint64_t d : divs)
    if (d * t / std::gcd(n, d * t) == t) return d;
  return std::nullopt;
}

namespace {

void validate_choice_inputs(std::uint64_t target, std::uint64_t g, std::uint64_t n) {
  if (target == 0 || n == 0) throw InvalidInput("optimal_choice: positive inputs required");
  if (g == 0 || target % g != 0) throw InvalidInput("optimal_choice: g must divide target");
  if (std::gcd(n, target) != g)
    throw InvalidInput("optimal_choice: g must equal gcd(n, target)");
}

}  // namespace

OptimalChoice optimal_choice(std::uint64_t target, std::uint64_t g, std::uint64_t n) {
  validate_choice_inputs(target, g, n);
  (void)n;
  OptimalChoice c;
  for (const auto& [p, e] : factorize(target).factors) {
    if (g % p == 0) continue;
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < e; ++i) pe *= p;
    c.parts.push_back(pe);
    c.cost += pe;  // parts coprime to g always have d = 1
  }
  std::sort(c.parts.begin(), c.parts.end());
  return c;
}

OptimalChoice optimal_choice_bruteforce(std::uint64_t target, std::uint64_t g,
                                        std::uint64_t n) {
  validate_choice_inputs(target, g, n);
  if (target > 10000) throw CapExceeded("optimal_choice_bruteforce: target above search bound");

  // Prime powers that must appear at full multiplicity in the lcm; the g-part
  // of target is already supplied.
  struct Need {
    std::uint64_t prime;
    std::uint64_t full_power;
  };
  std::vector<Need> needs;
  for (const auto& [p, e] : factorize(target).factors) {
    if (g % p == 0) continue;
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < e; ++i) pe *= p;
    needs.push_back({p, pe});
  }

  struct Cand {
    std::uint64_t t;
    std::uint64_t cost;
    std::uint32_t covers;  // bitmask over `needs` whose full power divides t
  };
  std::vector<Cand> cands;
  for (std::uint64_t t = 1; t <= target; ++t) {
    if (target % t != 0) continue;
    auto d = least_index_divisor(n, g, t);
    if (!d) continue;
    std::uint32_t covers = 0;
    for (std::size_t i = 0; i < needs.size(); ++i)
      if (t % needs[i].full_power == 0 && (t / needs[i].full_power) % needs[i].prime != 0)
        covers |= 1u << i;
    cands.push_back({t, *d * t, covers});
  }

  const std::uint32_t full = needs.empty() ? 0 : (1u << needs.size()) - 1;
  OptimalChoice best;
  best.cost = UINT64_MAX;
  std::vector<std::uint64_t> cur;

  auto better = [&](std::uint64_t cost, const std::vector<std::uint64_t>& parts) {
    if (cost != best.cost) return cost < best.cost;
    std::vector<std::uint64_t> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    return sorted < best.parts;
  };

  // Cover the first unmet prime power each step; every minimal tuple is reached.
  auto dfs = [&](auto&& self, std::uint32_t covered, std::uint64_t cost) -> void {
    if (cost > best.cost) return;
    if (covered == full) {
      if (better(cost, cur)) {
        best.cost = cost;
        best.parts = cur;
        std::sort(best.parts.begin(), best.parts.end());
      }
      return;
    }
    std::size_t next = 0;
    while (covered & (1u << next)) ++next;
    for (const Cand& c : cands) {
      if (!(c.covers & (1u << next))) continue;
      cur.push_back(c.t);
      self(self, covered | c.covers, cost + c.cost);
      cur.pop_back();
    }
  };
  dfs(dfs, 0, 0);

  if (best.cost == UINT64_MAX)
    throw PreconditionViolated("optimal_choice_bruteforce: no admissible divisor tuple");
  return best;
}

std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = std::max<std::uint64_t>(lo, 3); q <= hi; ++q) {
    if (q % 2 == 0) continue;
    if (prime_power_split(q)) out.push_back(q);
  }
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_split(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.factors.size() != 1) return std::nullopt;
  return std::make_pair(f.factors[0].first, f.factors[0].second);
}

}  // namespace minrep
