#include "minrep/field.hpp"

#include <algorithm>
#include <numeric>

#include "minrep/arith.hpp"
#include "minrep/errors.hpp"

namespace minrep {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 31;
constexpr std::uint64_t kLogTableLimit = std::uint64_t(1) << 20;

// Dense little-endian polynomials over F_p.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  const std::size_t d = mod.size() - 1;  // mod is monic
  for (std::size_t i = r.size(); i-- > d;) {
    const std::uint64_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (std::size_t j = 0; j < d; ++j)
      r[i - d + j] = (r[i - d + j] + (p - mod[j] % p) * c) % p;
  }
  r.resize(d);
  return r;
}

Poly poly_pow_x_mod(std::uint64_t exponent, const Poly& mod, std::uint64_t p) {
  const std::size_t d = mod.size() - 1;
  Poly result(d, 0);
  result[0] = 1;
  Poly base(d, 0);
  if (d == 1)
    base[0] = (p - mod[0] % p) % p;  // x reduces to a constant mod a linear modulus
  else
    base[1] = 1;
  while (exponent > 0) {
    if (exponent & 1) result = poly_mul_mod(result, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    exponent >>= 1;
  }
  return result;
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t d = m.size() - 1;
  while (a.size() > d) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    if (lead != 0)
      for (std::size_t j = 0; j <= d; ++j)
        a[shift + j] = (a[shift + j] + (p - (m[j] * lead) % p)) % p;
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  auto inv_mod_p = [&](std::uint64_t x) {
    std::uint64_t r = 1, base = x % p, k = p - 2;
    while (k) {
      if (k & 1) r = r * base % p;
      base = base * base % p;
      k >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    const std::uint64_t s = inv_mod_p(b.back());
    Poly bm = b;
    for (auto& c : bm) c = c * s % p;
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t e = f.size() - 1;
  if (e == 1) return true;
  if (f[0] == 0) return false;
  for (std::size_t k = 1; k <= e / 2; ++k) {
    std::uint64_t pk = 1;
    for (std::size_t i = 0; i < k; ++i) pk *= p;
    Poly xq = poly_pow_x_mod(pk, f, p);  // x^(p^k) mod f
    if (xq.size() < 2) xq.resize(2, 0);
    xq[1] = (xq[1] + p - 1) % p;  // x^(p^k) - x
    Poly g = poly_gcd(f, xq, p);
    if (!(g.size() == 1 && g[0] != 0)) return false;
  }
  return true;
}

}  // namespace

Field Field::make(std::uint64_t p, std::uint32_t e) {
  if (p == 2) throw InvalidInput("Field: characteristic 2 unsupported (q must be odd)");
  if (!is_prime(p)) throw InvalidInput("Field: p must be prime");
  if (e == 0) throw InvalidInput("Field: e must be positive");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidInput("Field: q exceeds 2^31");
  }

  Field F;
  F.p_ = p;
  F.e_ = e;
  F.q_ = q;

  if (e == 1) {
    F.modulus_ = {0, 1};  // x
  } else {
    // Least (c_0, ..., c_{e-1}) with x^e + c_{e-1} x^{e-1} + ... + c_0
    // irreducible; c_0 compared first.
    std::vector<std::uint32_t> c(e, 0);
    while (true) {
      Poly f(e + 1, 0);
      for (std::uint32_t i = 0; i < e; ++i) f[i] = c[i];
      f[e] = 1;
      if (is_irreducible(f, p)) {
        F.modulus_.resize(e + 1);
        for (std::uint32_t i = 0; i <= e; ++i) F.modulus_[i] = static_cast<std::uint32_t>(f[i]);
        break;
      }
      std::uint32_t i = e;
      bool rolled = true;
      while (i-- > 0) {
        if (++c[i] < p) {
          rolled = false;
          break;
        }
        c[i] = 0;
      }
      if (rolled) throw Error("Field: no irreducible modulus found");
    }
  }

  const auto qm1 = factorize(q - 1);
  auto order_is_full = [&](Elt x) {
    for (const auto& [ell, mult] : qm1.factors) {
      (void)mult;
      if (F.pow_slow(x, (q - 1) / ell) == F.one()) return false;
    }
    return true;
  };

  // Least element, coefficient order with a_0 most significant, of full order.
  {
    std::vector<std::uint32_t> a(e, 0);
    bool found = false;
    while (true) {
      Elt idx = 0;
      std::uint64_t base = 1;
      for (std::uint32_t i = 0; i < e; ++i) {
        idx = static_cast<Elt>(idx + std::uint64_t(a[i]) * base);
        base *= p;
      }
      if (idx != 0 && order_is_full(idx)) {
        F.primitive_ = idx;
        found = true;
        break;
      }
      std::uint32_t i = e;
      bool rolled = true;
      while (i-- > 0) {
        if (++a[i] < p) {
          rolled = false;
          break;
        }
        a[i] = 0;
      }
      if (rolled) break;
    }
    if (!found) throw Error("Field: no primitive element found");
  }

  if (q <= kLogTableLimit) {
    F.exp_.resize(q - 1);
    F.log_.assign(q, 0);
    Elt x = F.one();
    for (std::uint64_t k = 0; k < q - 1; ++k) {
      F.exp_[k] = x;
      F.log_[x] = static_cast<std::uint32_t>(k);
      x = F.mul_slow(x, F.primitive_);
    }
  }
  return F;
}

Field Field::from_order(std::uint64_t q) {
  auto pe = prime_power_split(q);
  if (!pe) throw InvalidInput("Field: q is not a prime power");
  return make(pe->first, pe->second);
}

Field::Elt Field::add(Elt a, Elt b) const {
  if (e_ == 1) return static_cast<Elt>((std::uint64_t(a) + b) % p_);
  Elt r = 0;
  std::uint64_t base = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint64_t s = (a / base) % p_ + (b / base) % p_;
    if (s >= p_) s -= p_;
    r = static_cast<Elt>(r + s * base);
    base *= p_;
  }
  return r;
}

Field::Elt Field::neg(Elt a) const {
  if (e_ == 1) return a == 0 ? 0 : static_cast<Elt>(p_ - a);
  Elt r = 0;
  std::uint64_t base = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint64_t d = (a / base) % p_;
    if (d != 0) r = static_cast<Elt>(r + (p_ - d) * base);
    base *= p_;
  }
  return r;
}

Field::Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Field::Elt Field::mul_slow(Elt a, Elt b) const {
  if (e_ == 1) return static_cast<Elt>(std::uint64_t(a) * b % p_);
  Poly pa(e_), pb(e_);
  std::uint64_t base = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    pa[i] = (a / base) % p_;
    pb[i] = (b / base) % p_;
    base *= p_;
  }
  Poly mod(modulus_.begin(), modulus_.end());
  Poly r = poly_mul_mod(pa, pb, mod, p_);
  Elt idx = 0;
  base = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (i < r.size()) idx = static_cast<Elt>(idx + r[i] * base);
    base *= p_;
  }
  return idx;
}

Field::Elt Field::mul(Elt a, Elt b) const {
  if (e_ == 1) return static_cast<Elt>(std::uint64_t(a) * b % p_);
  if (!exp_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
  }
  return mul_slow(a, b);
}

Field::Elt Field::pow_slow(Elt a, std::uint64_t k) const {
  Elt r = one();
  Elt base = a;
  while (k > 0) {
    if (k & 1) r = mul_slow(r, base);
    base = mul_slow(base, base);
    k >>= 1;
  }
  return r;
}

Field::Elt Field::pow(Elt a, std::uint64_t k) const {
  if (a == 0) return k == 0 ? one() : 0;
  if (!exp_.empty()) {
    const __uint128_t l = log_[a];
    return exp_[static_cast<std::uint64_t>(l * (k % (q_ - 1)) % (q_ - 1))];
  }
  Elt r = one();
  Elt base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

Field::Elt Field::inv(Elt a) const {
  if (a == 0) throw InvalidInput("Field::inv: zero has no inverse");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Field::Elt Field::element(std::uint64_t v) const {
  if (e_ == 1) return static_cast<Elt>(v % p_);
  if (v >= q_) throw InvalidInput("Field::element: index out of range");
  return static_cast<Elt>(v);
}

std::vector<std::uint32_t> Field::coeffs(Elt a) const {
  std::vector<std::uint32_t> c(e_);
  std::uint64_t v = a;
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return c;
}

bool Field::in_index_subgroup(Elt x, std::uint64_t t) const {
  if (x == 0) throw InvalidInput("in_index_subgroup: x must be nonzero");
  if (t == 0 || (q_ - 1) % t != 0) throw InvalidInput("in_index_subgroup: t must divide q-1");
  if (!exp_.empty()) return log_[x] % t == 0;
  return pow(x, (q_ - 1) / t) == one();
}

std::uint64_t Field::dlog(Elt x) const {
  if (x == 0) throw InvalidInput("dlog: zero has no discrete log");
  if (!exp_.empty()) return log_[x];
  Elt y = one();
  for (std::uint64_t k = 0; k < q_ - 1; ++k) {
    if (y == x) return k;
    y = mul(y, primitive_);
  }
  throw Error("dlog: element not generated by primitive");
}

FieldPtr make_field(std::uint64_t p, std::uint32_t e) {
  return std::make_shared<const Field>(Field::make(p, e));
}

FieldPtr field_of_order(std::uint64_t q) {
  return std::make_shared<const Field>(Field::from_order(q));
}

}  // namespace minrep
