#include "wzs/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wzs {

residue_t mul_mod(residue_t a, residue_t b, residue_t m) {
  return static_cast<residue_t>(static_cast<__int128>(a) * b % m);
}

residue_t pow_mod(residue_t base, std::uint64_t exp, residue_t m) {
  if (m == 1) return 0;
  residue_t result = 1;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

namespace {

// Returns (g, x) with a*x = g (mod m).
std::pair<residue_t, residue_t> ext_gcd(residue_t a, residue_t m) {
  residue_t old_r = a, r = m;
  residue_t old_s = 1, s = 0;
  while (r != 0) {
    const residue_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return {old_r, old_s};
}

}  // namespace

residue_t inverse_mod(residue_t a, residue_t m) {
  if (m == 1) return 0;
  const auto [g, x] = ext_gcd(mod(a, m), m);
  if (g != 1) {
    throw std::invalid_argument("inverse_mod: " + std::to_string(a) +
                                " is not invertible modulo " + std::to_string(m));
  }
  return mod(x, m);
}

residue_t PrimeFactor::power() const {
  residue_t q = 1;
  for (int i = 0; i < exponent; ++i) q *= prime;
  return q;
}

PrimeSieve::PrimeSieve(residue_t bound) : bound_(bound) {
  if (bound < 1) throw std::invalid_argument("PrimeSieve: bound must be >= 1");
  spf_.assign(static_cast<std::size_t>(bound) + 1, 0);
  for (residue_t i = 2; i <= bound; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (residue_t j = i * i; j <= bound; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

bool PrimeSieve::is_prime(residue_t n) const {
  if (n < 2 || n > bound_) return false;
  return spf_[n] == n;
}

std::vector<PrimeFactor> PrimeSieve::factorize(residue_t n) const {
  if (n < 1 || n > bound_) {
    throw std::out_of_range("factor: n = " + std::to_string(n) + " outside [1, " +
                            std::to_string(bound_) + "]");
  }
  std::vector<PrimeFactor> out;
  while (n > 1) {
    const residue_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

const PrimeSieve& PrimeSieve::shared() {
  static const PrimeSieve sieve;
  return sieve;
}

int ModulusProfile::big_omega() const {
  int total = 0;
  for (const auto& f : factors) total += f.exponent;
  return total;
}

int ModulusProfile::small_omega() const { return static_cast<int>(factors.size()); }

bool ModulusProfile::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimeFactor& f) { return f.exponent == 1; });
}

bool ModulusProfile::divisible_by(residue_t p) const { return n % p == 0; }

std::vector<residue_t> ModulusProfile::primes_n1() const {
  std::vector<residue_t> out;
  for (const auto& f : factors)
    if (f.prime % 3 == 1) out.push_back(f.prime);
  return out;
}

std::vector<residue_t> ModulusProfile::primes_n2() const {
  std::vector<residue_t> out;
  for (const auto& f : factors)
    if (f.prime % 3 == 2 && f.prime != 2) out.push_back(f.prime);
  return out;
}

std::vector<residue_t> ModulusProfile::primes() const {
  std::vector<residue_t> out;
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

ModulusProfile factor(residue_t n, const PrimeSieve& sieve) {
  ModulusProfile profile;
  profile.n = n;
  profile.factors = sieve.factorize(n);
  for (const auto& f : profile.factors) {
    const residue_t q = f.power();
    if (f.prime == 2 || f.prime == 3) {
      profile.three_part *= q;
    } else if (f.prime % 3 == 1) {
      profile.n1 *= q;
      profile.big_omega_n1 += f.exponent;
      profile.small_omega_n1 += 1;
    } else {
      profile.n2 *= q;
      profile.big_omega_n2 += f.exponent;
      profile.small_omega_n2 += 1;
    }
  }
  return profile;
}

std::vector<residue_t> divisors(const ModulusProfile& profile) {
  std::vector<residue_t> out{1};
  for (const auto& f : profile.factors) {
    const std::size_t base = out.size();
    residue_t q = 1;
    for (int e = 1; e <= f.exponent; ++e) {
      q *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<residue_t> units(residue_t m) {
  if (m < 1) throw std::invalid_argument("units: modulus must be >= 1");
  if (m == 1) return {0};
  std::vector<residue_t> out;
  for (residue_t x = 1; x < m; ++x)
    if (std::gcd(x, m) == 1) out.push_back(x);
  return out;
}

residue_t euler_phi(const ModulusProfile& profile) {
  residue_t phi = 1;
  for (const auto& f : profile.factors) phi *= f.power() / f.prime * (f.prime - 1);
  return phi;
}

residue_t crt_combine(std::span<const CrtPart> parts) {
  residue_t r = 0;
  residue_t m = 1;
  for (const auto& part : parts) {
    if (part.modulus < 1) throw std::invalid_argument("crt_combine: modulus must be >= 1");
    if (std::gcd(m, part.modulus) != 1) {
      throw std::invalid_argument("crt_combine: moduli are not pairwise coprime");
    }
    // r + m*t = residue (mod q)  =>  t = (residue - r) * m^-1 (mod q)
    const residue_t q = part.modulus;
    const residue_t t = mul_mod(mod(part.residue - r, q), inverse_mod(m % q, q), q);
    r += m * t;
    m *= q;
    r = mod(r, m);
  }
  return r;
}

std::vector<CrtPart> crt_split(residue_t x, const ModulusProfile& profile) {
  std::vector<CrtPart> out;
  for (const auto& f : profile.factors) {
    const residue_t q = f.power();
    out.push_back({mod(x, q), q});
  }
  return out;
}

namespace {

bool is_kth_power_unit(residue_t u, int k, residue_t p, int e) {
  residue_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  u = mod(u, q);
  if (q == 1) return true;
  if (p == 2) {
    if (k % 2 == 1) return true;
    // Z_{2^e}^* is not cyclic for e >= 3; enumerate.
    for (residue_t y = 1; y < q; y += 2)
      if (pow_mod(y, static_cast<std::uint64_t>(k), q) == u) return true;
    return false;
  }
  const residue_t phi = q / p * (p - 1);
  const residue_t d = std::gcd(static_cast<residue_t>(k), phi);
  return pow_mod(u, static_cast<std::uint64_t>(phi / d), q) == 1;
}

}  // namespace

bool is_kth_power_residue_prime_power(residue_t a, int k, residue_t p, int e) {
  if (k < 1) throw std::invalid_argument("is_kth_power_residue: k must be >= 1");
  residue_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  a = mod(a, q);
  if (a == 0) return true;
  // a = p^v * u with u a unit; x = p^w * y needs w*k = v and y^k = u mod p^(e-v).
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  if (v % k != 0) return false;
  return is_kth_power_unit(a, k, p, e - v);
}

bool is_kth_power_residue(residue_t a, int k, residue_t m) {
  if (m < 1) throw std::invalid_argument("is_kth_power_residue: modulus must be >= 1");
  if (k < 1) throw std::invalid_argument("is_kth_power_residue: k must be >= 1");
  const ModulusProfile profile = factor(m);
  return std::all_of(profile.factors.begin(), profile.factors.end(), [&](const PrimeFactor& f) {
    return is_kth_power_residue_prime_power(a, k, f.prime, f.exponent);
  });
}

}  // namespace wzs
