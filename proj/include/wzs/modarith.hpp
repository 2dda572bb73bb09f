#pragma once

// Residue arithmetic for Z_n at desk scale: factorization with a prime
// sieve, CRT lifting/splitting and k-th power residue tests.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wzs {

using residue_t = std::int64_t;

/// Reduces `x` into [0, m).
constexpr residue_t mod(residue_t x, residue_t m) {
  const residue_t r = x % m;
  return r < 0 ? r + m : r;
}

residue_t mul_mod(residue_t a, residue_t b, residue_t m);
residue_t pow_mod(residue_t base, std::uint64_t exp, residue_t m);

/// Inverse of `a` modulo `m`; throws std::invalid_argument if gcd(a, m) != 1.
residue_t inverse_mod(residue_t a, residue_t m);

struct PrimeFactor {
  residue_t prime;
  int exponent;

  residue_t power() const;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Smallest-prime-factor sieve up to a fixed bound.
class PrimeSieve {
 public:
  static constexpr residue_t kDefaultBound = 1'000'000;

  explicit PrimeSieve(residue_t bound = kDefaultBound);

  residue_t bound() const { return bound_; }
  bool is_prime(residue_t n) const;
  std::vector<PrimeFactor> factorize(residue_t n) const;

  /// Shared sieve with the default bound, built on first use.
  static const PrimeSieve& shared();

 private:
  residue_t bound_;
  std::vector<std::uint32_t> spf_;
};

/// n together with its factorization and the split of its primes by
/// residue class mod 3. Primes 2 and 3 land in `three_part`.
struct ModulusProfile {
  residue_t n = 1;
  std::vector<PrimeFactor> factors;
  residue_t n1 = 1;
  residue_t n2 = 1;
  residue_t three_part = 1;
  int big_omega_n1 = 0;
  int big_omega_n2 = 0;
  int small_omega_n1 = 0;
  int small_omega_n2 = 0;

  int big_omega() const;
  int small_omega() const;
  bool is_squarefree() const;
  bool divisible_by(residue_t p) const;

  /// Distinct primes p | n1, increasing.
  std::vector<residue_t> primes_n1() const;
  /// Distinct primes q | n2, increasing.
  std::vector<residue_t> primes_n2() const;
  std::vector<residue_t> primes() const;
};

/// Factors `n` with the given sieve; std::out_of_range if n is outside
/// [1, sieve.bound()].
ModulusProfile factor(residue_t n, const PrimeSieve& sieve = PrimeSieve::shared());

/// Positive divisors of n in increasing order.
std::vector<residue_t> divisors(const ModulusProfile& profile);

/// Residues coprime to m. For m = 1 this is {0}: Z_1 is the trivial group.
std::vector<residue_t> units(residue_t m);

residue_t euler_phi(const ModulusProfile& profile);

struct CrtPart {
  residue_t residue;
  residue_t modulus;
};

/// Unique r mod prod(moduli) with r = residue_i (mod modulus_i).
/// Throws std::invalid_argument if the moduli are not pairwise coprime.
residue_t crt_combine(std::span<const CrtPart> parts);

/// Images of x under Z_n -> Z_{p^e} for each prime power of the profile.
std::vector<CrtPart> crt_split(residue_t x, const ModulusProfile& profile);

/// True iff x^k = a (mod m) is solvable. Decided per prime power of m and
/// combined by conjunction.
bool is_kth_power_residue(residue_t a, int k, residue_t m);

/// Same test restricted to a single prime power p^e.
bool is_kth_power_residue_prime_power(residue_t a, int k, residue_t p, int e);

}  // namespace wzs
