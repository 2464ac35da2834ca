#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Integer helpers used by field construction and the counting formulas.
// Everything is trial-division based; inputs stay well below 2^48.

namespace seqfam::nt {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;
};

bool is_prime(u64 n);

/// Prime factorization in increasing prime order. factorize(1) is empty.
std::vector<PrimePower> factorize(u64 n);

/// All positive divisors, sorted ascending.
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);
int mobius(u64 n);

u64 gcd(u64 a, u64 b);

/// base^exp, throwing std::overflow_error if the result leaves 64 bits.
u64 checked_pow(u64 base, unsigned exp);

u64 pow_mod(u64 base, u64 exp, u64 mod);

/// Smallest e >= 1 with base^e = 1 (mod mod). Requires gcd(base, mod) = 1.
u64 multiplicative_order(u64 base, u64 mod);

/// If n = p^k with p prime and k >= 1, returns {p, k}; otherwise {0, 0}.
std::pair<u64, unsigned> as_prime_power(u64 n);

/// Prime powers q with lo <= q <= hi, ascending.
std::vector<u64> prime_powers_in(u64 lo, u64 hi);

}  // namespace seqfam::nt
