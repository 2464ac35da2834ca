#include "seqfam/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace seqfam::nt {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<PrimePower> factorize(u64 n) {
  std::vector<PrimePower> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [prime, exponent] : factorize(n)) {
    const std::size_t prev = out.size();
    u64 power = 1;
    for (unsigned k = 1; k <= exponent; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < prev; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (const auto& pp : factorize(n)) result = result / pp.prime * (pp.prime - 1);
  return result;
}

int mobius(u64 n) {
  int sign = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<u64>::max() / base)
      throw std::overflow_error("integer power exceeds 64 bits");
    result *= base;
  }
  return result;
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<u64>(result);
}

u64 multiplicative_order(u64 base, u64 mod) {
  if (mod == 1) return 1;
  if (gcd(base % mod, mod) != 1)
    throw std::invalid_argument("multiplicative_order: base not invertible");
  u64 order = euler_phi(mod);
  for (const auto& pp : factorize(order)) {
    for (unsigned k = 0; k < pp.exponent; ++k) {
      if (pow_mod(base, order / pp.prime, mod) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

std::pair<u64, unsigned> as_prime_power(u64 n) {
  if (n < 2) return {0, 0};
  const auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return {f.front().prime, f.front().exponent};
}

std::vector<u64> prime_powers_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 q = std::max<u64>(lo, 2); q <= hi; ++q)
    if (as_prime_power(q).first != 0) out.push_back(q);
  return out;
}

}  // namespace seqfam::nt
