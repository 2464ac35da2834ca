#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "seqfam/types.hpp"

// Schoolbook polynomial arithmetic over any field exposing element-level
// add/sub/mul/inv. Degrees here are small (at most a few dozen).

namespace seqfam {

template <class F>
concept FieldArithmetic = requires(const F& f, Element a, Element b) {
  { f.add(a, b) } -> std::same_as<Element>;
  { f.sub(a, b) } -> std::same_as<Element>;
  { f.mul(a, b) } -> std::same_as<Element>;
  { f.inv(a) } -> std::same_as<Element>;
  { f.order() } -> std::convertible_to<std::uint64_t>;
};

namespace poly {

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline bool is_monic(const Poly& p) { return !p.empty() && p.back() == 1; }

inline Poly monomial(std::size_t deg, Element coeff = 1) {
  if (coeff == 0) return {};
  Poly p(deg + 1, 0);
  p[deg] = coeff;
  return p;
}

template <FieldArithmetic F>
Poly add(const F& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Element x = i < a.size() ? a[i] : 0;
    const Element y = i < b.size() ? b[i] : 0;
    out[i] = f.add(x, y);
  }
  trim(out);
  return out;
}

template <FieldArithmetic F>
Poly sub(const F& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Element x = i < a.size() ? a[i] : 0;
    const Element y = i < b.size() ? b[i] : 0;
    out[i] = f.sub(x, y);
  }
  trim(out);
  return out;
}

template <FieldArithmetic F>
Poly scale(const F& f, const Poly& a, Element c) {
  if (c == 0) return {};
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
  trim(out);
  return out;
}

template <FieldArithmetic F>
Poly mul(const F& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

/// Returns {quotient, remainder}. Throws on division by the zero polynomial.
template <FieldArithmetic F>
std::pair<Poly, Poly> divmod(const F& f, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {Poly{}, rem};
  Poly quot(rem.size() - b.size() + 1, 0);
  const Element lead_inv = f.inv(b.back());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Element c = f.mul(rem[k + b.size() - 1], lead_inv);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[k + j] = f.sub(rem[k + j], f.mul(c, b[j]));
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

template <FieldArithmetic F>
Poly mod(const F& f, const Poly& a, const Poly& m) {
  return divmod(f, a, m).second;
}

template <FieldArithmetic F>
Poly make_monic(const F& f, const Poly& a) {
  if (a.empty()) return {};
  return scale(f, a, f.inv(a.back()));
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
template <FieldArithmetic F>
Poly gcd(const F& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, a);
}

template <FieldArithmetic F>
Poly mul_mod(const F& f, const Poly& a, const Poly& b, const Poly& m) {
  return mod(f, mul(f, a, b), m);
}

template <FieldArithmetic F>
Poly pow_mod(const F& f, Poly base, std::uint64_t exp, const Poly& m) {
  Poly result = mod(f, Poly{1}, m);
  base = mod(f, base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(f, result, base, m);
    exp >>= 1;
    if (exp > 0) base = mul_mod(f, base, base, m);
  }
  return result;
}

template <FieldArithmetic F>
Poly pow(const F& f, const Poly& base, unsigned exp) {
  Poly result{1};
  for (unsigned i = 0; i < exp; ++i) result = mul(f, result, base);
  return result;
}

template <FieldArithmetic F>
Element evaluate(const F& f, const Poly& p, Element x) {
  Element acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
  return acc;
}

/// p(c x): coefficient k is scaled by c^k.
template <FieldArithmetic F>
Poly substitute_scaled(const F& f, const Poly& p, Element c) {
  Poly out(p.size());
  Element power = 1;
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] = f.mul(p[k], power);
    power = f.mul(power, c);
  }
  trim(out);
  return out;
}

/// Product of (x - r) over the given roots.
template <FieldArithmetic F>
Poly from_roots(const F& f, std::span<const Element> roots) {
  Poly out{1};
  for (Element r : roots) {
    Poly next(out.size() + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], out[i]);
      next[i] = f.sub(next[i], f.mul(out[i], r));
    }
    out = std::move(next);
  }
  return out;
}

/// Rabin-style test: a polynomial m of degree n >= 1 is irreducible over
/// GF(Q) iff gcd(m, x^(Q^k) - x) = 1 for every 1 <= k <= n/2.
template <FieldArithmetic F>
bool is_irreducible(const F& f, const Poly& m) {
  const int n = degree(m);
  if (n < 1) return false;
  if (n == 1) return true;
  const std::uint64_t field_order = f.order();
  const Poly x{0, 1};
  Poly frob = x;
  for (int k = 1; k <= n / 2; ++k) {
    frob = pow_mod(f, frob, field_order, m);
    if (degree(gcd(f, m, sub(f, frob, x))) != 0) return false;
  }
  return true;
}

inline std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace poly
}  // namespace seqfam
