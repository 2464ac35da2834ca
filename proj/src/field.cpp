#include "seqfam/field.hpp"

#include <string>

#include "seqfam/number_theory.hpp"

namespace seqfam {

namespace {

Poly decode(Element x, std::uint64_t radix, unsigned k) {
  Poly out(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    out[i] = static_cast<Element>(x % radix);
    x = static_cast<Element>(x / radix);
  }
  poly::trim(out);
  return out;
}

Element encode(const Poly& p, std::uint64_t radix) {
  std::uint64_t acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * radix + p[i];
  return static_cast<Element>(acc);
}

// Monic degree-k polynomials are visited with the constant term as the most
// significant sort key, so the first irreducible found is the
// lexicographically smallest coefficient vector read from the constant term.
template <FieldArithmetic F>
Poly smallest_irreducible(const F& sub, unsigned k) {
  const std::uint64_t radix = sub.order();
  const std::uint64_t count = nt::checked_pow(radix, k);
  for (std::uint64_t i = 0; i < count; ++i) {
    Poly m(k + 1, 0);
    std::uint64_t rest = i;
    for (unsigned j = k; j-- > 0;) {
      m[j] = static_cast<Element>(rest % radix);
      rest /= radix;
    }
    m[k] = 1;
    if (poly::is_irreducible(sub, m)) return m;
  }
  throw ConsistencyError("no irreducible polynomial of degree " + std::to_string(k));
}

template <FieldArithmetic F>
Element pow_in_quotient(const F& sub, const Poly& modulus, Element x, std::uint64_t e) {
  const auto k = static_cast<unsigned>(poly::degree(modulus));
  return encode(poly::pow_mod(sub, decode(x, sub.order(), k), e, modulus), sub.order());
}

template <FieldArithmetic F>
Element mul_in_quotient(const F& sub, const Poly& modulus, Element a, Element b) {
  const auto k = static_cast<unsigned>(poly::degree(modulus));
  const std::uint64_t radix = sub.order();
  return encode(poly::mul_mod(sub, decode(a, radix, k), decode(b, radix, k), modulus), radix);
}

template <FieldArithmetic F>
Element smallest_primitive(const F& sub, const Poly& modulus, std::uint64_t order) {
  const auto factors = nt::factorize(order - 1);
  for (std::uint64_t x = 1; x < order; ++x) {
    bool primitive = true;
    for (const auto& pp : factors) {
      if (pow_in_quotient(sub, modulus, static_cast<Element>(x), (order - 1) / pp.prime) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return static_cast<Element>(x);
  }
  throw ConsistencyError("no primitive element found");
}

template <FieldArithmetic F>
std::vector<std::uint32_t> power_table(const F& sub, const Poly& modulus, std::uint64_t order,
                                       Element generator) {
  const auto k = static_cast<unsigned>(poly::degree(modulus));
  const std::uint64_t radix = sub.order();
  const Poly g = decode(generator, radix, k);
  std::vector<std::uint32_t> table(order - 1);
  Poly cur{1};
  for (std::uint64_t t = 0; t + 1 < order; ++t) {
    table[t] = encode(cur, radix);
    cur = poly::mul_mod(sub, cur, g, modulus);
  }
  return table;
}

void check_limit(std::uint64_t order, std::uint64_t limit) {
  if (order > limit)
    throw TableLimitError("field order " + std::to_string(order) + " exceeds table limit " +
                          std::to_string(limit));
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!nt::is_prime(p)) throw ParameterError("p must be prime, got " + std::to_string(p));
}

Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return static_cast<Element>(nt::pow_mod(a, p_ - 2, p_));
}

void TabulatedField::init_digits(std::uint32_t p, unsigned digits) {
  p_ = p;
  digits_ = digits;
  order_ = nt::checked_pow(p, digits);
}

void TabulatedField::set_tables(std::vector<std::uint32_t> exp_table) {
  exp_ = std::move(exp_table);
  log_.assign(order_, 0);
  std::vector<bool> seen(order_, false);
  for (std::uint64_t t = 0; t < exp_.size(); ++t) {
    const Element x = exp_[t];
    if (x == 0 || x >= order_ || seen[x])
      throw ConsistencyError("power table is not a permutation of the nonzero elements");
    seen[x] = true;
    log_[x] = static_cast<std::uint32_t>(t);
  }
}

Element TabulatedField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  Element out = 0;
  Element weight = 1;
  for (unsigned i = 0; i < digits_; ++i) {
    out += ((a % p_ + b % p_) % p_) * weight;
    a /= p_;
    b /= p_;
    weight *= p_;
  }
  return out;
}

Element TabulatedField::sub(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  Element out = 0;
  Element weight = 1;
  for (unsigned i = 0; i < digits_; ++i) {
    out += ((a % p_ + p_ - b % p_) % p_) * weight;
    a /= p_;
    b /= p_;
    weight *= p_;
  }
  return out;
}

Element TabulatedField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint64_t period = order_ - 1;
  return exp_[(period - log_[a]) % period];
}

Element TabulatedField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t period = order_ - 1;
  const auto prod = static_cast<unsigned __int128>(log_[a]) * (e % period);
  return exp_[static_cast<std::uint64_t>(prod % period)];
}

Element TabulatedField::from_integer(std::int64_t k) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Element>(((k % p) + p) % p);
}

Element FieldContext::mul_polynomial(Element a, Element b) const {
  return mul_in_quotient(prime_, modulus_, a, b);
}

Element FieldContext::pow_polynomial(Element a, std::uint64_t e) const {
  return pow_in_quotient(prime_, modulus_, a, e);
}

Element ExtensionContext::frobenius(Element x, unsigned j) const {
  if (x == 0) return 0;
  return pow(x, nt::pow_mod(q(), j, order_ - 1) + (order_ - 1));
}

Element ExtensionContext::trace(Element x) const {
  Element acc = 0;
  for (unsigned j = 0; j < d_; ++j) acc = add(acc, frobenius(x, j));
  return acc;
}

Element ExtensionContext::mul_polynomial(Element a, Element b) const {
  return mul_in_quotient(*base_, modulus_, a, b);
}

Element ExtensionContext::pow_polynomial(Element a, std::uint64_t e) const {
  return pow_in_quotient(*base_, modulus_, a, e);
}

FieldPtr build_field(std::uint32_t p, unsigned n, std::uint64_t table_limit) {
  if (n < 1) throw ParameterError("extension degree n must be >= 1");
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->prime_ = PrimeField(p);
  std::uint64_t order = 0;
  try {
    order = nt::checked_pow(p, n);
  } catch (const std::overflow_error&) {
    throw TableLimitError("field order p^n overflows");
  }
  check_limit(order, table_limit);
  ctx->init_digits(p, n);
  ctx->modulus_ = smallest_irreducible(ctx->prime_, n);
  ctx->beta_ = smallest_primitive(ctx->prime_, ctx->modulus_, order);
  ctx->set_tables(power_table(ctx->prime_, ctx->modulus_, order, ctx->beta_));
  return ctx;
}

ExtensionPtr build_extension(FieldPtr base, unsigned d, std::uint64_t table_limit) {
  if (!base) throw ParameterError("build_extension: null base field");
  if (d < 2) throw ParameterError("extension degree d must be >= 2");
  const std::uint64_t q = base->q();
  std::uint64_t order = 0;
  try {
    order = nt::checked_pow(q, d);
  } catch (const std::overflow_error&) {
    throw TableLimitError("field order q^d overflows");
  }
  check_limit(order, table_limit);

  auto ext = std::shared_ptr<ExtensionContext>(new ExtensionContext());
  ext->base_ = base;
  ext->d_ = d;
  ext->init_digits(base->p(), base->n() * d);
  ext->modulus_ = smallest_irreducible(*base, d);
  ext->norm_exponent_ = (order - 1) / (q - 1);

  // Tabulate with the smallest primitive element g first, then pick alpha =
  // g^k of smallest encoding with gcd(k, Q-1) = 1 and N(g^k) = beta.
  const Element g = smallest_primitive(*base, ext->modulus_, order);
  ext->set_tables(power_table(*base, ext->modulus_, order, g));

  const std::uint64_t period = order - 1;
  const Element beta = base->beta();
  Element alpha = 0;
  std::uint64_t alpha_log = 0;
  for (std::uint64_t x = 1; x < order && alpha == 0; ++x) {
    const std::uint64_t k = ext->dlog(static_cast<Element>(x));
    if (nt::gcd(k, period) != 1) continue;
    const Element nx = ext->pow(static_cast<Element>(x), ext->norm_exponent_);
    if (!ext->in_base_field(nx))
      throw ConsistencyError("norm of an extension element left the base field");
    if (nx == beta) {
      alpha = static_cast<Element>(x);
      alpha_log = k;
    }
  }
  if (alpha == 0) throw ConsistencyError("no primitive element with norm beta");

  std::vector<std::uint32_t> exp_alpha(period);
  const auto& exp_g = ext->exp_table();
  for (std::uint64_t t = 0; t < period; ++t)
    exp_alpha[t] = exp_g[static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(t) * alpha_log % period)];
  ext->set_tables(std::move(exp_alpha));
  ext->alpha_ = alpha;
  return ext;
}

}  // namespace seqfam
