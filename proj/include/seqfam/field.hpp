#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "seqfam/polynomial.hpp"
#include "seqfam/types.hpp"

namespace seqfam {

/// Largest field order (and hence discrete-log table size) built by default.
inline constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 24;

/// Arithmetic in Z/pZ. Used to bootstrap GF(p^n) before any tables exist.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint64_t order() const { return p_; }
  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  Element inv(Element a) const;

 private:
  std::uint32_t p_;
};

/// Elements of a finite field of order Q = p^k stored as base-p integers,
/// with multiplication through exp/log tables over a fixed generator.
/// Addition works digit-wise in base p and never touches the tables.
class TabulatedField {
 public:
  std::uint32_t characteristic() const { return p_; }
  std::uint64_t order() const { return order_; }
  /// Fixed primitive element the log table is taken to.
  Element generator() const { return exp_[order_ > 2 ? 1 : 0]; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const { return sub(0, a); }
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
    if (e >= order_ - 1) e -= order_ - 1;
    return exp_[e];
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  /// generator^t for any t >= 0.
  Element exp(std::uint64_t t) const { return exp_[t % (order_ - 1)]; }
  /// Discrete log to the generator, with the convention dlog(0) = 0.
  std::uint32_t dlog(Element x) const { return log_[x]; }

  /// Image of an integer under Z -> prime subfield.
  Element from_integer(std::int64_t k) const;

  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }

 protected:
  TabulatedField() = default;
  void init_digits(std::uint32_t p, unsigned digits);
  void set_tables(std::vector<std::uint32_t> exp_table);

  std::uint32_t p_ = 0;
  unsigned digits_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// GF(q) = GF(p)[x]/(modulus) with primitive element beta.
class FieldContext : public TabulatedField {
 public:
  std::uint32_t p() const { return p_; }
  unsigned n() const { return digits_; }
  std::uint32_t q() const { return static_cast<std::uint32_t>(order_); }
  const Poly& modulus() const { return modulus_; }
  Element beta() const { return beta_; }

  /// Multiplication through the polynomial representation, bypassing the
  /// tables. Slow; used to cross-check the tabulated path.
  Element mul_polynomial(Element a, Element b) const;
  Element pow_polynomial(Element a, std::uint64_t e) const;

 private:
  friend std::shared_ptr<const FieldContext> build_field(std::uint32_t, unsigned,
                                                         std::uint64_t);
  PrimeField prime_{2};
  Poly modulus_;
  Element beta_ = 1;
};

/// GF(q^d) as a degree-d extension of a FieldContext, with alpha primitive
/// and N(alpha) equal to the base field's beta. Elements of GF(q) keep their
/// encoding (constant polynomials).
class ExtensionContext : public TabulatedField {
 public:
  const FieldContext& base() const { return *base_; }
  std::shared_ptr<const FieldContext> base_ptr() const { return base_; }
  unsigned d() const { return d_; }
  std::uint32_t q() const { return base_->q(); }
  const Poly& modulus() const { return modulus_; }
  Element alpha() const { return alpha_; }
  /// (q^d - 1)/(q - 1), the exponent of the norm map and the array width.
  std::uint64_t norm_exponent() const { return norm_exponent_; }

  bool in_base_field(Element x) const { return x < base_->q(); }

  /// x^(q^j).
  Element frobenius(Element x, unsigned j = 1) const;
  Element norm(Element x) const { return pow(x, norm_exponent_); }
  Element trace(Element x) const;

  Element mul_polynomial(Element a, Element b) const;
  Element pow_polynomial(Element a, std::uint64_t e) const;

 private:
  friend std::shared_ptr<const ExtensionContext> build_extension(
      std::shared_ptr<const FieldContext>, unsigned, std::uint64_t);
  std::shared_ptr<const FieldContext> base_;
  unsigned d_ = 0;
  Poly modulus_;
  Element alpha_ = 1;
  std::uint64_t norm_exponent_ = 1;
};

using FieldPtr = std::shared_ptr<const FieldContext>;
using ExtensionPtr = std::shared_ptr<const ExtensionContext>;

/// GF(p^n), deterministic: lexicographically smallest monic irreducible
/// modulus (coefficients compared constant term first) and smallest-encoding
/// primitive element.
FieldPtr build_field(std::uint32_t p, unsigned n,
                     std::uint64_t table_limit = kDefaultTableLimit);

/// GF(q^d) over `base`; alpha is the smallest-encoding primitive element whose
/// norm equals base->beta().
ExtensionPtr build_extension(FieldPtr base, unsigned d,
                             std::uint64_t table_limit = kDefaultTableLimit);

}  // namespace seqfam
