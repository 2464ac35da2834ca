#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "seqfam/field.hpp"

namespace seqfam {

/// The period-(q-1) Sidelnikov sequence over GF(q).
struct BaseSidelnikov {};
/// The period-(q^d-1) Sidelnikov sequence over GF(q^d).
struct ExtendedSidelnikov {
  unsigned d;
};
/// Column l of the (q-1) x (q^d-1)/(q-1) array.
struct Column {
  std::uint64_t l;
};
/// c * v_l, a member of the family.
struct ConstantMultiple {
  unsigned c;
  std::uint64_t l;
};
using Provenance = std::variant<BaseSidelnikov, ExtendedSidelnikov, Column, ConstantMultiple>;

/// M-ary sequence listed over one full period.
class MSequence {
 public:
  /// Throws ParameterError if the sequence is empty, M < 2, or a symbol is
  /// outside [0, M-1].
  MSequence(std::vector<std::uint32_t> symbols, unsigned M, Provenance provenance);

  std::size_t period() const { return symbols_.size(); }
  unsigned alphabet() const { return M_; }
  const std::vector<std::uint32_t>& symbols() const { return symbols_; }
  const Provenance& provenance() const { return provenance_; }

  /// s(t) with t taken modulo the period (negative t allowed).
  std::uint32_t operator[](std::int64_t t) const {
    const auto n = static_cast<std::int64_t>(symbols_.size());
    return symbols_[static_cast<std::size_t>(((t % n) + n) % n)];
  }

  friend bool operator==(const MSequence& a, const MSequence& b) {
    return a.M_ == b.M_ && a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::uint32_t> symbols_;
  unsigned M_;
  Provenance provenance_;
};

/// Throws ParameterError("M must divide q-1") unless M >= 2 and M | q-1.
void require_alphabet(std::uint64_t q, unsigned M);

/// Order-M multiplicative character of GF(q) with psi(0) = 1:
/// psi(x) = w_M^(log_beta x).
class Character {
 public:
  Character(FieldPtr field, unsigned M);

  unsigned order() const { return M_; }
  const FieldContext& field() const { return *field_; }

  /// log_beta(x) mod M, the exponent of w_M.
  unsigned exponent(Element x) const { return field_->dlog(x) % M_; }
  std::complex<double> operator()(Element x) const { return roots_[exponent(x)]; }
  /// psi^k(x).
  std::complex<double> power(Element x, std::int64_t k) const;

 private:
  FieldPtr field_;
  unsigned M_;
  std::vector<std::complex<double>> roots_;
};

/// w_M^k for k = 0..M-1; quarter turns are exact.
std::vector<std::complex<double>> unit_roots(unsigned M);

/// s(t) = log_beta(beta^t + 1) mod M, t = 0..q-2.
MSequence sidelnikov_sequence(const FieldContext& field, unsigned M);

/// s(t) = log_beta N(alpha^t + 1) mod M, t = 0..q^d-2. Computed through the
/// norm into GF(q), never through logs in GF(q^d).
MSequence sidelnikov_sequence_ext(const ExtensionContext& ext, unsigned M);

/// (c * s(t)) mod M, provenance carried over as ConstantMultiple when the
/// source is a column.
MSequence constant_multiple(const MSequence& seq, unsigned c);

/// t -> s(t + tau).
MSequence cyclic_shift(const MSequence& seq, std::int64_t tau);

}  // namespace seqfam
