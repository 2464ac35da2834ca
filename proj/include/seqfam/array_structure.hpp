#pragma once

#include <cstdint>
#include <vector>

#include "seqfam/field.hpp"
#include "seqfam/sidelnikov.hpp"

// The long Sidelnikov sequence of period q^d-1 listed row by row as a
// (q-1) x S array, S = (q^d-1)/(q-1). Column l is v_l(t) = s(S t + l).

namespace seqfam {

/// Orbit of l under multiplication by q modulo `modulus`.
struct CyclotomicCoset {
  std::uint64_t modulus = 1;
  /// Smallest member (0 for the coset of 0).
  std::uint64_t representative = 0;
  /// l, ql, q^2 l, ... reduced modulo `modulus`, in orbit order.
  std::vector<std::uint64_t> members;

  std::size_t size() const { return members.size(); }
};

CyclotomicCoset coset(std::uint64_t l, std::uint64_t modulus, std::uint64_t q);

/// f_l(x) = N(alpha^l x + 1) = beta^l p_l(x)^(d/d_l).
struct ColumnPolynomial {
  std::uint64_t l = 0;
  /// Degree d, coefficients in GF(q).
  Poly f;
  /// Minimal polynomial of -alpha^(-l) over GF(q); monic, degree d_l.
  Poly p;
  /// prod over the first m_l orbit exponents j of (x + alpha^(-j)); monic,
  /// coefficients in GF(q^d) in general.
  Poly q_part;
  unsigned d_l = 1;
  unsigned m_l = 1;
};

/// v_l(t) = log_beta N(alpha^l beta^t + 1) mod M, 0 <= l < S.
/// Throws ParameterError if l is out of range or M does not divide q-1.
MSequence column_sequence(const ExtensionContext& ext, std::uint64_t l, unsigned M);

/// Column l read off the array listing of `long_sequence` by strided
/// indexing: t -> s(S t + l), index taken modulo the long period.
MSequence column_from_array(const MSequence& long_sequence, std::uint64_t width, std::uint64_t l);

/// Expands f_l from its d linear factors, builds p_l and q_l from their
/// roots, and checks f_l = beta^l p_l^(d/d_l) before returning. A failed
/// check throws ConsistencyError.
ColumnPolynomial column_polynomial(const ExtensionContext& ext, std::uint64_t l);

/// Applies x -> x^(q^j) to every coefficient.
Poly frobenius_poly(const ExtensionContext& ext, const Poly& p, unsigned j);

/// Size of the orbit of y under x -> x^q, i.e. the degree of its minimal
/// polynomial over GF(q).
unsigned conjugate_orbit_size(const ExtensionContext& ext, Element y);

}  // namespace seqfam
