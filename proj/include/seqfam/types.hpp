#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqfam {

/// A field element, packed as a base-p integer with the low-degree
/// coefficient least significant. 0 and 1 encode zero and one in every field.
using Element = std::uint32_t;

/// Dense polynomial, constant term first. The zero polynomial is empty and
/// nonzero polynomials carry no trailing zero coefficients.
using Poly = std::vector<Element>;

/// Invalid user-supplied parameters (composite p, M not dividing q-1, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested field exceeds the discrete-log table limit.
class TableLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An algebraic identity that must hold by construction was violated.
/// Always a bug in field or polynomial arithmetic.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace seqfam
