#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqfam/array_structure.hpp"
#include "seqfam/field.hpp"
#include "seqfam/sidelnikov.hpp"

namespace seqfam {

enum class Policy {
  /// Both parameter conditions required.
  strict,
  /// d = 2 and q odd only: the gcd condition is waived and (q+1)/2 is
  /// removed from the representatives.
  relaxed_d2,
};

std::string to_string(Policy policy);
/// Accepts "strict" and "relaxed-d2"; throws ParameterError otherwise.
Policy parse_policy(const std::string& text);

/// Outcome of the two parameter conditions gcd(d, q-1) = 1 and
/// d < (sqrt(q) - 2/sqrt(q) + 1)/2.
struct RestrictionReport {
  std::uint64_t q = 0;
  unsigned d = 0;
  std::uint64_t gcd_value = 0;
  bool gcd_ok = false;
  /// Right-hand side of the degree condition, for display.
  double degree_limit = 0;
  /// Decided exactly as (2d-1)^2 q < (q-2)^2 with q > 2.
  bool degree_ok = false;
  /// d = 2 and q odd: the gcd condition may be dropped.
  bool relaxation_applicable = false;
  /// Under the relaxation (q+1)/2 must also leave the representative set.
  bool relaxation_drops_half = false;

  bool satisfied(Policy policy) const;
};

RestrictionReport check_restrictions(std::uint64_t q, unsigned d);

/// Thrown by build_family when the chosen policy's conditions fail.
class RestrictionError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Smallest member of every q-cyclotomic coset mod (q^d-1)/(q-1), ascending,
/// including 0.
std::vector<std::uint64_t> coset_representatives(std::uint64_t q, unsigned d);

struct FamilyMember {
  unsigned c = 1;
  std::uint64_t l = 0;
  /// Size of the coset of l mod q^d-1 (degree of p_l).
  unsigned d_l = 1;
  MSequence sequence;
};

struct SequenceFamily {
  std::uint64_t q = 0;
  unsigned d = 0;
  unsigned M = 0;
  Policy policy = Policy::strict;
  /// All coset representatives, 0 included.
  std::vector<std::uint64_t> lambda;
  /// Representatives that index columns (lambda minus 0, and minus (q+1)/2
  /// under relaxed-d2).
  std::vector<std::uint64_t> columns;
  RestrictionReport restrictions;
  /// Ordered by (l, c).
  std::vector<FamilyMember> members;

  std::size_t size() const { return members.size(); }
};

/// Materializes every c * v_l, 1 <= c <= M-1, l in `columns`.
/// Throws RestrictionError if `policy` is not satisfied and ParameterError
/// if M does not divide q-1.
SequenceFamily build_family(const ExtensionContext& ext, unsigned M, Policy policy,
                            unsigned jobs = 1);

/// Roots route: prod_j (x + alpha^(-l q^j) beta^(-tau)) over the coset of l.
Poly shifted_minimal_polynomial(const ExtensionContext& ext, std::uint64_t l, std::uint64_t tau);

/// Coefficient route: beta^(-tau d_l) p_l(beta^tau x).
Poly scaled_minimal_polynomial(const ExtensionContext& ext, std::uint64_t l, std::uint64_t tau);

/// True iff p_{l1} and beta^(-tau d_{l2}) p_{l2}(beta^tau x) differ.
bool distinct_shift_check(const ExtensionContext& ext, std::uint64_t l1, std::uint64_t l2,
                          std::uint64_t tau);

/// Minimal polynomial over GF(q) of gamma^l, gamma = alpha^(q-1), for a
/// coset representative l mod (q^d-1)/(q-1).
struct CyclotomicFactor {
  std::uint64_t representative = 0;
  Poly poly;
};

std::vector<CyclotomicFactor> cyclotomic_factors(const ExtensionContext& ext);

/// Checks that `factors` is the complete factorization of x^S - 1 over GF(q),
/// S = (q^d-1)/(q-1).
struct FactorizationCheck {
  std::size_t factor_count = 0;
  bool coefficients_in_base = true;
  bool all_irreducible = true;
  bool all_distinct = true;
  bool all_divide = true;
  bool degree_sum_ok = true;
  /// Whether the full product was multiplied out (only for small S).
  bool product_expanded = false;
  bool product_ok = true;
  /// Every factor x^e + ... + (-1)^e b has e | d and b^(d/e) = 1.
  bool constant_terms_ok = true;

  bool ok() const {
    return coefficients_in_base && all_irreducible && all_distinct && all_divide &&
           degree_sum_ok && product_ok && constant_terms_ok;
  }
};

FactorizationCheck verify_factorization(const ExtensionContext& ext,
                                        const std::vector<CyclotomicFactor>& factors,
                                        std::uint64_t expand_limit = 4096);

}  // namespace seqfam
