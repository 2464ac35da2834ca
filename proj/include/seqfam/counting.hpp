#pragma once

#include <cstdint>
#include <vector>

#include "seqfam/field.hpp"

// Counting monic irreducibles with a prescribed constant term, and through
// them the number of irreducible factors of x^S - 1, S = (q^d-1)/(q-1).

namespace seqfam {

/// r in A_f together with r = d_rf * m_rf, d_rf = gcd(r, (q^f-1)/(q-1)).
struct AfEntry {
  std::uint64_t r = 1;
  std::uint64_t d_rf = 1;
  std::uint64_t m_rf = 1;
};

/// Divisors r of q^f - 1 that divide no q^g - 1 with 1 <= g < f, ascending.
std::vector<AfEntry> a_f_set(std::uint64_t q, unsigned f);

/// N(f, b, q) for any b of multiplicative order m. Throws ParameterError if
/// m does not divide q-1.
std::uint64_t yucas_count_by_order(std::uint64_t q, unsigned f, std::uint64_t m);

/// Number of monic irreducible degree-f polynomials over GF(q) with constant
/// term (-1)^f b. Throws ParameterError for b = 0.
std::uint64_t yucas_count(const FieldContext& field, unsigned f, Element b);

/// One (e, m) cell of the triple sum over e | d, m | d/e, o(b) = m.
struct CountCell {
  unsigned e = 1;
  std::uint64_t m = 1;
  /// Elements b of GF(q) with order m.
  std::uint64_t elements = 0;
  /// N(e, b, q) for each of them.
  std::uint64_t per_element = 0;
  std::uint64_t contribution = 0;
};

struct LambdaCount {
  std::uint64_t value = 0;
  std::vector<CountCell> cells;
};

/// Triple sum over e | d, m | d/e and the field elements b with o(b) = m of
/// yucas_count(e, b).
LambdaCount lambda_size_by_elements(std::uint64_t q, unsigned d);

/// Closed form sum_{e|d} (1/e) sum_{m|d/e} sum_{r in A_e, m_re = m} phi(r).
std::uint64_t lambda_size_closed_form(std::uint64_t q, unsigned d);

/// Number of q-cyclotomic cosets mod (q^d-1)/(q-1).
std::uint64_t lambda_size_by_cosets(std::uint64_t q, unsigned d);

/// Agreed value of the element-wise and closed-form routes; throws
/// ConsistencyError if they differ.
std::uint64_t lambda_size(std::uint64_t q, unsigned d);

/// (M-1) q^(d-1) / d.
double asymptotic_size(std::uint64_t q, unsigned d, unsigned M);

/// q^f/(f(q-1)) and (2/f) q^(f/2): N(f, b, q) lies within radius of center.
double yucas_estimate_center(std::uint64_t q, unsigned f);
double yucas_estimate_radius(std::uint64_t q, unsigned f);

/// d sum_{e|d} q^e/(e^2 (q-1)) and 2d sum_{e|d} q^(e/2)/e^2.
double lambda_estimate_center(std::uint64_t q, unsigned d);
double lambda_estimate_radius(std::uint64_t q, unsigned d);

struct CountReport {
  std::uint64_t q = 0;
  unsigned d = 0;
  unsigned M = 0;
  std::uint64_t lambda_formula = 0;
  std::uint64_t lambda_elements = 0;
  std::uint64_t lambda_cosets = 0;
  std::uint64_t family_size = 0;
  double asymptotic = 0;
  /// family_size / asymptotic.
  double ratio = 0;
  double estimate_center = 0;
  double estimate_radius = 0;
  bool estimate_ok = false;
  std::vector<CountCell> cells;

  bool consistent() const {
    return lambda_formula == lambda_elements && lambda_formula == lambda_cosets && estimate_ok;
  }
};

/// Does not throw on route disagreement; consistent() reports it instead.
CountReport count_report(std::uint64_t q, unsigned d, unsigned M);

/// Exhaustive oracle: for every monic degree-f polynomial over `field`,
/// tests irreducibility via gcd with x^(q^k) - x and tallies by b, where the
/// constant term is (-1)^f b. Entry [b] holds the count; entry [0] counts x
/// itself when f = 1 and is 0 otherwise.
std::vector<std::uint64_t> brute_force_irreducible_counts(const FieldContext& field, unsigned f,
                                                          unsigned jobs = 1);

/// (1/f) sum_{k|f} mu(k) q^(f/k).
std::uint64_t necklace_count(std::uint64_t q, unsigned f);

}  // namespace seqfam
