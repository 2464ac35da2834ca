#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqfam/family.hpp"
#include "seqfam/field.hpp"

// Whole-parameter-set verification: each check exercises one identity or
// bound exhaustively and reports pass/fail with a short detail string.

namespace seqfam {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Long sequence via the norm equals log_alpha(alpha^t + 1) mod M at every t,
/// and s(t) = 0 wherever alpha^t = -1.
CheckResult check_norm_route(const ExtensionContext& ext, unsigned M);

/// Array identities over every column 0 <= l < S: strided extraction equals
/// the closed form, v_l = v_(lq mod q^d-1), v_l(t) = log f_l(beta^t) mod M, the
/// f_l = beta^l p_l^(d/d_l) and p_l = prod q_l^(sigma^(i m_l)) identities,
/// p_l root-free in GF(q) for l >= 1, d_l equal to the conjugate orbit size,
/// congruent columns cyclically equivalent, and the reflection identity
/// v_(S - T l) (t) = v_l(t - l + 1), T = (q^(d-1)-1)/(q-1), for 1 <= l <= q.
CheckResult check_array_identities(const ExtensionContext& ext, unsigned M);

/// p_l1 != beta^(-tau d_l2) p_l2(beta^tau x) for every l1, l2 in `columns`
/// and 0 <= tau <= q-2 except l1 = l2, tau = 0. Polynomials are built from
/// their roots and cross-checked against coefficient scaling.
CheckResult check_shift_distinctness(const ExtensionContext& ext,
                                     const std::vector<std::uint64_t>& columns);

/// Out-of-phase autocorrelation of the period-(q-1) sequence is at most 4.
CheckResult check_base_autocorrelation(const FieldContext& field, unsigned M);

/// Closed form = element-wise triple sum = coset count = number of verified
/// irreducible factors of x^S - 1.
CheckResult check_lambda_routes(const ExtensionContext& ext);

/// Formula N(f, b, q) equals the brute-force tally for every b != 0, and
/// |N - q^f/(f(q-1))| <= (2/f) q^(f/2).
CheckResult check_yucas_oracle(const FieldContext& field, unsigned f, unsigned jobs = 1);

struct VerifyOptions {
  Policy policy = Policy::strict;
  unsigned jobs = 1;
  std::uint64_t table_limit = kDefaultTableLimit;
  /// Largest q^f for the brute-force irreducible oracle.
  std::uint64_t oracle_limit = std::uint64_t{1} << 16;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  bool passed() const;
  nlohmann::json to_json() const;
};

VerifySummary verify_parameter_set(std::uint32_t p, unsigned n, unsigned d, unsigned M,
                                   const VerifyOptions& options);

}  // namespace seqfam
