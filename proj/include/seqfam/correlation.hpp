#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "seqfam/family.hpp"
#include "seqfam/sidelnikov.hpp"

namespace seqfam {

/// Absolute tolerance for every comparison of a correlation against a bound.
inline constexpr double kCorrelationTolerance = 1e-6;

/// R(tau) = sum_t w_M^(a(t) - b(t + tau)), indices modulo the period.
/// Throws ParameterError on period or alphabet mismatch.
std::complex<double> cross_correlation(const MSequence& a, const MSequence& b, std::int64_t tau);

enum class CorrelationMethod {
  direct,
  /// All shifts at once through one inverse DFT per pair.
  fft,
  /// Family scans only: for each column pair and shift, one M x M DFT of the
  /// joint symbol counts gives every (c1, c2) at once. Per-pair calls treat
  /// it as automatic.
  column_dft,
  /// Family scans use column_dft; otherwise fft for periods >=
  /// kFftThreshold and direct below.
  automatic,
};

inline constexpr std::size_t kFftThreshold = 128;

/// R(tau) for tau = 0..period-1.
std::vector<std::complex<double>> correlation_all_shifts(const MSequence& a, const MSequence& b,
                                                         CorrelationMethod method);

/// One nontrivial correlation value, named by the provenance of both sides.
struct Witness {
  unsigned c1 = 0;
  std::uint64_t l1 = 0;
  unsigned c2 = 0;
  std::uint64_t l2 = 0;
  std::uint64_t tau = 0;
  double magnitude = 0;

  auto key() const { return std::tie(c1, l1, c2, l2, tau); }
  friend bool operator<(const Witness& a, const Witness& b) { return a.key() < b.key(); }
};

struct CorrelationReport {
  std::uint64_t q = 0;
  unsigned d = 0;
  unsigned M = 0;
  std::size_t family_size = 0;
  Policy policy = Policy::strict;

  double delta_max = 0;
  /// (2d-1) sqrt(q) + 1.
  double bound = 0;
  bool within_bound = true;
  /// Lexicographically smallest witnesses attaining delta_max (at 1e-6
  /// resolution), capped at ScanOptions::max_witnesses.
  std::vector<Witness> argmax;
  std::uint64_t argmax_total = 0;

  /// (round(|R| * 1e6), number of scanned values), ascending by key. Only
  /// pairs (i, j) with i <= j in family order are scanned.
  std::vector<std::pair<std::int64_t, std::uint64_t>> histogram;
  std::uint64_t values_scanned = 0;

  /// |R| <= (d_l1 + d_l2 - 1) sqrt(q) + 1 for every scanned value.
  std::uint64_t pair_bound_violations = 0;
  std::vector<Witness> pair_bound_examples;
  /// Largest |R| with l1 = l2, c1 != c2, tau = 0, and its bound
  /// max over l of (d_l - 1) sqrt(q) + 1.
  double same_column_max = 0;
  bool same_column_ok = true;
  /// Every in-phase autocorrelation equals the period.
  bool trivial_ok = true;

  double elapsed_seconds = 0;

  bool passed() const {
    return within_bound && pair_bound_violations == 0 && same_column_ok && trivial_ok;
  }
};

struct ScanOptions {
  unsigned jobs = 1;
  CorrelationMethod method = CorrelationMethod::automatic;
  std::size_t max_witnesses = 32;
};

/// Exhaustive scan of all nontrivial auto- and cross-correlations.
CorrelationReport max_correlation(const SequenceFamily& family, const ScanOptions& options = {});

/// Exact cyclic-shift comparison. Returns tau with a(t) = b(t + tau) for all
/// t, if any.
std::optional<std::uint64_t> cyclic_equivalence_shift(const MSequence& a, const MSequence& b);

struct EquivalenceWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  /// seq[first](t) = seq[second](t + shift).
  std::uint64_t shift = 0;
};

struct InequivalenceResult {
  bool inequivalent = true;
  std::optional<EquivalenceWitness> witness;
};

/// True iff no two distinct entries are cyclic shifts of one another. Uses
/// exact canonical rotations; the reported witness is re-checked symbol by
/// symbol.
InequivalenceResult cyclic_inequivalence(std::span<const MSequence> sequences);
InequivalenceResult cyclic_inequivalence(const SequenceFamily& family);

struct WeilTerm {
  unsigned degree = 1;
  /// Number of distinct roots of the polynomial in GF(q).
  unsigned roots_in_field = 0;
  unsigned character_order = 2;
};

struct WeilBoundInput {
  std::uint64_t q = 0;
  std::vector<WeilTerm> terms;
};

/// (sum d_j - 1) sqrt(q) + sum e_j. Throws ParameterError for an empty term
/// list.
double weil_bound(const WeilBoundInput& input);

/// psi^power(scalar * poly(x)).
struct CharacterSumTerm {
  Poly poly;
  Element scalar = 1;
  std::int64_t power = 1;
};

/// sum over all x in GF(q) of prod_j psi^(k_j)(a_j f_j(x)), with psi(0) = 1.
std::complex<double> empirical_character_sum(const Character& psi,
                                             std::span<const CharacterSumTerm> terms);

/// The correlation of c1 v_l1 and c2 v_l2 at shift tau, rewritten as
/// sum_x psi^c1(f_l1(x)) psi^(-c2)(f_l2(beta^tau x)) - 1.
std::complex<double> character_sum_correlation(const ExtensionContext& ext, unsigned M,
                                               unsigned c1, std::uint64_t l1, unsigned c2,
                                               std::uint64_t l2, std::uint64_t tau);

/// sum_x psi_1(p_l1(x)) psi_2(p_l2(beta^tau x)) with psi_1 = psi^(c1 d/d_l1),
/// psi_2 = psi^(-c2 d/d_l2). Its magnitude equals |R(tau) + 1|.
std::complex<double> reduced_character_sum(const ExtensionContext& ext, unsigned M, unsigned c1,
                                           std::uint64_t l1, unsigned c2, std::uint64_t l2,
                                           std::uint64_t tau);

}  // namespace seqfam
