#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "seqfam/correlation.hpp"
#include "seqfam/family.hpp"
#include "seqfam/number_theory.hpp"

using namespace seqfam;

namespace {

ExtensionPtr gf16_squared() { return build_extension(build_field(2, 4), 2); }

// Largest nontrivial |R| over pairs i <= j, straight from the definition.
double oracle_delta_max(const SequenceFamily& fam) {
  double worst = 0;
  const std::size_t n = fam.members.front().sequence.period();
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i; j < fam.size(); ++j)
      for (std::size_t tau = 0; tau < n; ++tau) {
        if (i == j && tau == 0) continue;
        const auto r = oracle::correlation(fam.members[i].sequence.symbols(),
                                           fam.members[j].sequence.symbols(), fam.M, tau);
        worst = std::max(worst, std::abs(r));
      }
  return worst;
}

SequenceFamily single(const MSequence& seq, std::uint64_t q, unsigned d) {
  SequenceFamily fam;
  fam.q = q;
  fam.d = d;
  fam.M = seq.alphabet();
  fam.members.push_back({1, 1, 1, seq});
  return fam;
}

}  // namespace

TEST_CASE("basic correlation identities") {
  const auto ext = gf16_squared();
  const MSequence a = column_sequence(*ext, 1, 5);
  const MSequence b = constant_multiple(column_sequence(*ext, 3, 5), 2);
  CHECK(cross_correlation(a, a, 0).real() == doctest::Approx(15));
  CHECK(std::abs(cross_correlation(a, a, 0).imag()) < 1e-9);
  for (std::int64_t tau = -3; tau < 20; ++tau) {
    const auto ab = cross_correlation(a, b, tau);
    const auto ba = cross_correlation(b, a, -tau);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-9);
    CHECK(std::abs(ab - oracle::correlation(a.symbols(), b.symbols(), 5,
                                            static_cast<std::size_t>((tau + 15) % 15))) < 1e-9);
  }
  const MSequence other = sidelnikov_sequence_ext(*ext, 5);
  CHECK_THROWS_AS(cross_correlation(a, other, 0), ParameterError);
  CHECK_THROWS_AS(cross_correlation(a, column_sequence(*ext, 1, 3), 0), ParameterError);
}

TEST_CASE("direct and fft shift profiles agree") {
  const auto ext = gf16_squared();
  const MSequence a = column_sequence(*ext, 2, 15);
  const MSequence b = constant_multiple(column_sequence(*ext, 5, 15), 7);
  const auto direct = correlation_all_shifts(a, b, CorrelationMethod::direct);
  const auto fft = correlation_all_shifts(a, b, CorrelationMethod::fft);
  const auto autom = correlation_all_shifts(a, b, CorrelationMethod::automatic);
  REQUIRE(direct.size() == 15);
  for (std::size_t t = 0; t < 15; ++t) {
    CHECK(std::abs(direct[t] - fft[t]) < 1e-9);
    CHECK(std::abs(direct[t] - autom[t]) < 1e-9);
    CHECK(std::abs(direct[t] - oracle::correlation(a.symbols(), b.symbols(), 15, t)) < 1e-9);
  }
  // Period 255 is above the automatic fft threshold.
  const MSequence x = sidelnikov_sequence_ext(*ext, 15);
  const MSequence y = constant_multiple(cyclic_shift(x, 3), 4);
  const auto long_direct = correlation_all_shifts(x, y, CorrelationMethod::direct);
  const auto long_auto = correlation_all_shifts(x, y, CorrelationMethod::automatic);
  REQUIRE(long_auto.size() == 255);
  for (std::size_t t = 0; t < 255; ++t) {
    CHECK(std::abs(long_direct[t] - long_auto[t]) < 1e-9);
    CHECK(std::abs(long_auto[t] - oracle::correlation(x.symbols(), y.symbols(), 15, t)) < 1e-9);
  }
  const MSequence s = sidelnikov_sequence(*build_field(5, 1), 4);
  const auto small_fft = correlation_all_shifts(s, s, CorrelationMethod::fft);
  for (std::size_t t = 0; t < 4; ++t)
    CHECK(std::abs(small_fft[t] - oracle::correlation(s.symbols(), s.symbols(), 4, t)) < 1e-9);
}

TEST_CASE("family scan methods agree with each other and the oracle") {
  const auto ext = gf16_squared();
  for (unsigned M : {3u, 5u}) {
    CAPTURE(M);
    const SequenceFamily fam = build_family(*ext, M, Policy::strict);
    ScanOptions opt;
    opt.method = CorrelationMethod::direct;
    const auto direct = max_correlation(fam, opt);
    opt.method = CorrelationMethod::fft;
    const auto fft = max_correlation(fam, opt);
    opt.method = CorrelationMethod::column_dft;
    const auto cols = max_correlation(fam, opt);

    const double oracle = oracle_delta_max(fam);
    for (const auto* r : {&direct, &fft, &cols}) {
      CHECK(r->delta_max == doctest::Approx(oracle).epsilon(1e-9));
      CHECK(r->bound == doctest::Approx(13));
      CHECK(r->passed());
      CHECK(r->family_size == fam.size());
      CHECK(r->values_scanned == fam.size() * (fam.size() + 1) / 2 * 15 - fam.size());
      CHECK(r->histogram == direct.histogram);
      CHECK(r->argmax_total == direct.argmax_total);
      REQUIRE(r->argmax.size() == direct.argmax.size());
      for (std::size_t k = 0; k < r->argmax.size(); ++k)
        CHECK(r->argmax[k].key() == direct.argmax[k].key());
      CHECK(r->same_column_max == doctest::Approx(direct.same_column_max));
    }
    std::uint64_t total = 0;
    for (const auto& [key, count] : direct.histogram) total += count;
    CHECK(total == direct.values_scanned);

    // Each reported witness reproduces its magnitude.
    for (const auto& w : direct.argmax) {
      const MSequence a = constant_multiple(column_sequence(*ext, w.l1, M), w.c1);
      const MSequence b = constant_multiple(column_sequence(*ext, w.l2, M), w.c2);
      CHECK(std::abs(cross_correlation(a, b, static_cast<std::int64_t>(w.tau))) ==
            doctest::Approx(direct.delta_max));
    }
  }
}

TEST_CASE("column_dft needs the build_family layout") {
  const auto ext = gf16_squared();
  SequenceFamily fam = build_family(*ext, 5, Policy::strict);
  std::swap(fam.members[0], fam.members[1]);
  ScanOptions opt;
  opt.method = CorrelationMethod::column_dft;
  CHECK_THROWS_AS(max_correlation(fam, opt), ParameterError);
  opt.method = CorrelationMethod::automatic;
  CHECK(max_correlation(fam, opt).delta_max == doctest::Approx(oracle_delta_max(fam)));
}

TEST_CASE("shifting every member by the same amount changes nothing") {
  const auto ext = gf16_squared();
  const SequenceFamily fam = build_family(*ext, 3, Policy::strict);
  SequenceFamily shifted = fam;
  for (auto& m : shifted.members) m.sequence = cyclic_shift(m.sequence, 7);
  ScanOptions opt;
  opt.method = CorrelationMethod::direct;
  const auto a = max_correlation(fam, opt);
  const auto b = max_correlation(shifted, opt);
  CHECK(a.delta_max == doctest::Approx(b.delta_max));
  CHECK(a.histogram == b.histogram);
}

TEST_CASE("single-member family reduces to out-of-phase autocorrelation") {
  const auto ext = gf16_squared();
  const MSequence v = column_sequence(*ext, 4, 15);
  const SequenceFamily fam = single(v, 16, 2);
  const auto report = max_correlation(fam);
  double worst = 0;
  for (std::size_t tau = 1; tau < 15; ++tau)
    worst = std::max(worst, std::abs(oracle::correlation(v.symbols(), v.symbols(), 15, tau)));
  CHECK(report.delta_max == doctest::Approx(worst));
  CHECK(report.values_scanned == 14);
  CHECK(report.trivial_ok);
}

TEST_CASE("same-column bound") {
  const auto ext = gf16_squared();
  const SequenceFamily fam = build_family(*ext, 15, Policy::strict);
  const auto report = max_correlation(fam);
  CHECK(report.same_column_ok);
  double worst = 0, limit = 0;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (fam.members[i].l != fam.members[j].l) continue;
      worst = std::max(worst, std::abs(oracle::correlation(fam.members[i].sequence.symbols(),
                                                           fam.members[j].sequence.symbols(), 15, 0)));
      limit = std::max(limit, (fam.members[i].d_l - 1) * 4.0 + 1);
    }
  CHECK(report.same_column_max == doctest::Approx(worst));
  CHECK(worst <= limit + kCorrelationTolerance);
}

TEST_CASE("cyclic inequivalence") {
  const auto ext = gf16_squared();
  const SequenceFamily fam = build_family(*ext, 5, Policy::strict);
  CHECK(cyclic_inequivalence(fam).inequivalent);

  std::vector<MSequence> seqs;
  for (const auto& m : fam.members) seqs.push_back(m.sequence);
  seqs.push_back(seqs[7]);
  auto dup = cyclic_inequivalence(seqs);
  CHECK_FALSE(dup.inequivalent);
  REQUIRE(dup.witness);
  CHECK(dup.witness->first != dup.witness->second);

  seqs.back() = cyclic_shift(seqs[11], 10);
  const auto shifted = cyclic_inequivalence(seqs);
  CHECK_FALSE(shifted.inequivalent);
  REQUIRE(shifted.witness);
  const auto& w = *shifted.witness;
  for (std::int64_t t = 0; t < 15; ++t)
    CHECK(seqs[w.first][t] == seqs[w.second][t + static_cast<std::int64_t>(w.shift)]);
}

TEST_CASE("canonical rotation matches brute-force shift search") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 24;
    const unsigned M = 2 + rng() % 2;
    std::vector<std::uint32_t> a(n);
    for (auto& x : a) x = rng() % M;
    const MSequence sa(a, M, BaseSidelnikov{});
    const MSequence sb = trial % 2 ? cyclic_shift(sa, static_cast<std::int64_t>(rng() % n))
                                   : MSequence([&] {
                                       auto b = a;
                                       b[rng() % n] = rng() % M;
                                       return b;
                                     }(),
                                               M, BaseSidelnikov{});
    std::optional<std::uint64_t> brute;
    for (std::size_t tau = 0; tau < n && !brute; ++tau) {
      bool ok = true;
      for (std::size_t t = 0; t < n && ok; ++t) ok = sa.symbols()[t] == sb.symbols()[(t + tau) % n];
      if (ok) brute = tau;
    }
    const auto found = cyclic_equivalence_shift(sa, sb);
    CHECK(found.has_value() == brute.has_value());
    if (found)
      for (std::int64_t t = 0; t < static_cast<std::int64_t>(n); ++t)
        CHECK(sa[t] == sb[t + static_cast<std::int64_t>(*found)]);
  }
}

TEST_CASE("weil bound") {
  CHECK(weil_bound({16, {{2, 0, 5}, {2, 0, 5}}}) == doctest::Approx(12));
  CHECK(weil_bound({41, {{3, 0, 2}, {1, 1, 2}}}) == doctest::Approx(3 * std::sqrt(41.0) + 1));
  CHECK(weil_bound({7, {{1, 1, 3}}}) == doctest::Approx(1));
  CHECK_THROWS_AS(weil_bound({7, {}}), ParameterError);
}

TEST_CASE("character sums") {
  const FieldPtr f = build_field(13, 1);
  const Character psi(f, 4);
  const CharacterSumTerm identity{{0, 1}, 1, 1};
  // psi(0) = 1 plus a vanishing sum over GF(q)*.
  CHECK(std::abs(empirical_character_sum(psi, std::span(&identity, 1)) - 1.0) < 1e-9);

  std::mt19937 rng(11);
  const auto random_irreducible = [&](unsigned deg) {
    for (;;) {
      Poly m(deg + 1);
      for (auto& c : m) c = rng() % 13;
      m.back() = 1;
      if (poly::is_irreducible(*f, m)) return m;
    }
  };
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned d1 = 1 + rng() % 3, d2 = 1 + rng() % 3;
    const Poly g1 = random_irreducible(d1), g2 = random_irreducible(d2);
    if (g1 == g2) continue;
    const std::int64_t k1 = 1 + rng() % 3, k2 = 1 + rng() % 3;
    const std::vector<CharacterSumTerm> terms{{g1, 1, k1}, {g2, 1, k2}};
    const auto sum = empirical_character_sum(psi, terms);
    const unsigned ord1 = 4 / static_cast<unsigned>(nt::gcd(4, k1));
    const unsigned ord2 = 4 / static_cast<unsigned>(nt::gcd(4, k2));
    const double bound = weil_bound({13, {{d1, d1 == 1 ? 1u : 0u, ord1}, {d2, d2 == 1 ? 1u : 0u, ord2}}});
    CHECK(std::abs(sum) <= bound + kCorrelationTolerance);
  }
}

TEST_CASE("correlations as character sums") {
  const auto ext = gf16_squared();
  for (unsigned M : {3u, 5u}) {
    for (auto [c1, l1, c2, l2, tau] :
         {std::tuple{1u, 1u, 2u, 3u, 0u}, {2u, 2u, 2u, 2u, 4u}, {1u, 4u, 2u, 8u, 9u},
          {M - 1, 5u, 1u, 6u, 14u}, {1u, 7u, M - 1, 7u, 0u}}) {
      const MSequence a = constant_multiple(column_sequence(*ext, l1, M), c1);
      const MSequence b = constant_multiple(column_sequence(*ext, l2, M), c2);
      const auto r = cross_correlation(a, b, tau);
      CHECK(std::abs(character_sum_correlation(*ext, M, c1, l1, c2, l2, tau) - r) < 1e-9);
      CHECK(std::abs(reduced_character_sum(*ext, M, c1, l1, c2, l2, tau)) ==
            doctest::Approx(std::abs(r + 1.0)));
    }
  }
}

TEST_CASE("scans are deterministic and independent of the job count") {
  const auto ext = gf16_squared();
  const SequenceFamily fam = build_family(*ext, 15, Policy::strict);
  ScanOptions one;
  ScanOptions three;
  three.jobs = 3;
  const auto a = max_correlation(fam, one);
  const auto b = max_correlation(fam, one);
  const auto c = max_correlation(fam, three);
  for (const auto* r : {&b, &c}) {
    CHECK(r->delta_max == a.delta_max);
    CHECK(r->histogram == a.histogram);
    CHECK(r->values_scanned == a.values_scanned);
    CHECK(r->argmax_total == a.argmax_total);
    REQUIRE(r->argmax.size() == a.argmax.size());
    for (std::size_t k = 0; k < a.argmax.size(); ++k) CHECK(r->argmax[k].key() == a.argmax[k].key());
  }
}
