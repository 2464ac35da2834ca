#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "seqfam/number_theory.hpp"
#include "seqfam/sidelnikov.hpp"

using namespace seqfam;

TEST_CASE("GF(5), M = 4: hand-computed sequence") {
  const auto f = build_field(5, 1);
  const MSequence s = sidelnikov_sequence(*f, 4);
  CHECK(s.period() == 4);
  CHECK(s[1] == 3);
  CHECK(s[2] == 0);
  // Powers of 2 are 1, 2, 4, 3; s(t) = log_2(2^t + 1) mod 4.
  CHECK(s.symbols() == std::vector<std::uint32_t>{1, 3, 0, 2});
  CHECK(std::holds_alternative<BaseSidelnikov>(s.provenance()));
}

TEST_CASE("base sequence matches a slow log-table oracle") {
  for (auto [p, n] : {std::pair{5u, 1u}, {7u, 1u}, {13u, 1u}, {3u, 2u}, {2u, 4u}, {5u, 2u}}) {
    const auto f = build_field(p, n);
    const auto slow = oracle::slow_copy(*f);
    const auto logs = oracle::log_table(slow, f->beta());
    const std::uint64_t q = f->q();
    for (auto M : nt::divisors(q - 1)) {
      if (M < 2) continue;
      const MSequence s = sidelnikov_sequence(*f, static_cast<unsigned>(M));
      std::uint64_t x = 1;
      for (std::uint64_t t = 0; t + 1 < q; ++t) {
        const std::uint64_t y = slow.add(x, 1);
        const std::uint64_t expected = y == 0 ? 0 : logs.at(y) % M;
        CHECK(s.symbols()[t] == expected);
        if (slow.neg(1) == x) CHECK(s.symbols()[t] == 0);
        x = slow.mul(x, f->beta());
      }
    }
  }
}

TEST_CASE("extended sequence: both routes and the GF(25) oracle") {
  const auto base = build_field(5, 1);
  const auto ext = build_extension(base, 2);
  const auto slow = oracle::slow_copy(*ext);
  const auto logs = oracle::log_table(slow, ext->alpha());
  const MSequence s = sidelnikov_sequence_ext(*ext, 4);
  REQUIRE(s.period() == 24);
  std::uint64_t x = 1;
  for (std::uint64_t t = 0; t < 24; ++t) {
    const std::uint64_t y = slow.add(x, 1);
    CHECK(s.symbols()[t] == (y == 0 ? 0 : logs.at(y) % 4));
    x = slow.mul(x, ext->alpha());
  }

  for (auto [p, n, d, M] : {std::tuple{2u, 2u, 3u, 3u}, {2u, 4u, 2u, 5u}, {3u, 1u, 3u, 2u}}) {
    const auto e = build_extension(build_field(p, n), d);
    const MSequence long_seq = sidelnikov_sequence_ext(*e, M);
    for (std::uint64_t t = 0; t < long_seq.period(); ++t) {
      const Element y = e->add(e->exp(t), 1);
      CHECK(long_seq.symbols()[t] == e->dlog(y) % M);
      if (y == 0) CHECK(long_seq.symbols()[t] == 0);
    }
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_WITH_AS(require_alphabet(16, 4), "M must divide q-1", ParameterError);
  CHECK_THROWS_AS(require_alphabet(16, 1), ParameterError);
  CHECK_NOTHROW(require_alphabet(16, 3));
  CHECK_NOTHROW(require_alphabet(16, 15));
  CHECK_THROWS_AS(sidelnikov_sequence(*build_field(2, 4), 4), ParameterError);
  CHECK_THROWS_AS(MSequence({0, 1, 2}, 2, BaseSidelnikov{}), ParameterError);
  CHECK_THROWS_AS(MSequence({}, 2, BaseSidelnikov{}), ParameterError);
  CHECK_THROWS_AS(MSequence({0}, 1, BaseSidelnikov{}), ParameterError);
}

TEST_CASE("multiplicative character") {
  const auto f = build_field(2, 4);
  for (unsigned M : {3u, 5u, 15u}) {
    const Character psi(f, M);
    CHECK(psi(0) == std::complex<double>(1, 0));
    CHECK(std::abs(psi(f->beta()) - std::polar(1.0, 2 * std::numbers::pi / M)) < 1e-12);
    std::complex<double> sum = 0;
    for (Element x = 1; x < 16; ++x) sum += psi(x);
    CHECK(std::abs(sum) < 1e-9);
    const MSequence s = sidelnikov_sequence(*f, M);
    const auto roots = unit_roots(M);
    for (std::uint64_t t = 0; t < 15; ++t)
      CHECK(std::abs(roots[s.symbols()[t]] - psi(f->add(f->exp(t), 1))) < 1e-12);
  }
  const auto quarter = unit_roots(4);
  CHECK(quarter[1] == std::complex<double>(0, 1));
  CHECK(quarter[2] == std::complex<double>(-1, 0));
}

TEST_CASE("constant multiples and shifts") {
  const auto f = build_field(13, 1);
  const MSequence s = sidelnikov_sequence(*f, 6);
  const MSequence s5 = constant_multiple(s, 5);
  const MSequence shifted = cyclic_shift(s, 4);
  for (std::int64_t t = -30; t < 30; ++t) {
    CHECK(s5[t] == 5 * s[t] % 6);
    CHECK(shifted[t] == s[t + 4]);
  }
  CHECK(cyclic_shift(shifted, -4) == s);
}
