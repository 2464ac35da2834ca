#include <doctest.h>

#include <cmath>
#include <set>

#include "seqfam/family.hpp"
#include "seqfam/number_theory.hpp"
#include "seqfam/verify.hpp"

using namespace seqfam;

TEST_CASE("restriction checks") {
  const auto r41 = check_restrictions(41, 3);
  CHECK(r41.gcd_value == 1);
  CHECK(r41.gcd_ok);
  CHECK(r41.degree_ok);
  CHECK(r41.degree_limit == doctest::Approx(3.545).epsilon(1e-3));
  CHECK(r41.satisfied(Policy::strict));

  const auto r9 = check_restrictions(9, 2);
  CHECK_FALSE(r9.degree_ok);
  CHECK(r9.degree_limit == doctest::Approx(5.0 / 3.0));

  const auto r16 = check_restrictions(16, 2);
  CHECK(r16.gcd_ok);
  CHECK(r16.degree_ok);
  CHECK(r16.degree_limit == doctest::Approx(2.25));
  CHECK_FALSE(check_restrictions(16, 3).gcd_ok);

  // With d = 2 the degree condition fails exactly for these q.
  const std::set<std::uint64_t> misses{2, 3, 4, 5, 7, 8, 9, 11};
  for (auto q : nt::prime_powers_in(2, 400)) {
    CAPTURE(q);
    CHECK(check_restrictions(q, 2).degree_ok == !misses.contains(q));
    // Floating evaluation of the stated inequality agrees with the exact test.
    for (unsigned d = 2; d <= 5; ++d) {
      const double rq = std::sqrt(static_cast<double>(q));
      CHECK(check_restrictions(q, d).degree_ok == (d < (rq - 2 / rq + 1) / 2));
    }
  }
}

TEST_CASE("relaxed policy applies to d = 2, q odd only") {
  const auto r13 = check_restrictions(13, 2);
  CHECK_FALSE(r13.gcd_ok);
  CHECK(r13.degree_ok);
  CHECK(r13.relaxation_applicable);
  CHECK_FALSE(r13.satisfied(Policy::strict));
  CHECK(r13.satisfied(Policy::relaxed_d2));
  CHECK_FALSE(check_restrictions(16, 2).relaxation_applicable);
  CHECK_FALSE(check_restrictions(9, 2).satisfied(Policy::relaxed_d2));
  CHECK(parse_policy("relaxed-d2") == Policy::relaxed_d2);
  CHECK(to_string(Policy::strict) == "strict");
  CHECK_THROWS_AS(parse_policy("loose"), ParameterError);
}

TEST_CASE("coset representatives") {
  CHECK(coset_representatives(4, 2) == std::vector<std::uint64_t>{0, 1, 2});
  for (std::uint64_t q : {4u, 5u, 7u, 8u, 13u, 16u, 25u}) {
    const auto reps = coset_representatives(q, 2);
    CHECK(reps.size() == (q + 1) / 2 + 1);
    for (std::size_t i = 0; i < reps.size(); ++i) CHECK(reps[i] == i);
  }
}

TEST_CASE("family of q = 16, d = 2, M = 5") {
  const auto ext = build_extension(build_field(2, 4), 2);
  const SequenceFamily fam = build_family(*ext, 5, Policy::strict);
  CHECK(fam.size() == 32);
  CHECK(fam.columns == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8});
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const auto& m = fam.members[k];
    CHECK(m.l == fam.columns[k / 4]);
    CHECK(m.c == k % 4 + 1);
    CHECK(m.sequence.period() == 15);
    const MSequence v = column_sequence(*ext, m.l, 5);
    for (std::size_t t = 0; t < 15; ++t) CHECK(m.sequence.symbols()[t] == m.c * v.symbols()[t] % 5);
    const auto* prov = std::get_if<ConstantMultiple>(&m.sequence.provenance());
    REQUIRE(prov != nullptr);
    CHECK(prov->c == m.c);
    CHECK(prov->l == m.l);
  }
  const auto check = check_shift_distinctness(*ext, fam.columns);
  CHECK_MESSAGE(check.passed, check.detail);
}

TEST_CASE("M = 2 keeps one constant per column") {
  const auto ext = build_extension(build_field(41, 1), 3);
  const SequenceFamily fam = build_family(*ext, 2, Policy::strict);
  CHECK(fam.size() == fam.lambda.size() - 1);
  CHECK(fam.lambda.size() == coset_representatives(41, 3).size());
}

TEST_CASE("policy enforcement") {
  const auto e9 = build_extension(build_field(3, 2), 2);
  CHECK_THROWS_AS(build_family(*e9, 2, Policy::strict), RestrictionError);
  const auto e13 = build_extension(build_field(13, 1), 2);
  CHECK_THROWS_AS(build_family(*e13, 4, Policy::strict), RestrictionError);
  const SequenceFamily relaxed = build_family(*e13, 4, Policy::relaxed_d2);
  CHECK(relaxed.columns == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(relaxed.size() == 3 * 6);
  CHECK_THROWS_AS(build_family(*e13, 5, Policy::relaxed_d2), ParameterError);
}

TEST_CASE("shifted minimal polynomials") {
  const auto ext = build_extension(build_field(2, 4), 2);
  const FieldContext& base = ext->base();
  for (std::uint64_t l = 1; l <= 8; ++l) {
    for (std::uint64_t tau = 0; tau < 15; ++tau) {
      const Poly by_roots = shifted_minimal_polynomial(*ext, l, tau);
      CHECK(poly::is_monic(by_roots));
      CHECK(by_roots == scaled_minimal_polynomial(*ext, l, tau));
      for (Element x = 0; x < 16; ++x) CHECK(poly::evaluate(base, by_roots, x) != 0);
    }
    CHECK_FALSE(distinct_shift_check(*ext, l, l, 0));
    for (std::uint64_t l2 = 1; l2 <= 8; ++l2)
      for (std::uint64_t tau = 0; tau < 15; ++tau)
        if (l2 != l || tau != 0) CHECK(distinct_shift_check(*ext, l, l2, tau));
  }
}

TEST_CASE("cyclotomic factorization of x^S - 1") {
  for (auto [p, n, d] : {std::tuple{2u, 2u, 2u}, {2u, 2u, 3u}, {5u, 1u, 2u}, {3u, 1u, 3u},
                         {2u, 4u, 2u}, {2u, 1u, 4u}}) {
    const auto ext = build_extension(build_field(p, n), d);
    const auto factors = cyclotomic_factors(*ext);
    CHECK(factors.size() == coset_representatives(ext->q(), d).size());
    const auto fc = verify_factorization(*ext, factors);
    CHECK(fc.ok());
    CHECK(fc.product_expanded);

    auto missing = factors;
    missing.pop_back();
    CHECK_FALSE(verify_factorization(*ext, missing).ok());
    auto doubled = factors;
    doubled.push_back(factors.back());
    const auto dup = verify_factorization(*ext, doubled);
    CHECK_FALSE(dup.all_distinct);
    CHECK_FALSE(dup.ok());
  }
}
