#include <doctest.h>

#include <random>

#include "seqfam/field.hpp"
#include "seqfam/polynomial.hpp"

using namespace seqfam;

namespace {

// Every monic polynomial of exact degree `deg` over Z/p.
std::vector<Poly> monics(std::uint32_t p, unsigned deg) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly m(deg + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < deg; ++i) {
      m[i] = static_cast<Element>(c % p);
      c /= p;
    }
    m[deg] = 1;
    out.push_back(m);
  }
  return out;
}

bool has_proper_factor(const PrimeField& f, std::uint32_t p, const Poly& m) {
  for (unsigned k = 1; 2 * k <= static_cast<unsigned>(poly::degree(m)); ++k)
    for (const auto& g : monics(p, k))
      if (poly::mod(f, m, g).empty()) return true;
  return false;
}

Poly random_poly(std::mt19937& rng, std::uint32_t p, unsigned deg) {
  Poly out(deg + 1);
  for (auto& c : out) c = static_cast<Element>(rng() % p);
  poly::trim(out);
  return out;
}

}  // namespace

TEST_CASE("division identity a = q b + r with deg r < deg b") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      const Poly a = random_poly(rng, p, rng() % 9);
      Poly b = random_poly(rng, p, 1 + rng() % 5);
      if (b.empty()) continue;
      const auto [quot, rem] = poly::divmod(f, a, b);
      CHECK(poly::degree(rem) < poly::degree(b));
      CHECK(poly::add(f, poly::mul(f, quot, b), rem) == a);
    }
  }
}

TEST_CASE("gcd is monic and divides both arguments") {
  std::mt19937 rng(11);
  const PrimeField f(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly common = random_poly(rng, 5, rng() % 4);
    const Poly a = poly::mul(f, common, random_poly(rng, 5, rng() % 5));
    const Poly b = poly::mul(f, common, random_poly(rng, 5, rng() % 5));
    const Poly g = poly::gcd(f, a, b);
    if (a.empty() && b.empty()) continue;
    CHECK(poly::is_monic(g));
    CHECK(poly::mod(f, a, g).empty());
    CHECK(poly::mod(f, b, g).empty());
    if (!common.empty()) CHECK(poly::mod(f, g, poly::make_monic(f, common)).empty());
  }
}

TEST_CASE("irreducibility test matches exhaustive factor search") {
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (unsigned deg = 1; deg <= (p == 2 ? 7u : 5u); ++deg)
      for (const auto& m : monics(p, deg))
        CHECK(poly::is_irreducible(f, m) == !has_proper_factor(f, p, m));
  }
}

TEST_CASE("irreducible counts over GF(2) follow the necklace numbers") {
  const PrimeField f(2);
  const std::size_t expected[] = {0, 2, 1, 2, 3, 6, 9, 18, 30};
  for (unsigned deg = 1; deg <= 8; ++deg) {
    std::size_t count = 0;
    for (const auto& m : monics(2, deg)) count += poly::is_irreducible(f, m);
    CHECK(count == expected[deg]);
  }
}

TEST_CASE("modular exponentiation agrees with repeated multiplication") {
  const PrimeField f(3);
  const Poly m{2, 1, 0, 1};  // x^3 + x + 2
  const Poly x{0, 1};
  Poly acc{1};
  for (std::uint64_t e = 0; e < 60; ++e) {
    CHECK(poly::pow_mod(f, x, e, m) == acc);
    acc = poly::mul_mod(f, acc, x, m);
  }
}

TEST_CASE("roots, evaluation and scaled substitution") {
  const auto field = build_field(2, 4);
  const Element roots[] = {3, 7, 12};
  const Poly p = poly::from_roots(*field, roots);
  CHECK(poly::degree(p) == 3);
  CHECK(poly::is_monic(p));
  for (Element r : roots) CHECK(poly::evaluate(*field, p, r) == 0);
  for (Element c = 1; c < 16; ++c) {
    const Poly scaled = poly::substitute_scaled(*field, p, c);
    for (Element x = 0; x < 16; ++x)
      CHECK(poly::evaluate(*field, scaled, x) == poly::evaluate(*field, p, field->mul(c, x)));
  }
  CHECK(poly::to_string(Poly{1, 0, 1}) == "1,0,1");
  CHECK(poly::to_string(Poly{}) == "0");
}
