#include "seqfam/array_structure.hpp"

#include <algorithm>
#include <string>

#include "seqfam/number_theory.hpp"

namespace seqfam {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

CyclotomicCoset coset(std::uint64_t l, std::uint64_t modulus, std::uint64_t q) {
  if (modulus == 0) throw ParameterError("coset modulus must be positive");
  if (l >= modulus) throw ParameterError("coset element must lie in [0, modulus)");
  CyclotomicCoset c;
  c.modulus = modulus;
  std::uint64_t x = l;
  do {
    c.members.push_back(x);
    x = mul_mod(x, q % modulus, modulus);
  } while (x != l);
  c.representative = *std::min_element(c.members.begin(), c.members.end());
  return c;
}

MSequence column_sequence(const ExtensionContext& ext, std::uint64_t l, unsigned M) {
  require_alphabet(ext.q(), M);
  const std::uint64_t width = ext.norm_exponent();
  if (l >= width)
    throw ParameterError("column index " + std::to_string(l) + " out of range [0, " +
                         std::to_string(width - 1) + "]");
  const FieldContext& base = ext.base();
  const Element alpha_l = ext.exp(l);
  std::vector<std::uint32_t> v(base.q() - 1);
  for (std::uint64_t t = 0; t < v.size(); ++t) {
    // beta^t keeps its encoding inside GF(q^d).
    const Element x = ext.add(ext.mul(alpha_l, base.exp(t)), 1);
    v[t] = base.dlog(ext.norm(x)) % M;
  }
  return MSequence(std::move(v), M, Column{l});
}

MSequence column_from_array(const MSequence& long_sequence, std::uint64_t width, std::uint64_t l) {
  const std::uint64_t period = long_sequence.period();
  if (width == 0 || period % width != 0)
    throw ParameterError("array width must divide the sequence period");
  std::vector<std::uint32_t> v(period / width);
  for (std::uint64_t t = 0; t < v.size(); ++t)
    v[t] = long_sequence.symbols()[(width * t + l) % period];
  return MSequence(std::move(v), long_sequence.alphabet(), Column{l});
}

Poly frobenius_poly(const ExtensionContext& ext, const Poly& p, unsigned j) {
  Poly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = ext.frobenius(p[i], j);
  return out;
}

unsigned conjugate_orbit_size(const ExtensionContext& ext, Element y) {
  unsigned size = 1;
  for (Element z = ext.frobenius(y); z != y; z = ext.frobenius(z)) ++size;
  return size;
}

ColumnPolynomial column_polynomial(const ExtensionContext& ext, std::uint64_t l) {
  const std::uint64_t period = ext.order() - 1;
  const std::uint64_t q = ext.q();
  const unsigned d = ext.d();
  const FieldContext& base = ext.base();

  ColumnPolynomial col;
  col.l = l;

  // f_l = prod_j (alpha^(l q^j) x + 1).
  Poly f{1};
  std::uint64_t e = l % period;
  for (unsigned j = 0; j < d; ++j) {
    f = poly::mul(ext, f, Poly{1, ext.exp(e)});
    e = mul_mod(e, q, period);
  }
  for (Element c : f)
    if (!ext.in_base_field(c)) throw ConsistencyError("f_l has a coefficient outside GF(q)");
  col.f = f;

  // p_l = prod over C_l (mod q^d-1) of (x + alpha^(-j)).
  const CyclotomicCoset c_l = coset(l % period, period, q);
  col.d_l = static_cast<unsigned>(c_l.size());
  std::vector<Element> roots;
  for (auto j : c_l.members) roots.push_back(ext.neg(ext.exp(period - j)));
  col.p = poly::from_roots(ext, roots);
  for (Element c : col.p)
    if (!ext.in_base_field(c)) throw ConsistencyError("p_l has a coefficient outside GF(q)");

  // q_l uses the first m_l exponents of the orbit of l, unreduced mod S.
  const CyclotomicCoset c_hat = coset(l % ext.norm_exponent(), ext.norm_exponent(), q);
  col.m_l = static_cast<unsigned>(c_hat.size());
  roots.resize(col.m_l);
  col.q_part = poly::from_roots(ext, roots);

  if (d % col.d_l != 0 || col.d_l % col.m_l != 0)
    throw ConsistencyError("coset sizes violate m_l | d_l | d");
  const Poly rebuilt =
      poly::scale(base, poly::pow(base, col.p, d / col.d_l), base.exp(l % (base.q() - 1)));
  if (rebuilt != col.f)
    throw ConsistencyError("f_l != beta^l p_l^(d/d_l) for l = " + std::to_string(l));
  return col;
}

}  // namespace seqfam
