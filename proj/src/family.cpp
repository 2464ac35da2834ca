#include "seqfam/family.hpp"

#include <cmath>
#include <set>

#include "seqfam/number_theory.hpp"
#include "seqfam/parallel.hpp"

namespace seqfam {

std::string to_string(Policy policy) {
  return policy == Policy::strict ? "strict" : "relaxed-d2";
}

Policy parse_policy(const std::string& text) {
  if (text == "strict") return Policy::strict;
  if (text == "relaxed-d2") return Policy::relaxed_d2;
  throw ParameterError("unknown policy '" + text + "' (expected strict or relaxed-d2)");
}

bool RestrictionReport::satisfied(Policy policy) const {
  if (policy == Policy::strict) return gcd_ok && degree_ok;
  return relaxation_applicable && degree_ok;
}

RestrictionReport check_restrictions(std::uint64_t q, unsigned d) {
  RestrictionReport r;
  r.q = q;
  r.d = d;
  r.gcd_value = nt::gcd(d, q - 1);
  r.gcd_ok = r.gcd_value == 1;
  const double root = std::sqrt(static_cast<double>(q));
  r.degree_limit = (root - 2.0 / root + 1.0) / 2.0;
  // d < (sqrt q - 2/sqrt q + 1)/2  <=>  (2d - 1) sqrt q < q - 2.
  if (q > 2) {
    const auto lhs = static_cast<unsigned __int128>(2 * d - 1) * (2 * d - 1) * q;
    const auto rhs = static_cast<unsigned __int128>(q - 2) * (q - 2);
    r.degree_ok = lhs < rhs;
  }
  r.relaxation_applicable = d == 2 && q % 2 == 1;
  r.relaxation_drops_half = r.relaxation_applicable;
  return r;
}

std::vector<std::uint64_t> coset_representatives(std::uint64_t q, unsigned d) {
  if (d < 2) throw ParameterError("d must be >= 2");
  const std::uint64_t width = (nt::checked_pow(q, d) - 1) / (q - 1);
  std::vector<bool> seen(width, false);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t l = 0; l < width; ++l) {
    if (seen[l]) continue;
    reps.push_back(l);
    std::uint64_t x = l;
    do {
      seen[x] = true;
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q % width);
    } while (x != l);
  }
  return reps;
}

SequenceFamily build_family(const ExtensionContext& ext, unsigned M, Policy policy,
                            unsigned jobs) {
  require_alphabet(ext.q(), M);
  SequenceFamily fam;
  fam.q = ext.q();
  fam.d = ext.d();
  fam.M = M;
  fam.policy = policy;
  fam.restrictions = check_restrictions(fam.q, fam.d);
  if (!fam.restrictions.satisfied(policy)) {
    throw RestrictionError("parameters q=" + std::to_string(fam.q) + " d=" +
                           std::to_string(fam.d) + " violate the " + to_string(policy) +
                           " policy");
  }
  fam.lambda = coset_representatives(fam.q, fam.d);
  for (auto l : fam.lambda) {
    if (l == 0) continue;
    if (policy == Policy::relaxed_d2 && l == (fam.q + 1) / 2) continue;
    fam.columns.push_back(l);
  }

  const std::uint64_t period = ext.order() - 1;
  std::vector<std::vector<FamilyMember>> per_column(fam.columns.size());
  parallel_for(fam.columns.size(), jobs, [&](unsigned, std::size_t i) {
    const std::uint64_t l = fam.columns[i];
    const MSequence v = column_sequence(ext, l, M);
    const auto d_l = static_cast<unsigned>(coset(l, period, fam.q).size());
    for (unsigned c = 1; c < M; ++c) per_column[i].push_back({c, l, d_l, constant_multiple(v, c)});
  });
  fam.members.reserve(fam.columns.size() * (M - 1));
  for (auto& group : per_column)
    for (auto& m : group) fam.members.push_back(std::move(m));
  return fam;
}

Poly shifted_minimal_polynomial(const ExtensionContext& ext, std::uint64_t l, std::uint64_t tau) {
  const std::uint64_t period = ext.order() - 1;
  const FieldContext& base = ext.base();
  const Element beta_inv_tau = base.exp((base.q() - 1) - tau % (base.q() - 1));
  std::vector<Element> roots;
  for (auto j : coset(l % period, period, ext.q()).members)
    roots.push_back(ext.neg(ext.mul(ext.exp(period - j), beta_inv_tau)));
  Poly out = poly::from_roots(ext, roots);
  for (Element c : out)
    if (!ext.in_base_field(c))
      throw ConsistencyError("shifted minimal polynomial left GF(q)");
  return out;
}

Poly scaled_minimal_polynomial(const ExtensionContext& ext, std::uint64_t l, std::uint64_t tau) {
  const FieldContext& base = ext.base();
  const ColumnPolynomial col = column_polynomial(ext, l);
  const std::uint64_t period = base.q() - 1;
  const Poly stretched = poly::substitute_scaled(base, col.p, base.exp(tau));
  const std::uint64_t shift = tau % period * col.d_l % period;
  return poly::scale(base, stretched, base.exp(period - shift));
}

bool distinct_shift_check(const ExtensionContext& ext, std::uint64_t l1, std::uint64_t l2,
                          std::uint64_t tau) {
  return column_polynomial(ext, l1).p != shifted_minimal_polynomial(ext, l2, tau);
}

std::vector<CyclotomicFactor> cyclotomic_factors(const ExtensionContext& ext) {
  const std::uint64_t width = ext.norm_exponent();
  const std::uint64_t q = ext.q();
  std::vector<CyclotomicFactor> out;
  for (auto l : coset_representatives(q, ext.d())) {
    std::vector<Element> roots;
    for (auto j : coset(l, width, q).members) roots.push_back(ext.exp((q - 1) * j));
    out.push_back({l, poly::from_roots(ext, roots)});
  }
  return out;
}

FactorizationCheck verify_factorization(const ExtensionContext& ext,
                                        const std::vector<CyclotomicFactor>& factors,
                                        std::uint64_t expand_limit) {
  const FieldContext& base = ext.base();
  const std::uint64_t width = ext.norm_exponent();
  const unsigned d = ext.d();
  FactorizationCheck check;
  check.factor_count = factors.size();

  std::set<Poly> seen;
  std::uint64_t degree_sum = 0;
  const Poly x{0, 1};
  for (const auto& factor : factors) {
    const Poly& f = factor.poly;
    for (Element c : f)
      if (!ext.in_base_field(c)) check.coefficients_in_base = false;
    if (!check.coefficients_in_base) continue;
    if (!poly::is_irreducible(base, f)) check.all_irreducible = false;
    if (!seen.insert(f).second) check.all_distinct = false;
    if (poly::pow_mod(base, x, width, f) != poly::mod(base, Poly{1}, f)) check.all_divide = false;
    const auto e = static_cast<unsigned>(poly::degree(f));
    degree_sum += e;
    const Element b = e % 2 == 0 ? f[0] : base.neg(f[0]);
    if (d % e != 0 || base.pow(b, d / e) != 1) check.constant_terms_ok = false;
  }
  check.degree_sum_ok = degree_sum == width;

  if (check.coefficients_in_base && width <= expand_limit) {
    check.product_expanded = true;
    Poly product{1};
    for (const auto& factor : factors) product = poly::mul(base, product, factor.poly);
    Poly target = poly::monomial(width);
    target[0] = base.neg(1);
    check.product_ok = product == target;
  }
  return check;
}

}  // namespace seqfam
