#include "seqfam/counting.hpp"

#include <cmath>
#include <string>

#include "seqfam/family.hpp"
#include "seqfam/number_theory.hpp"
#include "seqfam/parallel.hpp"

namespace seqfam {

namespace {

std::uint64_t power_minus_one(std::uint64_t q, unsigned f) {
  try {
    return nt::checked_pow(q, f) - 1;
  } catch (const std::overflow_error&) {
    throw ParameterError("q^" + std::to_string(f) + " exceeds 64 bits");
  }
}

FieldPtr field_of_order(std::uint64_t q) {
  const auto [p, n] = nt::as_prime_power(q);
  if (p == 0) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  return build_field(static_cast<std::uint32_t>(p), n);
}

std::uint64_t element_order(const FieldContext& field, Element b) {
  const std::uint64_t period = field.q() - 1;
  return period / nt::gcd(field.dlog(b), period);
}

void require_q(std::uint64_t q) {
  if (nt::as_prime_power(q).first == 0)
    throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
}

}  // namespace

std::vector<AfEntry> a_f_set(std::uint64_t q, unsigned f) {
  require_q(q);
  if (f < 1) throw ParameterError("f must be >= 1");
  const std::uint64_t top = power_minus_one(q, f);
  const std::uint64_t norm_part = top / (q - 1);
  std::vector<AfEntry> out;
  for (auto r : nt::divisors(top)) {
    // r | q^g - 1 for some g < f iff ord_r(q) < f; ord_r(q) divides f here.
    if (nt::multiplicative_order(q, r) != f) continue;
    const std::uint64_t d_rf = nt::gcd(r, norm_part);
    out.push_back({r, d_rf, r / d_rf});
  }
  return out;
}

std::uint64_t yucas_count_by_order(std::uint64_t q, unsigned f, std::uint64_t m) {
  if (m == 0 || (q - 1) % m != 0) throw ParameterError("element order must divide q-1");
  std::uint64_t total = 0;
  for (const auto& entry : a_f_set(q, f))
    if (entry.m_rf == m) total += nt::euler_phi(entry.r);
  const std::uint64_t denom = f * nt::euler_phi(m);
  if (total % denom != 0)
    throw ConsistencyError("irreducible count is not an integer for q=" + std::to_string(q) +
                           " f=" + std::to_string(f) + " m=" + std::to_string(m));
  return total / denom;
}

std::uint64_t yucas_count(const FieldContext& field, unsigned f, Element b) {
  if (b == 0) throw ParameterError("constant term parameter b must be nonzero");
  return yucas_count_by_order(field.q(), f, element_order(field, b));
}

LambdaCount lambda_size_by_elements(std::uint64_t q, unsigned d) {
  if (d < 2) throw ParameterError("d must be >= 2");
  const FieldPtr field = field_of_order(q);
  LambdaCount out;
  for (auto e64 : nt::divisors(d)) {
    const auto e = static_cast<unsigned>(e64);
    for (auto m : nt::divisors(d / e)) {
      CountCell cell{e, m, 0, 0, 0};
      for (Element b = 1; b < field->q(); ++b) {
        if (element_order(*field, b) != m) continue;
        if (field->pow(b, d / e) != 1)
          throw ConsistencyError("element of order dividing d/e fails b^(d/e) = 1");
        const std::uint64_t n = yucas_count(*field, e, b);
        if (cell.elements > 0 && n != cell.per_element)
          throw ConsistencyError("count depends on b beyond its order");
        cell.per_element = n;
        ++cell.elements;
        cell.contribution += n;
      }
      out.value += cell.contribution;
      out.cells.push_back(cell);
    }
  }
  return out;
}

std::uint64_t lambda_size_closed_form(std::uint64_t q, unsigned d) {
  if (d < 2) throw ParameterError("d must be >= 2");
  std::uint64_t total = 0;
  for (auto e : nt::divisors(d)) {
    const auto entries = a_f_set(q, static_cast<unsigned>(e));
    std::uint64_t inner = 0;
    for (auto m : nt::divisors(d / e))
      for (const auto& entry : entries)
        if (entry.m_rf == m) inner += nt::euler_phi(entry.r);
    if (inner % e != 0) throw ConsistencyError("closed-form term is not divisible by e");
    total += inner / e;
  }
  return total;
}

std::uint64_t lambda_size_by_cosets(std::uint64_t q, unsigned d) {
  return coset_representatives(q, d).size();
}

std::uint64_t lambda_size(std::uint64_t q, unsigned d) {
  const std::uint64_t closed = lambda_size_closed_form(q, d);
  const std::uint64_t by_elements = lambda_size_by_elements(q, d).value;
  if (closed != by_elements)
    throw ConsistencyError("closed form " + std::to_string(closed) + " != element-wise sum " +
                           std::to_string(by_elements));
  return closed;
}

double asymptotic_size(std::uint64_t q, unsigned d, unsigned M) {
  if (M < 2) throw ParameterError("M must be >= 2");
  return (M - 1.0) * std::pow(static_cast<double>(q), d - 1.0) / d;
}

double yucas_estimate_center(std::uint64_t q, unsigned f) {
  return std::pow(static_cast<double>(q), f) / (f * (q - 1.0));
}

double yucas_estimate_radius(std::uint64_t q, unsigned f) {
  return 2.0 / f * std::pow(static_cast<double>(q), f / 2.0);
}

double lambda_estimate_center(std::uint64_t q, unsigned d) {
  double sum = 0;
  for (auto e : nt::divisors(d))
    sum += std::pow(static_cast<double>(q), static_cast<double>(e)) /
           (static_cast<double>(e * e) * (q - 1.0));
  return d * sum;
}

double lambda_estimate_radius(std::uint64_t q, unsigned d) {
  double sum = 0;
  for (auto e : nt::divisors(d))
    sum += std::pow(static_cast<double>(q), e / 2.0) / static_cast<double>(e * e);
  return 2.0 * d * sum;
}

CountReport count_report(std::uint64_t q, unsigned d, unsigned M) {
  if (M < 2 || (q - 1) % M != 0) throw ParameterError("M must divide q-1");
  CountReport r;
  r.q = q;
  r.d = d;
  r.M = M;
  r.lambda_formula = lambda_size_closed_form(q, d);
  const LambdaCount by_elements = lambda_size_by_elements(q, d);
  r.lambda_elements = by_elements.value;
  r.cells = by_elements.cells;
  r.lambda_cosets = lambda_size_by_cosets(q, d);
  r.family_size = (M - 1) * (r.lambda_formula - 1);
  r.asymptotic = asymptotic_size(q, d, M);
  r.ratio = static_cast<double>(r.family_size) / r.asymptotic;
  r.estimate_center = lambda_estimate_center(q, d);
  r.estimate_radius = lambda_estimate_radius(q, d);
  r.estimate_ok =
      std::abs(static_cast<double>(r.lambda_formula) - r.estimate_center) <= r.estimate_radius;
  return r;
}

std::vector<std::uint64_t> brute_force_irreducible_counts(const FieldContext& field, unsigned f,
                                                          unsigned jobs) {
  if (f < 1) throw ParameterError("f must be >= 1");
  const std::uint64_t q = field.q();
  const std::uint64_t total = nt::checked_pow(q, f);
  const unsigned workers = resolve_jobs(jobs);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(q, 0));

  // One work item per constant term.
  parallel_for(q, workers, [&](unsigned w, std::size_t c0) {
    if (c0 == 0 && f > 1) return;  // divisible by x
    const std::uint64_t rest_count = total / q;
    const Element b = f % 2 == 0 ? static_cast<Element>(c0) : field.neg(static_cast<Element>(c0));
    for (std::uint64_t rest = 0; rest < rest_count; ++rest) {
      Poly m(f + 1, 0);
      m[0] = static_cast<Element>(c0);
      std::uint64_t code = rest;
      for (unsigned i = 1; i < f; ++i) {
        m[i] = static_cast<Element>(code % q);
        code /= q;
      }
      m[f] = 1;
      bool has_root = false;
      if (f > 1)
        for (Element x = 0; x < q && !has_root; ++x) has_root = poly::evaluate(field, m, x) == 0;
      if (has_root) continue;
      if (f > 3 && !poly::is_irreducible(field, m)) continue;
      ++partial[w][b];
    }
  });

  std::vector<std::uint64_t> counts(q, 0);
  for (const auto& p : partial)
    for (std::uint64_t b = 0; b < q; ++b) counts[b] += p[b];
  return counts;
}

std::uint64_t necklace_count(std::uint64_t q, unsigned f) {
  std::int64_t sum = 0;
  for (auto k : nt::divisors(f))
    sum += nt::mobius(k) * static_cast<std::int64_t>(nt::checked_pow(q, static_cast<unsigned>(f / k)));
  return static_cast<std::uint64_t>(sum) / f;
}

}  // namespace seqfam
