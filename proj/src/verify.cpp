#include "seqfam/verify.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "seqfam/array_structure.hpp"
#include "seqfam/correlation.hpp"
#include "seqfam/counting.hpp"
#include "seqfam/number_theory.hpp"
#include "seqfam/serialize.hpp"
#include "seqfam/sidelnikov.hpp"

namespace seqfam {

namespace {

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

CheckResult check_norm_route(const ExtensionContext& ext, unsigned M) {
  const std::string name = "norm_route";
  const MSequence s = sidelnikov_sequence_ext(ext, M);
  const Element minus_one = ext.neg(1);
  for (std::uint64_t t = 0; t < s.period(); ++t) {
    const Element x = ext.exp(t);
    const std::uint32_t direct = ext.dlog(ext.add(x, 1)) % M;
    if (s.symbols()[t] != direct) return fail(name, cat("routes differ at t=", t));
    if (x == minus_one && s.symbols()[t] != 0) return fail(name, cat("s(t) != 0 at alpha^t=-1, t=", t));
  }
  return pass(name, cat("period ", s.period(), " agrees at every t"));
}

CheckResult check_array_identities(const ExtensionContext& ext, unsigned M) {
  const std::string name = "array_identities";
  const FieldContext& base = ext.base();
  const std::uint64_t q = ext.q();
  const std::uint64_t width = ext.norm_exponent();
  const std::uint64_t period = ext.order() - 1;
  const unsigned d = ext.d();
  const MSequence long_seq = sidelnikov_sequence_ext(ext, M);

  std::vector<MSequence> columns;
  columns.reserve(width);
  for (std::uint64_t l = 0; l < width; ++l) columns.push_back(column_sequence(ext, l, M));

  for (std::uint64_t l = 0; l < width; ++l) {
    const MSequence& v = columns[l];
    if (column_from_array(long_seq, width, l) != v)
      return fail(name, cat("strided column differs from closed form at l=", l));
    if (column_from_array(long_seq, width, l * q % period) != v)
      return fail(name, cat("v_l != v_lq at l=", l));

    ColumnPolynomial col;
    try {
      col = column_polynomial(ext, l);
    } catch (const ConsistencyError& e) {
      return fail(name, e.what());
    }
    for (std::uint64_t t = 0; t + 1 < q; ++t) {
      const Element value = poly::evaluate(base, col.f, base.exp(t));
      if (base.dlog(value) % M != v.symbols()[t])
        return fail(name, cat("v_l(t) != log f_l(beta^t) at l=", l, " t=", t));
    }
    if (col.f.back() != base.exp(l % (q - 1)) || col.f.front() != 1 ||
        col.f[1] != ext.trace(ext.exp(l)))
      return fail(name, cat("f_l leading/linear/constant coefficients wrong at l=", l));
    if (l >= 1) {
      for (Element x = 0; x < q; ++x)
        if (poly::evaluate(base, col.p, x) == 0) return fail(name, cat("p_l has a root, l=", l));
    }
    if (conjugate_orbit_size(ext, ext.neg(ext.exp(period - l % period))) != col.d_l)
      return fail(name, cat("d_l != conjugate orbit size at l=", l));
    Poly product{1};
    for (unsigned i = 0; i < col.d_l / col.m_l; ++i)
      product = poly::mul(ext, product, frobenius_poly(ext, col.q_part, i * col.m_l));
    if (product != col.p) return fail(name, cat("p_l != prod of q_l conjugates at l=", l));
  }

  // Congruent column indices give cyclic shifts of one another.
  for (std::uint64_t l = 0; l < width; ++l)
    for (std::uint64_t k = 1; l + k * width < period; ++k)
      if (!cyclic_equivalence_shift(columns[l], column_from_array(long_seq, width, l + k * width)))
        return fail(name, cat("columns l=", l, " and l+", k, "S are not cyclic shifts"));

  // Reflection identity.
  const std::uint64_t t_coeff = (nt::checked_pow(q, d - 1) - 1) / (q - 1);
  for (std::uint64_t l = 1; l <= q; ++l) {
    const std::uint64_t idx = (width - (t_coeff * l) % width) % width;
    const MSequence& lhs = columns[idx];
    const MSequence& rhs = columns[l % width];
    for (std::int64_t t = 0; t + 1 < static_cast<std::int64_t>(q); ++t)
      if (lhs[t] != rhs[t - static_cast<std::int64_t>(l) + 1])
        return fail(name, cat("reflection identity fails at l=", l, " t=", t));
  }
  return pass(name, cat(width, " columns checked"));
}

CheckResult check_shift_distinctness(const ExtensionContext& ext,
                                     const std::vector<std::uint64_t>& columns) {
  const std::string name = "shift_distinctness";
  const FieldContext& base = ext.base();
  const std::uint64_t q = ext.q();
  std::map<Poly, std::uint64_t> by_poly;
  std::map<std::uint64_t, ColumnPolynomial> cols;
  for (auto l : columns) {
    cols[l] = column_polynomial(ext, l);
    if (!by_poly.emplace(cols[l].p, l).second)
      return fail(name, cat("p_l repeats for l=", l));
  }
  std::uint64_t compared = 0;
  for (auto l2 : columns) {
    const ColumnPolynomial& c2 = cols[l2];
    for (std::uint64_t tau = 0; tau + 1 < q; ++tau) {
      const Poly from_roots = shifted_minimal_polynomial(ext, l2, tau);
      const std::uint64_t shift = tau * c2.d_l % (q - 1);
      const Poly scaled = poly::scale(base, poly::substitute_scaled(base, c2.p, base.exp(tau)),
                                      base.exp((q - 1) - shift));
      if (scaled != from_roots)
        return fail(name, cat("root and scaling routes differ, l=", l2, " tau=", tau));
      if (!poly::is_monic(from_roots)) return fail(name, "shifted polynomial not monic");
      const auto hit = by_poly.find(from_roots);
      if (hit != by_poly.end() && !(hit->second == l2 && tau == 0))
        return fail(name, cat("p_", hit->second, " equals shifted p_", l2, " at tau=", tau));
      if (tau == 0 && (hit == by_poly.end() || hit->second != l2))
        return fail(name, cat("unshifted p_", l2, " not recovered"));
      compared += columns.size();
    }
  }
  return pass(name, cat(compared, " (l1, l2, tau) comparisons"));
}

CheckResult check_base_autocorrelation(const FieldContext& field, unsigned M) {
  const std::string name = "base_autocorrelation";
  const MSequence s = sidelnikov_sequence(field, M);
  double worst = 0;
  for (std::uint64_t tau = 1; tau < s.period(); ++tau)
    worst = std::max(worst, std::abs(cross_correlation(s, s, static_cast<std::int64_t>(tau))));
  const std::string detail = cat("q=", field.q(), " M=", M, " max out-of-phase |R|=", worst);
  return worst <= 4.0 + kCorrelationTolerance ? pass(name, detail) : fail(name, detail);
}

CheckResult check_lambda_routes(const ExtensionContext& ext) {
  const std::string name = "lambda_routes";
  const std::uint64_t q = ext.q();
  const unsigned d = ext.d();
  const std::uint64_t closed = lambda_size_closed_form(q, d);
  const std::uint64_t elements = lambda_size_by_elements(q, d).value;
  const std::uint64_t cosets = lambda_size_by_cosets(q, d);
  const FactorizationCheck fc = verify_factorization(ext, cyclotomic_factors(ext));
  const std::string detail = cat("q=", q, " d=", d, " closed=", closed, " elements=", elements,
                                 " cosets=", cosets, " factors=", fc.factor_count,
                                 fc.product_expanded ? " (product expanded)" : "");
  if (!fc.ok()) return fail(name, detail + " factorization check failed");
  if (closed != elements || closed != cosets || closed != fc.factor_count) return fail(name, detail);
  return pass(name, detail);
}

CheckResult check_yucas_oracle(const FieldContext& field, unsigned f, unsigned jobs) {
  const std::string name = "yucas_oracle";
  const std::uint64_t q = field.q();
  const auto brute = brute_force_irreducible_counts(field, f, jobs);
  std::uint64_t total = brute[0];  // x itself when f = 1
  const double center = yucas_estimate_center(q, f);
  const double radius = yucas_estimate_radius(q, f);
  for (Element b = 1; b < q; ++b) {
    const std::uint64_t formula = yucas_count(field, f, b);
    if (formula != brute[b])
      return fail(name, cat("q=", q, " f=", f, " b=", b, " formula=", formula, " brute=", brute[b]));
    if (std::abs(static_cast<double>(formula) - center) > radius)
      return fail(name, cat("deviation bound fails q=", q, " f=", f, " b=", b));
    total += brute[b];
  }
  if (total != necklace_count(q, f))
    return fail(name, cat("total ", total, " != necklace count ", necklace_count(q, f)));
  return pass(name, cat("q=", q, " f=", f, " total irreducibles ", total));
}

bool VerifySummary::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

nlohmann::json VerifySummary::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", passed()}, {"checks", list}};
}

VerifySummary verify_parameter_set(std::uint32_t p, unsigned n, unsigned d, unsigned M,
                                   const VerifyOptions& options) {
  VerifySummary summary;
  auto& checks = summary.checks;
  const FieldPtr field = build_field(p, n, options.table_limit);
  require_alphabet(field->q(), M);
  const ExtensionPtr ext = build_extension(field, d, options.table_limit);
  const std::uint64_t q = field->q();

  const RestrictionReport restrictions = check_restrictions(q, d);
  const bool allowed = restrictions.satisfied(options.policy);
  checks.push_back({"restrictions", allowed, to_json(restrictions).dump()});

  checks.push_back(check_norm_route(*ext, M));
  checks.push_back(check_array_identities(*ext, M));

  if (allowed) {
    const SequenceFamily fam = build_family(*ext, M, options.policy, options.jobs);
    const std::size_t excluded = options.policy == Policy::relaxed_d2 ? 2 : 1;
    const std::size_t expected = (M - 1) * (fam.lambda.size() - excluded);
    checks.push_back({"family_size", fam.size() == expected,
                      cat("|Sigma|=", fam.size(), " expected ", expected)});
    checks.push_back(check_shift_distinctness(*ext, fam.columns));

    ScanOptions scan;
    scan.jobs = options.jobs;
    const CorrelationReport report = max_correlation(fam, scan);
    checks.push_back({"correlation_bound", report.within_bound && report.trivial_ok,
                      cat("delta_max=", report.delta_max, " bound=", report.bound)});
    checks.push_back({"pair_bound", report.pair_bound_violations == 0,
                      cat(report.pair_bound_violations, " violations of (d_l1+d_l2-1)sqrt(q)+1")});
    checks.push_back({"same_column_bound", report.same_column_ok,
                      cat("max=", report.same_column_max)});
    const InequivalenceResult ineq = cyclic_inequivalence(fam);
    checks.push_back({"cyclic_inequivalence", ineq.inequivalent,
                      ineq.inequivalent ? "no shifted duplicates"
                                        : "equivalent pair found"});
  }

  checks.push_back(check_base_autocorrelation(*field, M));
  checks.push_back(check_lambda_routes(*ext));
  for (unsigned f = 1; f <= d; ++f) {
    if (nt::checked_pow(q, f) > options.oracle_limit) break;
    checks.push_back(check_yucas_oracle(*field, f, options.jobs));
  }
  return summary;
}

}  // namespace seqfam
