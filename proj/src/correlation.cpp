#include "seqfam/correlation.hpp"

#include <absl/container/flat_hash_map.h>
#include <fftw3.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <cmath>
#include <mutex>
#include <string>

#include "seqfam/array_structure.hpp"
#include "seqfam/parallel.hpp"

namespace seqfam {

namespace {

void require_compatible(const MSequence& a, const MSequence& b) {
  if (a.period() != b.period()) throw ParameterError("correlation: period mismatch");
  if (a.alphabet() != b.alphabet()) throw ParameterError("correlation: alphabet mismatch");
}

// Phase samples w_M^s(t) in split real/imaginary form. The conj_* arrays hold
// the conjugated samples over two periods so shifted reads need no modulo.
struct Samples {
  std::vector<double> re, im;
  std::vector<double> conj_re2, conj_im2;
};

Samples make_samples(const MSequence& s, const std::vector<std::complex<double>>& roots) {
  const std::size_t n = s.period();
  Samples out;
  out.re.resize(n);
  out.im.resize(n);
  out.conj_re2.resize(2 * n);
  out.conj_im2.resize(2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto z = roots[s.symbols()[t]];
    out.re[t] = z.real();
    out.im[t] = z.imag();
    out.conj_re2[t] = out.conj_re2[t + n] = z.real();
    out.conj_im2[t] = out.conj_im2[t + n] = -z.imag();
  }
  return out;
}

void direct_all_shifts(const Samples& a, const Samples& b, std::complex<double>* out) {
  const std::size_t n = a.re.size();
  for (std::size_t tau = 0; tau < n; ++tau) {
    const double* br = b.conj_re2.data() + tau;
    const double* bi = b.conj_im2.data() + tau;
    double sr0 = 0, sr1 = 0, si0 = 0, si1 = 0;
    std::size_t t = 0;
    for (; t + 1 < n; t += 2) {
      sr0 += a.re[t] * br[t] - a.im[t] * bi[t];
      si0 += a.re[t] * bi[t] + a.im[t] * br[t];
      sr1 += a.re[t + 1] * br[t + 1] - a.im[t + 1] * bi[t + 1];
      si1 += a.re[t + 1] * bi[t + 1] + a.im[t + 1] * br[t + 1];
    }
    if (t < n) {
      sr0 += a.re[t] * br[t] - a.im[t] * bi[t];
      si0 += a.re[t] * bi[t] + a.im[t] * br[t];
    }
    out[tau] = {sr0 + sr1, si0 + si1};
  }
}

// RAII wrapper around an FFTW backward plan of fixed (row-major) shape.
// Plans are created once on the calling thread; fftw_execute_dft is safe to
// call concurrently with per-thread buffers from fftw_malloc.
class BackwardDft {
 public:
  explicit BackwardDft(const std::vector<int>& dims) : n_(1) {
    for (int k : dims) n_ *= static_cast<std::size_t>(k);
    auto* in = fftw_alloc_complex(n_);
    auto* out = fftw_alloc_complex(n_);
    {
      std::lock_guard lock(planner_mutex());
      plan_ = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), in, out, FFTW_BACKWARD,
                            FFTW_ESTIMATE);
    }
    fftw_free(in);
    fftw_free(out);
    if (!plan_) throw std::runtime_error("fftw plan creation failed");
  }
  ~BackwardDft() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  BackwardDft(const BackwardDft&) = delete;
  BackwardDft& operator=(const BackwardDft&) = delete;

  std::size_t size() const { return n_; }
  void run(fftw_complex* in, fftw_complex* out) const { fftw_execute_dft(plan_, in, out); }

 private:
  static std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
  }
  std::size_t n_;
  fftw_plan plan_ = nullptr;
};

struct FftBuffer {
  explicit FftBuffer(std::size_t n) : in(fftw_alloc_complex(n)), out(fftw_alloc_complex(n)) {}
  ~FftBuffer() {
    fftw_free(in);
    fftw_free(out);
  }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;
  fftw_complex* in;
  fftw_complex* out;
};

// Unnormalized backward transform G(k) = sum_t x(t) e^(2 pi i k t / n).
std::vector<std::complex<double>> spectrum(const BackwardDft& dft, const Samples& s,
                                           FftBuffer& buf) {
  const std::size_t n = dft.size();
  for (std::size_t t = 0; t < n; ++t) {
    buf.in[t][0] = s.re[t];
    buf.in[t][1] = s.im[t];
  }
  dft.run(buf.in, buf.out);
  std::vector<std::complex<double>> g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = {buf.out[k][0], buf.out[k][1]};
  return g;
}

// R(tau) = (1/n) sum_k G_a(k) conj(G_b(k)) e^(2 pi i k tau / n).
void fft_all_shifts(const BackwardDft& dft, const std::vector<std::complex<double>>& ga,
                    const std::vector<std::complex<double>>& gb, FftBuffer& buf,
                    std::complex<double>* out) {
  const std::size_t n = dft.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto h = ga[k] * std::conj(gb[k]);
    buf.in[k][0] = h.real();
    buf.in[k][1] = h.imag();
  }
  dft.run(buf.in, buf.out);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t tau = 0; tau < n; ++tau)
    out[tau] = {buf.out[tau][0] * inv_n, buf.out[tau][1] * inv_n};
}

bool use_fft(CorrelationMethod method, std::size_t n) {
  return method == CorrelationMethod::fft ||
         (method != CorrelationMethod::direct && n >= kFftThreshold);
}

// Magnitudes are nonnegative, so adding one half and truncating rounds to
// nearest without a libm call.
std::int64_t histogram_key(double magnitude) {
  return static_cast<std::int64_t>(magnitude * 1e6 + 0.5);
}

void keep_smallest(std::vector<Witness>& v, std::size_t cap) {
  std::sort(v.begin(), v.end());
  if (v.size() > cap) v.resize(cap);
}

// Counts of rounded magnitudes. Keys are staged in buffers per key range so
// that each hash map absorbing them stays cache-resident even with millions
// of distinct keys.
class KeyHistogram {
 public:
  explicit KeyHistogram(std::int64_t max_key) : buffers_(kParts), maps_(kParts) {
    while ((max_key >> shift_) >= static_cast<std::int64_t>(kParts)) ++shift_;
    for (auto& b : buffers_) b.reserve(kBuffer);
  }

  void add(std::int64_t key) {
    const std::size_t part = part_of(key);
    auto& buf = buffers_[part];
    buf.push_back(key);
    if (buf.size() == kBuffer) flush(part);
  }

  /// Sum of all histograms, ascending by key.
  static std::vector<std::pair<std::int64_t, std::uint64_t>> merge(
      std::vector<KeyHistogram*> parts) {
    std::vector<std::pair<std::int64_t, std::uint64_t>> out;
    for (auto* h : parts)
      for (std::size_t p = 0; p < kParts; ++p) h->flush(p);
    for (std::size_t p = 0; p < kParts; ++p) {
      absl::flat_hash_map<std::int64_t, std::uint64_t> sum;
      for (auto* h : parts)
        for (const auto& [k, c] : h->maps_[p]) sum[k] += c;
      const std::size_t begin = out.size();
      out.insert(out.end(), sum.begin(), sum.end());
      std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin), out.end());
    }
    return out;
  }

 private:
  static constexpr std::size_t kParts = 1024;
  static constexpr std::size_t kBuffer = 512;

  std::size_t part_of(std::int64_t key) const {
    return std::min<std::size_t>(static_cast<std::size_t>(std::max<std::int64_t>(key, 0) >> shift_),
                                 kParts - 1);
  }

  void flush(std::size_t part) {
    auto& map = maps_[part];
    for (auto k : buffers_[part]) ++map[k];
    buffers_[part].clear();
  }

  int shift_ = 0;
  std::vector<std::vector<std::int64_t>> buffers_;
  std::vector<absl::flat_hash_map<std::int64_t, std::uint64_t>> maps_;
};

// Per-worker reduction state of a family scan.
class ScanState {
 public:
  ScanState(double root_q, std::size_t cap, std::size_t period)
      : root_q_(root_q), cap_(cap), histogram_(histogram_key(static_cast<double>(period)) + 1) {}

  void trivial(std::complex<double> value, std::size_t n) {
    if (std::abs(value - std::complex<double>(static_cast<double>(n), 0)) > kCorrelationTolerance)
      trivial_ok_ = false;
  }

  void record(unsigned c1, std::uint64_t l1, unsigned d1, unsigned c2, std::uint64_t l2,
              unsigned d2, std::uint64_t tau, double re, double im) {
    const double mag = std::sqrt(re * re + im * im);
    const std::int64_t key = histogram_key(mag);
    ++scanned_;
    histogram_.add(key);
    if (mag > (d1 + d2 - 1.0) * root_q_ + 1.0 + kCorrelationTolerance) {
      ++pair_violations_;
      pair_examples_.push_back({c1, l1, c2, l2, tau, mag});
      if (pair_examples_.size() > 2 * cap_) keep_smallest(pair_examples_, cap_);
    }
    if (l1 == l2 && tau == 0) {
      same_column_max_ = std::max(same_column_max_, mag);
      if (mag > (d1 - 1.0) * root_q_ + 1.0 + kCorrelationTolerance) same_column_ok_ = false;
    }
    max_magnitude_ = std::max(max_magnitude_, mag);
    if (key < max_key_) return;
    if (key > max_key_) {
      max_key_ = key;
      ties_.clear();
      tie_count_ = 0;
    }
    ++tie_count_;
    ties_.push_back({c1, l1, c2, l2, tau, mag});
    if (ties_.size() > 2 * cap_) keep_smallest(ties_, cap_);
  }

  static void merge(std::vector<ScanState>& states, CorrelationReport& report, std::size_t cap) {
    std::int64_t best_key = -1;
    std::vector<KeyHistogram*> histograms;
    for (auto& st : states) histograms.push_back(&st.histogram_);
    report.histogram = KeyHistogram::merge(histograms);
    for (const auto& st : states) {
      best_key = std::max(best_key, st.max_key_);
      report.delta_max = std::max(report.delta_max, st.max_magnitude_);
      report.values_scanned += st.scanned_;
      report.pair_bound_violations += st.pair_violations_;
      report.pair_bound_examples.insert(report.pair_bound_examples.end(),
                                        st.pair_examples_.begin(), st.pair_examples_.end());
      report.same_column_max = std::max(report.same_column_max, st.same_column_max_);
      report.same_column_ok = report.same_column_ok && st.same_column_ok_;
      report.trivial_ok = report.trivial_ok && st.trivial_ok_;
    }
    for (const auto& st : states) {
      if (st.max_key_ != best_key || best_key < 0) continue;
      report.argmax.insert(report.argmax.end(), st.ties_.begin(), st.ties_.end());
      report.argmax_total += st.tie_count_;
    }
    keep_smallest(report.argmax, cap);
    keep_smallest(report.pair_bound_examples, cap);
  }

 private:
  double root_q_;
  std::size_t cap_;
  double max_magnitude_ = 0;
  std::int64_t max_key_ = -1;
  std::vector<Witness> ties_;
  std::uint64_t tie_count_ = 0;
  KeyHistogram histogram_;
  std::uint64_t scanned_ = 0;
  std::uint64_t pair_violations_ = 0;
  std::vector<Witness> pair_examples_;
  double same_column_max_ = 0;
  bool same_column_ok_ = true;
  bool trivial_ok_ = true;
};

// Index of the c = 1 member of every column, provided the family has the
// layout build_family produces: members ordered by (l, c), c = 1..M-1, each
// equal to c times its column. Empty otherwise.
std::vector<std::size_t> column_layout(const SequenceFamily& family) {
  const auto& members = family.members;
  const std::size_t per = family.M - 1;
  if (per == 0 || members.size() % per != 0) return {};
  std::vector<std::size_t> first;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::size_t base = k - k % per;
    const FamilyMember& m = members[k];
    if (m.c != k % per + 1 || m.l != members[base].l || m.d_l != members[base].d_l) return {};
    const auto& s = m.sequence.symbols();
    const auto& v = members[base].sequence.symbols();
    for (std::size_t t = 0; t < s.size(); ++t)
      if (s[t] != std::uint64_t{m.c} * v[t] % family.M) return {};
    if (k == base) first.push_back(k);
  }
  return first;
}

// Column-pair scan. For columns u <= v and shift tau the joint counts
// H[a][-b] of (v_u(t), v_v(t + tau)) go through one M x M backward DFT,
// whose entry (c1, c2) is sum_t w^(c1 v_u(t) - c2 v_v(t + tau)).
void scan_columns(const SequenceFamily& family, const std::vector<std::size_t>& first,
                  unsigned jobs, std::vector<ScanState>& states) {
  const auto& members = family.members;
  const unsigned M = family.M;
  const std::size_t n = members.front().sequence.period();
  const BackwardDft dft({static_cast<int>(M), static_cast<int>(M)});

  // Row offsets M * v_u(t), and (-v_v) mod M over two periods.
  std::vector<std::vector<std::uint32_t>> rows, negated;
  for (auto k : first) {
    const auto& s = members[k].sequence.symbols();
    std::vector<std::uint32_t> r(n), g(2 * n);
    for (std::size_t t = 0; t < n; ++t) {
      r[t] = s[t] * M;
      g[t] = g[t + n] = (M - s[t]) % M;
    }
    rows.push_back(std::move(r));
    negated.push_back(std::move(g));
  }

  parallel_for(first.size(), jobs, [&](unsigned worker, std::size_t u) {
    ScanState& st = states[worker];
    FftBuffer buf(dft.size());
    std::fill_n(&buf.in[0][0], 2 * dft.size(), 0.0);
    const FamilyMember& a = members[first[u]];
    const auto& row = rows[u];
    for (std::size_t v = u; v < first.size(); ++v) {
      const FamilyMember& b = members[first[v]];
      for (std::size_t tau = 0; tau < n; ++tau) {
        const std::uint32_t* col = negated[v].data() + tau;
        for (std::size_t t = 0; t < n; ++t) buf.in[row[t] + col[t]][0] += 1;
        dft.run(buf.in, buf.out);
        for (std::size_t t = 0; t < n; ++t) buf.in[row[t] + col[t]][0] = 0;
        for (unsigned c1 = 1; c1 < M; ++c1) {
          for (unsigned c2 = u == v ? c1 : 1; c2 < M; ++c2) {
            const auto& z = buf.out[c1 * M + c2];
            if (u == v && c1 == c2 && tau == 0) {
              st.trivial({z[0], z[1]}, n);
              continue;
            }
            st.record(c1, a.l, a.d_l, c2, b.l, b.d_l, tau, z[0], z[1]);
          }
        }
      }
    }
  });
}

}  // namespace

std::complex<double> cross_correlation(const MSequence& a, const MSequence& b, std::int64_t tau) {
  require_compatible(a, b);
  const unsigned M = a.alphabet();
  const auto roots = unit_roots(M);
  std::complex<double> sum = 0;
  const auto n = static_cast<std::int64_t>(a.period());
  for (std::int64_t t = 0; t < n; ++t) {
    const unsigned e = (a[t] + M - b[t + tau]) % M;
    sum += roots[e];
  }
  return sum;
}

std::vector<std::complex<double>> correlation_all_shifts(const MSequence& a, const MSequence& b,
                                                         CorrelationMethod method) {
  require_compatible(a, b);
  const auto roots = unit_roots(a.alphabet());
  const Samples sa = make_samples(a, roots);
  const Samples sb = make_samples(b, roots);
  const std::size_t n = a.period();
  std::vector<std::complex<double>> out(n);
  if (use_fft(method, n)) {
    const BackwardDft dft({static_cast<int>(n)});
    FftBuffer buf(n);
    const auto ga = spectrum(dft, sa, buf);
    const auto gb = spectrum(dft, sb, buf);
    fft_all_shifts(dft, ga, gb, buf, out.data());
  } else {
    direct_all_shifts(sa, sb, out.data());
  }
  return out;
}

CorrelationReport max_correlation(const SequenceFamily& family, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (family.members.empty()) throw ParameterError("max_correlation: empty family");
  CorrelationReport report;
  report.q = family.q;
  report.d = family.d;
  report.M = family.M;
  report.family_size = family.size();
  report.policy = family.policy;
  const double root_q = std::sqrt(static_cast<double>(family.q));
  report.bound = (2.0 * family.d - 1.0) * root_q + 1.0;

  const auto& members = family.members;
  const std::size_t count = members.size();
  const std::size_t n = members.front().sequence.period();
  for (const auto& m : members) require_compatible(members.front().sequence, m.sequence);

  const unsigned jobs = resolve_jobs(options.jobs);
  const std::size_t cap = std::max<std::size_t>(options.max_witnesses, 1);
  std::vector<ScanState> states(jobs, ScanState(root_q, cap, n));

  std::vector<std::size_t> first;
  if (options.method == CorrelationMethod::column_dft ||
      options.method == CorrelationMethod::automatic) {
    first = column_layout(family);
    if (first.empty() && options.method == CorrelationMethod::column_dft)
      throw ParameterError("column_dft scan needs the (l, c) member layout of build_family");
  }

  if (!first.empty()) {
    scan_columns(family, first, jobs, states);
  } else {
    const auto roots = unit_roots(family.M);
    std::vector<Samples> samples;
    samples.reserve(count);
    for (const auto& m : members) samples.push_back(make_samples(m.sequence, roots));

    const bool fft = use_fft(options.method, n);
    std::unique_ptr<BackwardDft> dft;
    std::vector<std::vector<std::complex<double>>> spectra;
    if (fft) {
      dft = std::make_unique<BackwardDft>(std::vector<int>{static_cast<int>(n)});
      FftBuffer buf(n);
      for (const auto& s : samples) spectra.push_back(spectrum(*dft, s, buf));
    }

    parallel_for(count, jobs, [&](unsigned worker, std::size_t i) {
      ScanState& st = states[worker];
      std::vector<std::complex<double>> values(n);
      std::unique_ptr<FftBuffer> buf;
      if (fft) buf = std::make_unique<FftBuffer>(n);
      const FamilyMember& a = members[i];
      for (std::size_t j = i; j < count; ++j) {
        const FamilyMember& b = members[j];
        if (fft)
          fft_all_shifts(*dft, spectra[i], spectra[j], *buf, values.data());
        else
          direct_all_shifts(samples[i], samples[j], values.data());
        for (std::size_t tau = 0; tau < n; ++tau) {
          if (i == j && tau == 0) {
            st.trivial(values[0], n);
            continue;
          }
          st.record(a.c, a.l, a.d_l, b.c, b.l, b.d_l, tau, values[tau].real(),
                    values[tau].imag());
        }
      }
    });
  }

  ScanState::merge(states, report, cap);
  report.within_bound = report.delta_max <= report.bound + kCorrelationTolerance;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<std::uint64_t> cyclic_equivalence_shift(const MSequence& a, const MSequence& b) {
  if (a.period() != b.period() || a.alphabet() != b.alphabet()) return std::nullopt;
  const auto n = static_cast<std::int64_t>(a.period());
  for (std::int64_t tau = 0; tau < n; ++tau) {
    bool equal = true;
    for (std::int64_t t = 0; t < n && equal; ++t) equal = a[t] == b[t + tau];
    if (equal) return static_cast<std::uint64_t>(tau);
  }
  return std::nullopt;
}

namespace {

// Booth's algorithm: start index of the lexicographically least rotation.
std::size_t least_rotation(const std::vector<std::uint32_t>& s) {
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  auto at = [&](std::ptrdiff_t idx) { return s[static_cast<std::size_t>(idx % n)]; };
  std::vector<std::ptrdiff_t> fail(static_cast<std::size_t>(2 * n), -1);
  std::ptrdiff_t k = 0;
  for (std::ptrdiff_t j = 1; j < 2 * n; ++j) {
    const std::uint32_t sj = at(j);
    std::ptrdiff_t i = fail[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + i + 1)) {
      if (sj < at(k)) k = j;
      fail[static_cast<std::size_t>(j - k)] = -1;
    } else {
      fail[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return static_cast<std::size_t>(k % n);
}

}  // namespace

InequivalenceResult cyclic_inequivalence(std::span<const MSequence> sequences) {
  InequivalenceResult result;
  // (alphabet, canonical rotation) -> (index, rotation offset)
  std::map<std::pair<unsigned, std::vector<std::uint32_t>>, std::pair<std::size_t, std::size_t>>
      seen;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    const auto& s = sequences[i].symbols();
    const std::size_t r = least_rotation(s);
    std::vector<std::uint32_t> canon(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) canon[t] = s[(t + r) % s.size()];
    auto [it, inserted] = seen.try_emplace({sequences[i].alphabet(), std::move(canon)}, i, r);
    if (inserted) continue;
    const auto [first, r_first] = it->second;
    const std::size_t n = s.size();
    const std::uint64_t shift = (r + n - r_first) % n;
    // seq[first](t + r_first) = seq[i](t + r)  =>  seq[first](t) = seq[i](t + shift).
    const auto confirmed = cyclic_equivalence_shift(sequences[first], sequences[i]);
    if (!confirmed) throw ConsistencyError("canonical rotation disagrees with shift search");
    result.inequivalent = false;
    result.witness = EquivalenceWitness{first, i, shift};
    return result;
  }
  return result;
}

InequivalenceResult cyclic_inequivalence(const SequenceFamily& family) {
  std::vector<MSequence> seqs;
  seqs.reserve(family.members.size());
  for (const auto& m : family.members) seqs.push_back(m.sequence);
  return cyclic_inequivalence(seqs);
}

double weil_bound(const WeilBoundInput& input) {
  if (input.terms.empty()) throw ParameterError("weil_bound: need at least one polynomial");
  double degree_sum = 0;
  double root_sum = 0;
  for (const auto& t : input.terms) {
    degree_sum += t.degree;
    root_sum += t.roots_in_field;
  }
  return (degree_sum - 1.0) * std::sqrt(static_cast<double>(input.q)) + root_sum;
}

std::complex<double> empirical_character_sum(const Character& psi,
                                             std::span<const CharacterSumTerm> terms) {
  const FieldContext& field = psi.field();
  const auto M = static_cast<std::int64_t>(psi.order());
  const auto roots = unit_roots(psi.order());
  std::complex<double> sum = 0;
  for (std::uint64_t x = 0; x < field.q(); ++x) {
    std::int64_t e = 0;
    for (const auto& term : terms) {
      const Element v = field.mul(term.scalar, poly::evaluate(field, term.poly, static_cast<Element>(x)));
      e += static_cast<std::int64_t>(psi.exponent(v)) * (((term.power % M) + M) % M);
    }
    sum += roots[static_cast<std::size_t>(e % M)];
  }
  return sum;
}

std::complex<double> character_sum_correlation(const ExtensionContext& ext, unsigned M,
                                               unsigned c1, std::uint64_t l1, unsigned c2,
                                               std::uint64_t l2, std::uint64_t tau) {
  const FieldContext& base = ext.base();
  const Character psi(ext.base_ptr(), M);
  const CharacterSumTerm terms[] = {
      {column_polynomial(ext, l1).f, 1, static_cast<std::int64_t>(c1)},
      {poly::substitute_scaled(base, column_polynomial(ext, l2).f, base.exp(tau)), 1,
       -static_cast<std::int64_t>(c2)},
  };
  return empirical_character_sum(psi, terms) - 1.0;
}

std::complex<double> reduced_character_sum(const ExtensionContext& ext, unsigned M, unsigned c1,
                                           std::uint64_t l1, unsigned c2, std::uint64_t l2,
                                           std::uint64_t tau) {
  const FieldContext& base = ext.base();
  const Character psi(ext.base_ptr(), M);
  const ColumnPolynomial p1 = column_polynomial(ext, l1);
  const ColumnPolynomial p2 = column_polynomial(ext, l2);
  const auto d = static_cast<std::int64_t>(ext.d());
  const CharacterSumTerm terms[] = {
      {p1.p, 1, static_cast<std::int64_t>(c1) * (d / p1.d_l)},
      {poly::substitute_scaled(base, p2.p, base.exp(tau)), 1,
       -static_cast<std::int64_t>(c2) * (d / p2.d_l)},
  };
  return empirical_character_sum(psi, terms);
}

}  // namespace seqfam
