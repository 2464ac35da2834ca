#include "seqfam/sidelnikov.hpp"

#include <numbers>
#include <string>

namespace seqfam {

MSequence::MSequence(std::vector<std::uint32_t> symbols, unsigned M, Provenance provenance)
    : symbols_(std::move(symbols)), M_(M), provenance_(provenance) {
  if (M_ < 2) throw ParameterError("alphabet size M must be >= 2");
  if (symbols_.empty()) throw ParameterError("sequence period must be positive");
  for (auto s : symbols_)
    if (s >= M_) throw ParameterError("symbol " + std::to_string(s) + " outside [0, M-1]");
}

void require_alphabet(std::uint64_t q, unsigned M) {
  if (M < 2 || (q - 1) % M != 0) throw ParameterError("M must divide q-1");
}

std::vector<std::complex<double>> unit_roots(unsigned M) {
  std::vector<std::complex<double>> roots(M);
  for (unsigned k = 0; k < M; ++k) {
    if (4 * k % M == 0) {
      // k/M is a multiple of 1/4.
      static constexpr std::complex<double> quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      roots[k] = quarter[4 * k / M];
    } else {
      roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / M);
    }
  }
  return roots;
}

Character::Character(FieldPtr field, unsigned M) : field_(std::move(field)), M_(M) {
  require_alphabet(field_->q(), M);
  roots_ = unit_roots(M);
}

std::complex<double> Character::power(Element x, std::int64_t k) const {
  const auto m = static_cast<std::int64_t>(M_);
  const std::int64_t e = (static_cast<std::int64_t>(exponent(x)) * (((k % m) + m) % m)) % m;
  return roots_[static_cast<std::size_t>(e)];
}

MSequence sidelnikov_sequence(const FieldContext& field, unsigned M) {
  require_alphabet(field.q(), M);
  const std::uint64_t period = field.q() - 1;
  std::vector<std::uint32_t> s(period);
  for (std::uint64_t t = 0; t < period; ++t) s[t] = field.dlog(field.add(field.exp(t), 1)) % M;
  return MSequence(std::move(s), M, BaseSidelnikov{});
}

MSequence sidelnikov_sequence_ext(const ExtensionContext& ext, unsigned M) {
  require_alphabet(ext.q(), M);
  const FieldContext& base = ext.base();
  const std::uint64_t period = ext.order() - 1;
  std::vector<std::uint32_t> s(period);
  for (std::uint64_t t = 0; t < period; ++t)
    s[t] = base.dlog(ext.norm(ext.add(ext.exp(t), 1))) % M;
  return MSequence(std::move(s), M, ExtendedSidelnikov{ext.d()});
}

MSequence constant_multiple(const MSequence& seq, unsigned c) {
  const unsigned M = seq.alphabet();
  std::vector<std::uint32_t> out(seq.period());
  for (std::size_t t = 0; t < out.size(); ++t)
    out[t] = static_cast<std::uint32_t>(std::uint64_t{c % M} * seq.symbols()[t] % M);
  Provenance prov = seq.provenance();
  if (const auto* col = std::get_if<Column>(&prov)) prov = ConstantMultiple{c, col->l};
  return MSequence(std::move(out), M, prov);
}

MSequence cyclic_shift(const MSequence& seq, std::int64_t tau) {
  std::vector<std::uint32_t> out(seq.period());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = seq[static_cast<std::int64_t>(t) + tau];
  return MSequence(std::move(out), seq.alphabet(), seq.provenance());
}

}  // namespace seqfam
