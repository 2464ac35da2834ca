#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqfam/correlation.hpp"
#include "seqfam/counting.hpp"
#include "seqfam/family.hpp"
#include "seqfam/field.hpp"
#include "seqfam/sidelnikov.hpp"

// JSON reports and the plain-text sequence export format:
//
//   # q=<q> d=<d> M=<M> l=<l> c=<c>
//   s(0),s(1),...,s(period-1)
//
// l is "-" for sequences that are not array columns; d is 1 for the base
// sequence of period q-1.

namespace seqfam {

using nlohmann::json;

json to_json(const FieldContext& field);
json to_json(const ExtensionContext& ext);
json to_json(const RestrictionReport& report);
/// {q, d, M, policy, lambda, size, restriction_report}.
json family_manifest(const SequenceFamily& family);
json to_json(const CorrelationReport& report);
json to_json(const InequivalenceResult& result, const SequenceFamily& family);
json to_json(const CountReport& report);

/// Header and symbol line; l and c come from the provenance.
void write_sequence(std::ostream& out, const MSequence& seq, std::uint64_t q, unsigned d);
void write_family_payload(std::ostream& out, const SequenceFamily& family);

struct ExportedSequence {
  std::uint64_t q = 0;
  unsigned d = 0;
  unsigned M = 0;
  std::optional<std::uint64_t> l;
  unsigned c = 1;
  std::vector<std::uint32_t> symbols;
};

/// Parses the export format; throws ParameterError on malformed input.
std::vector<ExportedSequence> read_sequences(std::istream& in);

/// rounded |R|,count rows.
void write_histogram_csv(std::ostream& out, const CorrelationReport& report);

}  // namespace seqfam
