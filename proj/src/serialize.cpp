#include "seqfam/serialize.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace seqfam {

namespace {

json witness_json(const Witness& w) {
  return {{"c1", w.c1}, {"l1", w.l1}, {"c2", w.c2}, {"l2", w.l2},
          {"tau", w.tau}, {"magnitude", w.magnitude}};
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Header {
  std::optional<std::uint64_t> l;
  unsigned c = 1;
};

Header header_of(const Provenance& provenance) {
  if (const auto* col = std::get_if<Column>(&provenance)) return {col->l, 1};
  if (const auto* cm = std::get_if<ConstantMultiple>(&provenance)) return {cm->l, cm->c};
  return {std::nullopt, 1};
}

}  // namespace

json to_json(const FieldContext& field) {
  return {{"p", field.p()},         {"n", field.n()},         {"q", field.q()},
          {"modulus", field.modulus()}, {"beta", field.beta()}};
}

json to_json(const ExtensionContext& ext) {
  json j = to_json(ext.base());
  j["d"] = ext.d();
  j["extension_modulus"] = ext.modulus();
  j["alpha"] = ext.alpha();
  return j;
}

json to_json(const RestrictionReport& r) {
  return {{"gcd_d_q_minus_1", r.gcd_value},
          {"gcd_ok", r.gcd_ok},
          {"degree_limit", r.degree_limit},
          {"degree_ok", r.degree_ok},
          {"relaxation_applicable", r.relaxation_applicable},
          {"relaxation_drops_half", r.relaxation_drops_half}};
}

json family_manifest(const SequenceFamily& family) {
  return {{"q", family.q},
          {"d", family.d},
          {"M", family.M},
          {"policy", to_string(family.policy)},
          {"lambda", family.lambda},
          {"columns", family.columns},
          {"size", family.size()},
          {"restriction_report", to_json(family.restrictions)}};
}

json to_json(const CorrelationReport& r) {
  json argmax = json::array();
  for (const auto& w : r.argmax) argmax.push_back(witness_json(w));
  json examples = json::array();
  for (const auto& w : r.pair_bound_examples) examples.push_back(witness_json(w));
  json histogram = json::array();
  for (const auto& [key, count] : r.histogram)
    histogram.push_back({{"magnitude", static_cast<double>(key) / 1e6}, {"count", count}});
  return {{"q", r.q},
          {"d", r.d},
          {"M", r.M},
          {"policy", to_string(r.policy)},
          {"family_size", r.family_size},
          {"delta_max", r.delta_max},
          {"bound", r.bound},
          {"within_bound", r.within_bound},
          {"argmax", argmax},
          {"argmax_total", r.argmax_total},
          {"values_scanned", r.values_scanned},
          {"pair_bound_violations", r.pair_bound_violations},
          {"pair_bound_examples", examples},
          {"same_column_max", r.same_column_max},
          {"same_column_ok", r.same_column_ok},
          {"trivial_ok", r.trivial_ok},
          {"histogram", histogram},
          {"elapsed", r.elapsed_seconds}};
}

json to_json(const InequivalenceResult& result, const SequenceFamily& family) {
  json j = {{"inequivalent", result.inequivalent}};
  if (result.witness) {
    const auto& w = *result.witness;
    const auto& a = family.members.at(w.first);
    const auto& b = family.members.at(w.second);
    j["witness"] = {{"c1", a.c}, {"l1", a.l}, {"c2", b.c}, {"l2", b.l}, {"shift", w.shift}};
  }
  return j;
}

json to_json(const CountReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"e", c.e},
                     {"m", c.m},
                     {"elements", c.elements},
                     {"per_element", c.per_element},
                     {"contribution", c.contribution}});
  return {{"q", r.q},
          {"d", r.d},
          {"M", r.M},
          {"lambda_formula", r.lambda_formula},
          {"lambda_elements", r.lambda_elements},
          {"lambda_cosets", r.lambda_cosets},
          {"family_size", r.family_size},
          {"asymptotic", r.asymptotic},
          {"ratio", r.ratio},
          {"estimate_center", r.estimate_center},
          {"estimate_radius", r.estimate_radius},
          {"estimate_ok", r.estimate_ok},
          {"consistent", r.consistent()},
          {"breakdown", cells}};
}

void write_sequence(std::ostream& out, const MSequence& seq, std::uint64_t q, unsigned d) {
  const Header h = header_of(seq.provenance());
  out << "# q=" << q << " d=" << d << " M=" << seq.alphabet() << " l=";
  if (h.l)
    out << *h.l;
  else
    out << '-';
  out << " c=" << h.c << '\n';
  const auto& s = seq.symbols();
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t) out << ',';
    out << s[t];
  }
  out << '\n';
}

void write_family_payload(std::ostream& out, const SequenceFamily& family) {
  for (const auto& m : family.members) write_sequence(out, m.sequence, family.q, family.d);
}

std::vector<ExportedSequence> read_sequences(std::istream& in) {
  std::vector<ExportedSequence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) != 0) throw ParameterError("expected header line, got: " + line);
    ExportedSequence seq;
    std::istringstream fields(line.substr(2));
    std::string token;
    int seen = 0;
    while (fields >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) throw ParameterError("malformed header token: " + token);
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      try {
        if (key == "q") seq.q = std::stoull(value);
        else if (key == "d") seq.d = static_cast<unsigned>(std::stoul(value));
        else if (key == "M") seq.M = static_cast<unsigned>(std::stoul(value));
        else if (key == "l") seq.l = value == "-" ? std::nullopt : std::optional(std::stoull(value));
        else if (key == "c") seq.c = static_cast<unsigned>(std::stoul(value));
        else throw ParameterError("unknown header key: " + key);
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const ParameterError*>(&e)) throw;
        throw ParameterError("bad header value: " + token);
      }
      ++seen;
    }
    if (seen != 5) throw ParameterError("header needs q, d, M, l, c: " + line);
    if (!std::getline(in, line)) throw ParameterError("missing symbol line");
    std::istringstream symbols(line);
    std::string sym;
    while (std::getline(symbols, sym, ',')) {
      try {
        seq.symbols.push_back(static_cast<std::uint32_t>(std::stoul(sym)));
      } catch (const std::logic_error&) {
        throw ParameterError("bad symbol: " + sym);
      }
    }
    out.push_back(std::move(seq));
  }
  return out;
}

void write_histogram_csv(std::ostream& out, const CorrelationReport& report) {
  out << "magnitude,count\n";
  for (const auto& [key, count] : report.histogram)
    out << fixed6(static_cast<double>(key) / 1e6) << ',' << count << '\n';
}

}  // namespace seqfam
