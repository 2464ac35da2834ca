#include <doctest.h>

#include <sstream>

#include "seqfam/serialize.hpp"

using namespace seqfam;

TEST_CASE("sequence export round trip") {
  const auto ext = build_extension(build_field(2, 4), 2);
  const SequenceFamily fam = build_family(*ext, 5, Policy::strict);
  std::stringstream buf;
  write_family_payload(buf, fam);
  const auto back = read_sequences(buf);
  REQUIRE(back.size() == fam.size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    CHECK(back[k].q == 16);
    CHECK(back[k].d == 2);
    CHECK(back[k].M == 5);
    CHECK(back[k].l == fam.members[k].l);
    CHECK(back[k].c == fam.members[k].c);
    CHECK(back[k].symbols == fam.members[k].sequence.symbols());
  }

  std::stringstream base;
  write_sequence(base, sidelnikov_sequence(*build_field(5, 1), 4), 5, 1);
  CHECK(base.str() == "# q=5 d=1 M=4 l=- c=1\n1,3,0,2\n");
  const auto parsed = read_sequences(base);
  REQUIRE(parsed.size() == 1);
  CHECK_FALSE(parsed[0].l.has_value());
}

TEST_CASE("malformed exports are rejected") {
  for (const char* text : {"1,2,3\n", "# q=5 d=1 M=4 l=-\n1,3\n", "# q=5 d=1 M=4 l=- c=1\n",
                           "# q=5 d=1 M=4 l=- c=1 z=3\n1\n", "# q=x d=1 M=4 l=- c=1\n1\n",
                           "# q=5 d=1 M=4 l=- c=1\n1,a,2\n", "# q=5 d=1 M4 l=- c=1\n1\n"}) {
    CAPTURE(text);
    std::istringstream in(text);
    CHECK_THROWS_AS(read_sequences(in), ParameterError);
  }
  std::istringstream empty("");
  CHECK(read_sequences(empty).empty());
}

TEST_CASE("manifest and reports") {
  const auto ext = build_extension(build_field(2, 4), 2);
  const SequenceFamily fam = build_family(*ext, 3, Policy::strict);
  const json m = family_manifest(fam);
  CHECK(m["q"] == 16);
  CHECK(m["d"] == 2);
  CHECK(m["M"] == 3);
  CHECK(m["policy"] == "strict");
  CHECK(m["size"] == 16);
  CHECK(m["lambda"].size() == 9);
  CHECK(m["restriction_report"]["gcd_ok"] == true);
  CHECK(m["restriction_report"]["degree_limit"].get<double>() == doctest::Approx(2.25));

  const json f = to_json(*ext);
  CHECK(f["p"] == 2);
  CHECK(f["q"] == 16);
  CHECK(f["modulus"] == json::array({1, 0, 0, 1, 1}));
  CHECK(f["alpha"] == ext->alpha());

  const CorrelationReport r = max_correlation(fam);
  const json rj = to_json(r);
  CHECK(rj["delta_max"].get<double>() == doctest::Approx(r.delta_max));
  CHECK(rj["histogram"].size() == r.histogram.size());
  CHECK(rj["argmax"].size() == r.argmax.size());

  std::ostringstream csv;
  write_histogram_csv(csv, r);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "magnitude,count");
  std::uint64_t total = 0;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(line.substr(comma - 7, 1) == ".");
    total += std::stoull(line.substr(comma + 1));
    ++rows;
  }
  CHECK(rows == r.histogram.size());
  CHECK(total == r.values_scanned);

  const json cj = to_json(count_report(16, 2, 3));
  CHECK(cj["lambda_formula"] == 9);
  CHECK(cj["family_size"] == 16);
  CHECK(cj["consistent"] == true);
}

TEST_CASE("serialization is deterministic") {
  const auto ext = build_extension(build_field(2, 4), 2);
  const SequenceFamily a = build_family(*ext, 15, Policy::strict);
  const SequenceFamily b = build_family(*ext, 15, Policy::strict, 3);
  std::ostringstream sa, sb;
  write_family_payload(sa, a);
  write_family_payload(sb, b);
  CHECK(sa.str() == sb.str());
  CHECK(family_manifest(a).dump() == family_manifest(b).dump());
}
