#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "rsspredict/error.hpp"
#include "rsspredict/ingest.hpp"

using namespace rsspredict;

namespace {

SpectrumMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

Errc parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected parse failure");
  return Errc::IoError;
}

SpectrumMatrix column(std::vector<double> values) {
  SpectrumMatrix m;
  m.bands.push_back({614.1e6, 200e3, "614.1", std::nullopt});
  for (double v : values) m.rows.push_back({v});
  return m;
}

}  // namespace

TEST_CASE("load_matrix parses a well-formed 3-band file") {
  const auto m = parse("614.1,614.3,614.5\n-110,-111,-112\n-100,-101,-102\n-90,-91,-92\n-80,-81,-82\n");
  CHECK(m.num_slots() == 4);
  CHECK(m.num_bands() == 3);
  CHECK(m.rows[1][2] == -102.0);
  CHECK(m.bands[0].label == "614.1");
}

TEST_CASE("header frequencies convert from MHz to Hz") {
  const auto m = parse("614.1,614.3\n-110,-110\n");
  CHECK(m.bands[0].center_freq_hz == 614100000.0);
  CHECK(m.bands[1].center_freq_hz == 614300000.0);
  CHECK(m.bands[0].bandwidth_hz == 200e3);
}

TEST_CASE("comments, blank lines and CRLF are accepted") {
  const auto m = parse("# campaign export\r\n614.1,614.3\r\n\r\n# slot 0\r\n-110,-111\r\n-112,-113\r\n");
  CHECK(m.num_slots() == 2);
  CHECK(m.rows[1][1] == -113.0);
}

TEST_CASE("malformed input is rejected with a located error") {
  CHECK(parse_error("614.1,614.3,614.5\n-110,-111\n") == Errc::RaggedRow);
  CHECK(parse_error("614.1,614.3\n-110,abc\n") == Errc::ParseError);
  CHECK(parse_error("614.1,614.3\n-110,1,000\n") == Errc::RaggedRow);
  CHECK(parse_error("614.1,abc\n-110,-110\n") == Errc::ParseError);
  CHECK(parse_error("614.1,614.3\n-110,nan\n") == Errc::NonFiniteValue);
  CHECK(parse_error("614.1,614.3\n-110,-inf\n") == Errc::NonFiniteValue);
  CHECK(parse_error("") == Errc::EmptyTrace);
  CHECK(parse_error("614.1\n") == Errc::EmptyTrace);

  try {
    parse("614.1,614.3\n-110,-110\n-110\n");
  } catch (const Error& e) {
    REQUIRE(e.line());
    CHECK(*e.line() == 3);
  }
}

TEST_CASE("write_matrix output parses back to the same matrix") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> psd(-110.0, 4.0);
  SpectrumMatrix m;
  for (int b = 0; b < 4; ++b) m.bands.push_back({(614.1 + 0.2 * b) * 1e6, 200e3, "", std::nullopt});
  for (int t = 0; t < 50; ++t) {
    m.rows.emplace_back();
    for (int b = 0; b < 4; ++b) m.rows.back().push_back(psd(rng));
  }
  std::ostringstream out;
  write_matrix(out, m);
  const auto back = parse(out.str());
  CHECK(back.rows == m.rows);
  for (int b = 0; b < 4; ++b) CHECK(back.bands[b].center_freq_hz == m.bands[b].center_freq_hz);
}

TEST_CASE("block_average with block 1 is the identity on rows") {
  const auto m = column({-100.0, -110.0, -95.5});
  const auto out = block_average(m, 1);
  CHECK(out.rows == m.rows);
  CHECK(out.sample_interval_s == m.sample_interval_s);
}

TEST_CASE("block_average averages in linear power") {
  CHECK(block_average(column({-110.0, -110.0}), 2).rows[0][0] == doctest::Approx(-110.0).epsilon(1e-12));
  // 10 log10((1e-10 + 1e-11) / 2) evaluated independently.
  const double expected = -102.59637310505755;
  const auto out = block_average(column({-100.0, -110.0}), 2);
  CHECK(std::abs(out.rows[0][0] - expected) < 1e-9);
  CHECK(out.sample_interval_s == 2 * kDefaultSampleIntervalS);
  CHECK(block_average(column({-100.0, -110.0}), 2, AveragingDomain::Decibel).rows[0][0] == -105.0);
}

TEST_CASE("block_average drops the trailing partial block") {
  const auto out = block_average(column({-100, -100, -110, -110, -50}), 2);
  REQUIRE(out.num_slots() == 2);
  CHECK(out.rows[1][0] == doctest::Approx(-110.0));
}

TEST_CASE("block_average of constant blocks round-trips to 1e-9 dB") {
  for (double level : {-130.0, -114.0, -107.3, -60.25}) {
    const auto out = block_average(column(std::vector<double>(1000, level)), 1000);
    CHECK(std::abs(out.rows[0][0] - level) < 1e-9);
  }
}

TEST_CASE("block_average errors") {
  try {
    block_average(column({-100, -100}), 3);
    FAIL("expected BlockLargerThanTrace");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BlockLargerThanTrace);
  }
  CHECK_THROWS_AS(block_average(column({-100}), 0), Error);
}

TEST_CASE("duty_cycle counts strict exceedances") {
  CHECK(duty_cycle(column({-120, -120, -120}), -114).per_band[0].second == 0.0);
  CHECK(duty_cycle(column({-90, -90}), -107).per_band[0].second == 1.0);
  CHECK(duty_cycle(column({-100, -110, -100, -120}), -107).per_band[0].second == 0.5);
  // Exactly at threshold counts as idle.
  CHECK(duty_cycle(column({-107, -107}), -107).per_band[0].second == 0.0);
  CHECK_THROWS_AS(duty_cycle(SpectrumMatrix{}, -107), Error);
}

TEST_CASE("duty_cycle is non-increasing in the threshold") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> psd(-110.0, 6.0);
  SpectrumMatrix m;
  for (int b = 0; b < 8; ++b) m.bands.push_back({(600.0 + b) * 1e6, 200e3, "", std::nullopt});
  for (int t = 0; t < 500; ++t) {
    m.rows.emplace_back();
    for (int b = 0; b < 8; ++b) m.rows.back().push_back(std::round(psd(rng)));
  }
  std::uniform_real_distribution<double> thr(-130, -90);
  for (int trial = 0; trial < 100; ++trial) {
    double t1 = thr(rng), t2 = thr(rng);
    if (t1 > t2) std::swap(t1, t2);
    const auto lo = duty_cycle(m, t1);
    const auto hi = duty_cycle(m, t2);
    for (int b = 0; b < 8; ++b) CHECK(lo.per_band[b].second >= hi.per_band[b].second);
  }
}

TEST_CASE("band_trace extracts a column") {
  const auto m = parse("614.1,614.3\n-110,-111\n-112,-113\n");
  const auto t = band_trace(m, 1);
  CHECK(t.samples == std::vector<double>{-111, -113});
  CHECK(t.band.center_freq_hz == 614.3e6);
}

TEST_CASE("service maps assign bands by inclusive MHz range") {
  const auto services = parse_service_map(R"({"TV": [614, 698], "ISM": [2400.1, 2483.3]})");
  CHECK(lookup_service(services, 614.0) == "TV");
  CHECK(lookup_service(services, 698.0) == "TV");
  CHECK(lookup_service(services, 2450.0) == "ISM");
  CHECK_FALSE(lookup_service(services, 1800.0));

  std::vector<BandMetadata> bands{{614.1e6, 200e3, "", std::nullopt}, {1e9, 200e3, "", std::nullopt}};
  assign_services(bands, services);
  CHECK(bands[0].service == "TV");
  CHECK_FALSE(bands[1].service);

  CHECK_THROWS_AS(parse_service_map(R"({"TV": [698, 614]})"), Error);
  CHECK_THROWS_AS(parse_service_map(R"({"TV": 614})"), Error);
  CHECK_THROWS_AS(parse_service_map("not json"), Error);
}
