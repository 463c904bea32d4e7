#include <filesystem>

#include "doctest.h"
#include "sphrhs/io.hpp"
#include "sphrhs/rhs_diagnostics.hpp"
#include "sphrhs/sphere_transform.hpp"

using namespace sphrhs;

namespace {

std::string coefficient_doc(const std::string& records, int lmax = 1) {
  return "{\"lmax\": " + std::to_string(lmax) +
         ", \"basis\": \"sqrt(l+1/2)Y\", \"coefficients\": [" + records + "]}";
}

const char* kFullL1 =
    "{\"l\":0,\"m\":0,\"re\":1,\"im\":0},{\"l\":1,\"m\":-1,\"re\":0,\"im\":0},"
    "{\"l\":1,\"m\":0,\"re\":0,\"im\":2.5},{\"l\":1,\"m\":1,\"re\":0,\"im\":0}";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("coefficient document round trip is exact and canonical") {
  auto rng = trial_rng(1, 1);
  const HarmonicExpansion f = random_test_function(rng, 7, 0.0);
  const std::string text = io::format_coefficients(f);
  const HarmonicExpansion g = io::parse_coefficients(text);
  CHECK(max_abs_difference(f, g) == 0.0);
  CHECK(io::format_coefficients(g) == text);
  CHECK(text.find("\"l\":0,\"m\":0") < text.find("\"l\":1,\"m\":-1"));
}

TEST_CASE("coefficient records may come in any order") {
  const HarmonicExpansion f = io::parse_coefficients(coefficient_doc(kFullL1));
  CHECK(f(1, 0) == complex(0, 2.5));
  const std::string shuffled =
      "{\"l\":1,\"m\":1,\"re\":0,\"im\":0},{\"l\":1,\"m\":0,\"re\":0,\"im\":2.5},"
      "{\"l\":0,\"m\":0,\"re\":1,\"im\":0},{\"l\":1,\"m\":-1,\"re\":0,\"im\":0}";
  CHECK(max_abs_difference(io::parse_coefficients(coefficient_doc(shuffled)), f) == 0.0);
}

TEST_CASE("malformed coefficient documents") {
  using io::FormatError;
  CHECK_THROWS_AS(io::parse_coefficients("not json"), FormatError);
  CHECK_THROWS_AS(io::parse_coefficients("[]"), FormatError);
  CHECK_THROWS_AS(io::parse_coefficients(coefficient_doc(kFullL1, -1)), FormatError);
  // missing (1,1)
  CHECK_THROWS_WITH_AS(io::parse_coefficients(coefficient_doc(
                           "{\"l\":0,\"m\":0,\"re\":1,\"im\":0},{\"l\":1,\"m\":-1,\"re\":0,\"im\":0},"
                           "{\"l\":1,\"m\":0,\"re\":0,\"im\":2.5}")),
                       doctest::Contains("missing entry for (1,1)"), FormatError);
  // duplicate
  CHECK_THROWS_WITH_AS(io::parse_coefficients(coefficient_doc(std::string(kFullL1) +
                                                              ",{\"l\":1,\"m\":0,\"re\":0,\"im\":0}")),
                       doctest::Contains("duplicate"), FormatError);
  // outside the triangle
  CHECK_THROWS_AS(io::parse_coefficients(coefficient_doc(std::string(kFullL1) +
                                                         ",{\"l\":1,\"m\":2,\"re\":0,\"im\":0}")),
                  FormatError);
  // wrong basis tag
  CHECK_THROWS_AS(io::parse_coefficients("{\"lmax\":0,\"basis\":\"Y\",\"coefficients\":"
                                         "[{\"l\":0,\"m\":0,\"re\":1,\"im\":0}]}"),
                  FormatError);
  // non-numeric value
  CHECK_THROWS_AS(io::parse_coefficients(coefficient_doc(
                      "{\"l\":0,\"m\":0,\"re\":\"x\",\"im\":0}", 0)),
                  FormatError);
}

TEST_CASE("field document round trip") {
  auto rng = trial_rng(2, 2);
  const HarmonicExpansion f = random_test_function(rng, 5, 0.0);
  const SampledField s = synthesize(f, make_grid(5));
  const std::string text = io::format_field(s);
  const SampledField t = io::parse_field(text);
  CHECK(t.grid.lmax == 5);
  CHECK(t.samples == s.samples);
  CHECK(io::format_field(t) == text);
}

TEST_CASE("malformed field documents name the line") {
  const std::string good = io::format_field(synthesize(HarmonicExpansion::basis({1, 0}), make_grid(1)));
  // header lines 1..5, first data row on line 6
  std::string bad = good;
  const auto row = bad.find('\n', bad.find("# columns")) + 1;
  bad.replace(row, bad.find('\n', row) - row, "1.0,abc,0,0");
  CHECK_THROWS_WITH_AS(io::parse_field(bad), doctest::Contains("line 6"), io::FormatError);

  std::string short_row = good;
  short_row.replace(row, short_row.find('\n', row) - row, "1.0,2.0,3.0");
  CHECK_THROWS_WITH_AS(io::parse_field(short_row), doctest::Contains("line 6"), io::FormatError);

  CHECK_THROWS_AS(io::parse_field("0,0,1,0\n"), io::FormatError);

  // a row dropped
  std::string missing = good.substr(0, good.rfind('\n', good.size() - 2) + 1);
  CHECK_THROWS_AS(io::parse_field(missing), io::ConsistencyError);

  // a node moved off the grid
  std::string moved = good;
  moved.replace(row, moved.find(',', row) - row, "1.5");
  CHECK_THROWS_WITH_AS(io::parse_field(moved), doctest::Contains("line 6"), io::ConsistencyError);

  // header disagrees with the grid
  std::string header = good;
  header.replace(header.find("n_phi=4"), 7, "n_phi=5");
  CHECK_THROWS_AS(io::parse_field(header), io::ConsistencyError);
}

TEST_CASE("report document") {
  BoundReport r = make_report("x", "a <= b", 1.0, 2.0, 0.0);
  r.seed = 7;
  BoundReport s;
  s.check = "scan";
  s.informational = true;
  s.columns = {"n", "v"};
  s.table = {{0, 1.5}};
  const std::string text = io::format_reports({r, s});
  CHECK(text.find("\"check\": \"x\"") != std::string::npos);
  CHECK(text.find("\"margin\": 1.0") != std::string::npos);
  CHECK(text.find("\"seed\": 7") != std::string::npos);
  CHECK(text.find("\"informational\": true") != std::string::npos);
  CHECK(text.find("\"columns\"") != std::string::npos);
  CHECK(text.find("\"check\": \"x\"") < text.find("\"check\": \"scan\""));
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(io::read_coefficients("/nonexistent/dir/f.json"), io::IoError);
  CHECK_THROWS_AS(io::write_text("/nonexistent/dir/f.json", "x"), io::IoError);
  const auto path = std::filesystem::temp_directory_path() / "sphrhs_io_test.json";
  io::write_coefficients(path, HarmonicExpansion::basis({2, 1}));
  CHECK(io::read_coefficients(path)(2, 1) == complex(1.0));
  std::filesystem::remove(path);
}

}  // TEST_SUITE
