#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "negmono/dataset.hpp"
#include "negmono/error.hpp"
#include "negmono/explorer.hpp"

using namespace negmono;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("negmono_test_" + name);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("sampling") {
  const auto one = sample_triples(2, 1, 5);
  const auto again = sample_triples(2, 1, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].triple == again[0].triple);
  CHECK(one[0].concurrence == again[0].concurrence);
  CHECK(one[0].seed == derive_seed(5, 0));
  CHECK(negativity_triple(haar_random_pure({2, 2, 2}, one[0].seed)) == one[0].triple);

  SampleOptions many_threads;
  many_threads.threads = 4;
  const auto a = sample_triples(2, 200, 9);
  const auto b = sample_triples(2, 200, 9, many_threads);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].triple == b[i].triple);
    CHECK(a[i].concurrence == b[i].concurrence);
  }

  const auto recs = sample_triples(2, 100000, 10);
  std::size_t near_plane = 0;
  for (const auto& r : recs) {
    CHECK(monogamy_residual(r.triple) >= -1e-10);
    REQUIRE(r.concurrence.has_value());
    CHECK(monogamy_residual(*r.concurrence) >= -1e-10);
    if (monogamy_residual(*r.concurrence) < 1e-3) ++near_plane;
    CHECK(classify_triple(r.triple) != Region::Outside);
  }
  CHECK(near_plane > 0);

  const auto qutrits = sample_triples(3, 3, 1);
  CHECK_FALSE(qutrits[0].concurrence.has_value());
  CHECK_THROWS_AS(sample_triples(2, 0, 1), Error);
}

TEST_CASE("region fill sweep") {
  for (double z_sq : {0.3, 8.0 / 9.0}) {
    const RegionSweep s = region_fill_sweep(z_sq, 9, 65);
    CHECK(s.endpoints_on_planes);
    CHECK(s.nested);
    CHECK(s.determinants_negative);
    CHECK(s.determinant_rel_error < 1e-8);
    CHECK(s.collapse_radius < 1e-9);
    REQUIRE(s.curves.size() == 9);
    CHECK(s.c_values.front() == 0.0);
    CHECK(s.c_values.back() == doctest::Approx(std::sqrt(1 - s.d * s.d)));

    // c = 0 reproduces the boundary module's curve.
    const BoundaryCurve ref = boundary_curve(z_sq, 65);
    CHECK(ref.d == s.d);
    for (std::size_t k = 0; k < 65; ++k) {
      CHECK(std::abs(s.curves[0].points[k][0] - ref.points[k][0]) < 1e-10);
      CHECK(std::abs(s.curves[0].points[k][1] - ref.points[k][1]) < 1e-10);
    }
    // All curves share the slice's cut negativity.
    for (std::size_t i = 0; i < s.curves.size(); ++i)
      for (const auto& pt : s.curves[i].points) CHECK(pt[0] + pt[1] <= z_sq + 1e-10);
  }
  CHECK_THROWS_WITH_AS(region_fill_sweep(1.5, 4), doctest::Contains("Unreachable"), Error);
  CHECK_THROWS_AS(region_fill_sweep(0.5, 1), Error);
}

TEST_CASE("perturbation search") {
  const auto bases = qubit_boundary_bases(3, 1);
  for (const auto& base : bases) {
    const SearchReport still = perturbation_search(base, 50, 0.0, 2);
    CHECK(still.max_excess <= 1e-9);
    CHECK(std::abs(still.base_excess) < 1e-9);
    const SearchReport moved = perturbation_search(base, 400, 1e-2, 3);
    CHECK(moved.max_excess <= 1e-7);
    CHECK(moved.max_excess >= moved.base_excess);
    CHECK(moved.final_step >= 1e-8);
    CHECK(moved.final_step <= 1e-2);
    REQUIRE(moved.at_state.has_value());
  }
  // Same seed, same report; thread count does not matter.
  const auto r1 = perturbation_search_many(bases, 100, 1e-2, 7, 1);
  const auto r2 = perturbation_search_many(bases, 100, 1e-2, 7, 3);
  for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1[i].max_excess == r2[i].max_excess);
  const SearchReport merged = merge_reports(r1);
  CHECK(merged.trials == 300);
  for (const auto& r : r1) CHECK(merged.max_excess >= r.max_excess);

  const auto q = qudit_boundary_bases(3, 1, 4);
  const SearchReport qr = perturbation_search(q[0], 100, 1e-2, 5);
  CHECK(qr.D == 3);
  CHECK(std::isfinite(qr.max_excess));

  CHECK_THROWS_AS(perturbation_search(AcinParams::normalized(0.3, 0.3, 0.3, 0.8), 10, 1e-2, 1), Error);
  CHECK_THROWS_AS(perturbation_search(bases[0], 10, -1.0, 1), Error);
}

TEST_CASE("dataset round trip") {
  const auto path = temp_path("empty.csv");
  emit_dataset({}, path, DatasetFormat::Csv);
  CHECK(read_file(path) == "source,seed,n_ac_sq,n_ab_sq,n_abc_sq\n");
  CHECK(read_dataset(path, DatasetFormat::Csv).empty());

  const auto recs = sample_triples(2, 3, 11);
  for (DatasetFormat f : {DatasetFormat::Csv, DatasetFormat::Json}) {
    const auto p = temp_path(f == DatasetFormat::Csv ? "three.csv" : "three.json");
    emit_dataset(recs, p, f);
    const auto back = read_dataset(p, f);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(back[i].triple == recs[i].triple);
      CHECK(back[i].concurrence == recs[i].concurrence);
      CHECK(back[i].seed == recs[i].seed);
      CHECK(back[i].source == recs[i].source);
    }
    std::filesystem::remove(p);
  }
  const auto csv = temp_path("lines.csv");
  emit_dataset(recs, csv, DatasetFormat::Csv);
  const std::string text = read_file(csv);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.rfind("source,seed,n_ac_sq,n_ab_sq,n_abc_sq,c_ac_sq,c_ab_sq,c_abc_sq\n", 0) == 0);

  const auto q = sample_triples(3, 2, 1);
  emit_dataset(q, csv, DatasetFormat::Csv);
  CHECK(read_dataset(csv, DatasetFormat::Csv).size() == 2);

  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK_THROWS_WITH_AS(emit_dataset(recs, "/nonexistent/dir/x.csv", DatasetFormat::Csv),
                       doctest::Contains("IoError"), Error);
  CHECK_THROWS_AS(read_dataset("/nonexistent/x.csv", DatasetFormat::Csv), Error);
  std::filesystem::remove(csv);
  std::filesystem::remove(path);

  Table t{{"x", "y"}, {{1.5, 2.0}, {0.1, -3.0}}};
  const auto tp = temp_path("table.csv");
  write_table_csv(t, tp);
  const Table back = read_table_csv(tp);
  CHECK(back.columns == t.columns);
  CHECK(back.rows == t.rows);
  std::filesystem::remove(tp);
}
