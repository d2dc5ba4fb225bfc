#include <doctest.h>

#include <sstream>

#include "hypermono/error.hpp"
#include "hypermono/reports.hpp"
#include "reference_values.hpp"

using namespace hypermono;

TEST_CASE("reduced table matches the published grid") {
  const CountTable table = make_table(TableKind::kReduced, 12);
  REQUIRE(table.rows.size() == 10);
  REQUIRE(table.columns.size() == 6);
  const auto& expected = reference::reduced_table();
  for (std::size_t r = 0; r < 10; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      CAPTURE(table.rows[r]);
      CAPTURE(table.columns[c]);
      REQUIRE(table.cells[r][c].has_value() == expected[r][c].has_value());
      if (expected[r][c]) CHECK(*table.cells[r][c] == *expected[r][c]);
    }
  }
}

TEST_CASE("reduced table text layout") {
  const std::string text = format_table(make_table(TableKind::kReduced, 12), TableFormat::kText);
  CHECK(text.find("   11 | 604800        0 604428       0 5445") != std::string::npos);
  const std::string small = format_table(make_table(TableKind::kReduced, 4), TableFormat::kCsv);
  CHECK(small == "n,k=1,k=2\n3,1,\n4,0,1\n");
}

TEST_CASE("hultman table") {
  CHECK(format_table(make_table(TableKind::kHultman, 3), TableFormat::kCsv) == "n,k=1,k=2,k=3\n1,1,,\n2,0,1,\n3,1,0,1\n");
  const std::string text = format_table(make_table(TableKind::kHultman, 3), TableFormat::kText);
  CHECK(text == "H n\\k | 1 2 3\n    1 | 1\n    2 | 0 1\n    3 | 1 0 1\n");
  CHECK_THROWS_AS(make_table(TableKind::kHultman, 0), Error);
  CHECK(make_table(TableKind::kReduced, 2).rows.empty());
}

TEST_CASE("b-files") {
  std::ostringstream u;
  for (std::size_t g = 1; g <= 10; ++g) u << g << ' ' << reference::u_values()[g - 1] << '\n';
  CHECK(oeis_bfile(SequenceKind::kU, 10) == u.str());
  CHECK(oeis_bfile(SequenceKind::kHultmanFlat, 6) == "0 1\n1 0\n2 1\n3 1\n4 0\n5 1\n");
  CHECK(oeis_bfile(SequenceKind::kReducedFlat, 5) == "1 1\n2 0\n3 1\n4 8\n5 0\n");
  CHECK(oeis_bfile(SequenceKind::kU, 0).empty());
}

TEST_CASE("verify") {
  const VerifyReport report = verify_all(4, {});
  CHECK(report.ok());
  CHECK(report.to_text().find("all checks passed") != std::string::npos);
  for (std::size_t m = 1; m <= 6; ++m) CHECK_FALSE(model_cross_check(m).has_value());
}
