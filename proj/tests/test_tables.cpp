#include <sstream>

#include "doctest.h"
#include "evalcode/tables.hpp"

using namespace evalcode;

namespace {

DistanceResult bounds(std::size_t lo, std::size_t hi) {
  DistanceResult d;
  d.lower = lo;
  d.upper = hi;
  d.exact = lo == hi;
  return d;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("cell comparison") {
  auto exact = CellValue::code(49, 8, bounds(28, 28));
  CHECK(compare_cell(exact, "[49,8,28]_7") == CellStatus::Match);
  CHECK(compare_cell(exact, "[49,8]_7") == CellStatus::Match);
  CHECK(compare_cell(exact, "[49,8,27]_7") == CellStatus::Mismatch);
  CHECK(compare_cell(exact, "[49,9,28]_7") == CellStatus::Mismatch);
  CHECK(compare_cell(exact, "") == CellStatus::Unprinted);

  auto loose = CellValue::code(48, 44, bounds(3, 5));
  CHECK(compare_cell(loose, "[48,44,4]_7") == CellStatus::Unresolved);
  CHECK(compare_cell(loose, "[48,44,6]_7") == CellStatus::Mismatch);

  auto q = CellValue::quantum(256, 28, 8, 0);
  CHECK(compare_cell(q, "[[256,28,8]]", true) == CellStatus::Match);
  CHECK(compare_cell(q, "[[256,28,10]]", true) == CellStatus::Gap);
  CHECK(compare_cell(q, "[[256,28,6]]", true) == CellStatus::Mismatch);
  CHECK(compare_cell(q, "[[256,28,10]]") == CellStatus::Unresolved);
  CHECK(compare_cell(q, "[[256,28,>=8]]") == CellStatus::Match);
  CHECK(q.render() == "[[256,28,>=8]]");

  auto r = CellValue::of_rate({35, 49});
  CHECK(compare_cell(r, "35/49") == CellStatus::Match);
  CHECK(compare_cell(r, "5/7") == CellStatus::Mismatch);

  CHECK(compare_cell(CellValue::count(4, 4), "4") == CellStatus::Match);
  CHECK(compare_cell(CellValue::count(3, 5), "4") == CellStatus::Unresolved);
  CHECK(compare_cell(CellValue::of_text("hold"), "hold") == CellStatus::Match);

  CHECK(CellValue::code(48, 44, bounds(3, 5)).render("_7") == "[48,44,3..5]_7");
  CHECK(CellValue::code(48, 4).render() == "[48,4]");
}

TEST_CASE("check report exit codes") {
  CheckReport r;
  CHECK(r.exit_code() == 0);
  r.misprints = 1;
  CHECK(r.exit_code() == 2);
  r.gaps = 1;
  CHECK(r.exit_code() == 2);
  r.unresolved = 1;
  CHECK(r.exit_code() == 1);
}

TEST_CASE("table of the affine plane over GF(7)") {
  Table t = make_table("I");
  REQUIRE(t.rows.size() == 10);
  // Bold s = 5.
  const auto& r = t.rows[1];
  CHECK(r.label == "5");
  CHECK(r.cells[0].value.render("_7") == "[49,3,42]_7");
  CHECK(r.cells[1].value.render("_7") == "[49,8,28]_7");
  CHECK(r.cells[4].value.k == 35);
  CHECK(r.cells[5].value.render() == "4");
  CHECK(r.cells[6].value.render() == "35/49");
  auto rep = check_table(t);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.diff.empty());
  CHECK(rep.matched == rep.cells);
}

TEST_CASE("every table reproduces its print up to the annotated misprints") {
  for (const auto& kind : {"I", "IV", "berman49", "rm_comparison", "VII", "II", "jcss-t"}) {
    CAPTURE(kind);
    Table t = make_table(kind);
    auto rep = check_table(t);
    CHECK(rep.mismatched == 0);
    CHECK(rep.unresolved == 0);
    for (const auto& row : t.rows)
      for (const auto& c : row.cells)
        if (!c.corrected.empty()) {
          CAPTURE(c.printed);
          CHECK(c.status == CellStatus::Misprint);
        }
  }
}

TEST_CASE("length-48 cyclic table") {
  Table t = make_table("cyclic48");
  REQUIRE(t.rows.size() == 27);
  auto rep = check_table(t);
  CHECK(rep.exit_code() == 2);
  CHECK(rep.misprints == 5);
  // Every bold distance of D^perp is certified exactly.
  for (const auto& r : t.rows) {
    const auto& v = r.cells[2].value;
    REQUIRE(v.lower);
    REQUIRE(v.upper);
    CHECK(*v.lower == *v.upper);
  }
}

TEST_CASE("berman comparison keeps its printed row") {
  Table t = make_table("berman49");
  REQUIRE(t.rows.size() == 3);
  for (const auto& c : t.rows[2].cells) CHECK(c.status == CellStatus::Literal);
  CHECK(t.rows[0].cells.back().value.render() == "42/49");
  CHECK(t.rows[1].cells.back().value.render() == "39/49");
}

TEST_CASE("csv and markdown output") {
  Table t = make_table("I");
  std::string csv = to_csv(t);
  CHECK(csv == to_csv(make_table("I")));
  CHECK(count_lines(csv) == 1 + t.rows.size());
  CHECK(csv.rfind("s,style,C,D,D^perp,C*D,(C*D)^perp,Privacy,R_PIR,check,note\r\n", 0) == 0);
  CHECK(csv.find("\"[49,8,28]_7\"") != std::string::npos);
  CHECK(csv.find(",35/49,") != std::string::npos);
  std::string md = to_markdown(t);
  CHECK(count_lines(md) == 2 + t.rows.size());
  CHECK(md.find("| 35/49 |") != std::string::npos);
  CHECK_THROWS(make_table("V"));
}
