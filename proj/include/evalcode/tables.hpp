#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evalcode/linear_code.hpp"
#include "evalcode/pir.hpp"

namespace evalcode {

/// Computed content of a table cell.
struct CellValue {
  enum class Kind { Empty, Code, Quantum, Rate, Count, Text };
  Kind kind = Kind::Empty;
  std::size_t n = 0, k = 0;
  // Distance bounds of a code, or bounds on a count such as a privacy level.
  std::optional<std::size_t> lower, upper;
  Rate rate;
  std::string text;

  static CellValue code(const LinearCode& c, const std::optional<DistanceResult>& d = std::nullopt);
  static CellValue code(std::size_t n, std::size_t k, const std::optional<DistanceResult>& d = std::nullopt);
  static CellValue quantum(std::size_t n, std::size_t k, std::size_t d_lower, std::size_t d_upper);
  static CellValue of_rate(Rate r);
  static CellValue count(std::size_t lower, std::size_t upper);
  static CellValue of_text(std::string t);

  /// Codes print as "[n,k,d]", "[n,k,lo..hi]" or "[n,k]", followed by the
  /// suffix (such as "_7").
  std::string render(const std::string& suffix = "") const;
};

enum class CellStatus {
  Unprinted,   // nothing printed to compare with
  Match,
  Literal,     // the value is itself a printed fixture, not computed
  Misprint,    // differs from the print, agrees with the annotated correction
  Gap,         // a printed distance sits above the certified lower bound
  Unresolved,  // a printed distance lies inside uncertified bounds
  Mismatch,
};
std::string to_string(CellStatus s);

struct TableCell {
  CellValue value;
  std::string printed;
  std::string corrected;
  std::string note;
  CellStatus status = CellStatus::Unprinted;
};

struct TableRow {
  std::string label;
  std::string style;
  std::vector<TableCell> cells;
  std::string note;
};

struct Table {
  std::string kind;
  std::string suffix;  // field subscript used when rendering codes
  std::string label_column;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

/// I, II, cyclic48, IV, berman49, rm_comparison, VII, jcss-t.
const std::vector<std::string>& table_kinds();

/// Computes every row and compares it with the printed fixture. Throws
/// std::invalid_argument for an unknown kind.
Table make_table(const std::string& kind, const SearchBudget& budget = SearchBudget::from_env());

/// Status of a computed value against a printed string. Distances are matched
/// exactly unless `lower_bound_only`, where a certified lower bound equal to
/// the print matches and a smaller one is a gap.
CellStatus compare_cell(const CellValue& v, const std::string& printed, bool lower_bound_only = false);

std::string to_csv(const Table& t);
std::string to_markdown(const Table& t);

struct CheckReport {
  std::size_t cells = 0, matched = 0, literal = 0, misprints = 0, gaps = 0, unresolved = 0, mismatched = 0;
  std::string diff;  // one line per cell that is not a plain match
  /// 0 when every printed cell matches, 2 when the only differences are
  /// annotated misprints or certification gaps, 1 otherwise.
  int exit_code() const;
};
CheckReport check_table(const Table& t);

}  // namespace evalcode
