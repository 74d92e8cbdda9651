#pragma once

#include <string>
#include <vector>

namespace evalcode::fixtures {

// Printed table data, verbatim. An empty string is a blank cell.
struct Row {
  std::string label;
  std::string style;  // "shaded", "bold" or ""
  std::vector<std::string> cells;
};

// A suspected misprint: the value the computation should produce instead.
struct Annotation {
  std::size_t row, column;
  std::string corrected;
  std::string note;
};

struct Fixture {
  std::string label_column;
  std::vector<std::string> columns;
  std::vector<Row> rows;
  std::vector<Annotation> annotations;
};

const Fixture& get(const std::string& kind);

}  // namespace evalcode::fixtures
