#pragma once

// Reading and writing multiplication tables.
//
// Text format:
//
//   3
//   0 1 2
//   1 2 0
//   2 0 1
//   # names: e,a,b
//
// The first line is the order n, the next n lines hold n space-separated
// 0-based product indices, and the optional trailing names line carries
// comma-separated labels.  The JSON form is {"order": n, "table": [[...]],
// "names": [...]} with "names" optional.

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "semitop/semigroup.hpp"

namespace semitop {

  FiniteSemigroup read_table_text(std::istream& in);
  void            write_table_text(std::ostream& out, FiniteSemigroup const& s);

  FiniteSemigroup read_table_json(nlohmann::json const& doc);
  nlohmann::json  table_to_json(FiniteSemigroup const& s);

  // Dispatches on the extension: ".json" is parsed as JSON, anything else as
  // the text format.
  FiniteSemigroup load_table(std::filesystem::path const& path);

}  // namespace semitop
