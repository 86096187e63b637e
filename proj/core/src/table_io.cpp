#include "semitop/table_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace semitop {

  namespace {
    std::string trim(std::string const& s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }

    // Commas inside brackets belong to the name: "(0,1),(1,0)" is two names.
    std::vector<std::string> split_names(std::string const& s) {
      std::vector<std::string> out;
      std::string              item;
      int                      depth = 0;
      for (char ch : s) {
        if (ch == ',' && depth == 0) {
          out.push_back(trim(item));
          item.clear();
          continue;
        }
        depth += (ch == '(' || ch == '[') ? 1 : (ch == ')' || ch == ']') ? -1 : 0;
        item += ch;
      }
      out.push_back(trim(item));
      return out;
    }
  }  // namespace

  FiniteSemigroup read_table_text(std::istream& in) {
    std::string line;
    std::string first;
    while (std::getline(in, line)) {
      first = trim(line);
      if (!first.empty()) {
        break;
      }
    }
    std::size_t order = 0;
    {
      std::istringstream ss(first);
      long long          n = 0;
      if (!(ss >> n) || n <= 0) {
        throw ShapeError("first line must be a positive order");
      }
      order = static_cast<std::size_t>(n);
    }
    std::vector<std::vector<std::int64_t>> table;
    std::vector<std::string>               names;
    while (std::getline(in, line)) {
      auto const t = trim(line);
      if (t.empty()) {
        continue;
      }
      if (t.front() == '#') {
        auto const body = trim(t.substr(1));
        if (body.rfind("names:", 0) == 0) {
          names = split_names(body.substr(6));
        }
        continue;
      }
      std::istringstream        ss(t);
      std::vector<std::int64_t> row;
      std::int64_t              v = 0;
      while (ss >> v) {
        row.push_back(v);
      }
      if (!ss.eof()) {
        throw ShapeError("non-numeric entry in table row " + std::to_string(table.size()));
      }
      table.push_back(std::move(row));
    }
    if (table.size() != order) {
      throw ShapeError("expected " + std::to_string(order) + " rows, found "
                       + std::to_string(table.size()));
    }
    return validate(table, std::move(names));
  }

  void write_table_text(std::ostream& out, FiniteSemigroup const& s) {
    out << s.order() << '\n';
    for (Element a = 0; a < s.order(); ++a) {
      auto r = s.row(a);
      for (std::size_t b = 0; b < r.size(); ++b) {
        out << (b == 0 ? "" : " ") << r[b];
      }
      out << '\n';
    }
    out << "# names: ";
    for (Element a = 0; a < s.order(); ++a) {
      out << (a == 0 ? "" : ",") << s.name(a);
    }
    out << '\n';
  }

  FiniteSemigroup read_table_json(nlohmann::json const& doc) {
    if (!doc.is_object() || !doc.contains("table")) {
      throw ShapeError("JSON table document needs a \"table\" field");
    }
    std::vector<std::vector<std::int64_t>> table;
    try {
      table = doc.at("table").get<std::vector<std::vector<std::int64_t>>>();
    } catch (nlohmann::json::exception const& e) {
      throw ShapeError(std::string("malformed \"table\": ") + e.what());
    }
    if (doc.contains("order") && doc.at("order").get<std::size_t>() != table.size()) {
      throw ShapeError("\"order\" disagrees with the number of table rows");
    }
    std::vector<std::string> names;
    if (doc.contains("names")) {
      names = doc.at("names").get<std::vector<std::string>>();
    }
    return validate(table, std::move(names));
  }

  nlohmann::json table_to_json(FiniteSemigroup const& s) {
    return nlohmann::json{{"order", s.order()}, {"table", s.table()}, {"names", s.names()}};
  }

  FiniteSemigroup load_table(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path.string());
    }
    if (path.extension() == ".json") {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (nlohmann::json::parse_error const& e) {
        throw ShapeError(std::string("invalid JSON: ") + e.what());
      }
      return read_table_json(doc);
    }
    return read_table_text(in);
  }

}  // namespace semitop
