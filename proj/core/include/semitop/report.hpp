#pragma once

// Value types recording the outcome of numerical checks, with a JSON form
// that round-trips exactly.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace semitop {

  struct CheckReport {
    std::string    claim;
    nlohmann::json parameters = nlohmann::json::object();
    std::string    expected;
    std::string    computed;
    bool           passed  = false;
    double         elapsed = 0.0;  // seconds

    nlohmann::json     to_json() const;
    static CheckReport from_json(nlohmann::json const& doc);

    // "PASS  claim [params]: computed (expected ...)"
    std::string to_text() const;
  };

  struct SuiteReport {
    std::string              suite;
    nlohmann::json           parameters = nlohmann::json::object();
    std::vector<CheckReport> checks;

    bool passed() const noexcept;
    void append(std::vector<CheckReport> more);

    nlohmann::json     to_json() const;
    static SuiteReport from_json(nlohmann::json const& doc);
  };

}  // namespace semitop
