#include <algorithm>
#include <cstdio>

#include "semitop/errors.hpp"
#include "semitop/report.hpp"

namespace semitop {

  nlohmann::json CheckReport::to_json() const {
    return nlohmann::json{{"claim", claim},
                          {"parameters", parameters},
                          {"expected", expected},
                          {"computed", computed},
                          {"verdict", passed ? "pass" : "fail"},
                          {"elapsed", elapsed}};
  }

  CheckReport CheckReport::from_json(nlohmann::json const& doc) {
    try {
      CheckReport r;
      r.claim      = doc.at("claim").get<std::string>();
      r.parameters = doc.at("parameters");
      r.expected   = doc.at("expected").get<std::string>();
      r.computed   = doc.at("computed").get<std::string>();
      auto verdict = doc.at("verdict").get<std::string>();
      if (verdict != "pass" && verdict != "fail") {
        throw Error("verdict must be \"pass\" or \"fail\", got \"" + verdict + "\"");
      }
      r.passed  = verdict == "pass";
      r.elapsed = doc.at("elapsed").get<double>();
      return r;
    } catch (nlohmann::json::exception const& e) {
      throw Error(std::string("malformed check report: ") + e.what());
    }
  }

  std::string CheckReport::to_text() const {
    std::string out = passed ? "PASS  " : "FAIL  ";
    out += claim;
    if (!parameters.empty()) {
      out += " " + parameters.dump();
    }
    out += ": " + computed;
    if (!passed) {
      out += " (expected " + expected + ")";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "  [%.3fs]", elapsed);
    return out + buf;
  }

  bool SuiteReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) {
      return c.passed;
    });
  }

  void SuiteReport::append(std::vector<CheckReport> more) {
    for (auto& c : more) {
      checks.push_back(std::move(c));
    }
  }

  nlohmann::json SuiteReport::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (auto const& c : checks) {
      list.push_back(c.to_json());
    }
    return nlohmann::json{{"suite", suite},
                          {"parameters", parameters},
                          {"checks", list},
                          {"verdict", passed() ? "pass" : "fail"}};
  }

  SuiteReport SuiteReport::from_json(nlohmann::json const& doc) {
    try {
      SuiteReport r;
      r.suite      = doc.at("suite").get<std::string>();
      r.parameters = doc.at("parameters");
      for (auto const& c : doc.at("checks")) {
        r.checks.push_back(CheckReport::from_json(c));
      }
      return r;
    } catch (nlohmann::json::exception const& e) {
      throw Error(std::string("malformed suite report: ") + e.what());
    }
  }

}  // namespace semitop
