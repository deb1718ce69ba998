#include "cwk/report.hpp"

#include <json.hpp>
#include <ostream>

namespace cwk::report {

void RunReport::param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
}

void RunReport::result(std::string key, std::string value) {
  results.emplace_back(std::move(key), std::move(value));
}

void RunReport::check(std::string name, std::string expected, std::string got) {
  Status status = expected == got ? Status::kPass : Status::kFail;
  checks.push_back({std::move(name), std::move(expected), std::move(got), status});
}

void RunReport::check(std::string name, bool ok) {
  checks.push_back({std::move(name), "true", ok ? "true" : "false",
                    ok ? Status::kPass : Status::kFail});
}

void RunReport::skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), std::move(reason), "", Status::kSkipped});
}

std::size_t RunReport::fail_count() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == Status::kFail) ++n;
  return n;
}

void RunReport::print(std::ostream& os) const {
  os << "== " << subcommand << " ==\n";
  for (const auto& [k, v] : params) os << "  param " << k << " = " << v << "\n";
  for (const auto& [k, v] : results) os << "  " << k << " = " << v << "\n";
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::kPass:
        os << "  [PASS] " << c.name << " = " << c.got << "\n";
        break;
      case Status::kFail:
        os << "  [FAIL] " << c.name << ": expected " << c.expected << ", got " << c.got << "\n";
        break;
      case Status::kSkipped:
        os << "  [SKIP] " << c.name << " (" << c.expected << ")\n";
        break;
    }
  }
  std::size_t fails = fail_count();
  os << (fails == 0 ? "all checks passed" : "FAILURES: " + std::to_string(fails)) << "\n";
}

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  for (const auto& [k, v] : params) j["params"][k] = v;
  for (const auto& [k, v] : results) j["results"][k] = v;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["status"] =
        c.status == Status::kPass ? "pass" : (c.status == Status::kFail ? "fail" : "skipped");
    if (c.status != Status::kSkipped) {
      jc["expected"] = c.expected;
      jc["got"] = c.got;
    } else {
      jc["reason"] = c.expected;
    }
    j["checks"].push_back(jc);
  }
  j["ok"] = ok();
  return j.dump(2);
}

}  // namespace cwk::report
