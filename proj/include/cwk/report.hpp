#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cwk::report {

enum class Status { kPass, kFail, kSkipped };

struct CheckResult {
  std::string name;
  std::string expected;
  std::string got;
  Status status = Status::kSkipped;
};

// One run of one subcommand: parameters, free-form results, and known-answer
// checks. Re-running with the embedded seed reproduces the bytes.
struct RunReport {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<CheckResult> checks;

  void param(std::string key, std::string value);
  void result(std::string key, std::string value);
  void check(std::string name, std::string expected, std::string got);
  void check(std::string name, bool ok);
  void skip(std::string name, std::string reason);

  std::size_t fail_count() const;
  bool ok() const { return fail_count() == 0; }
  int exit_code() const { return ok() ? 0 : 1; }

  void print(std::ostream& os) const;
  std::string to_json() const;
};

}  // namespace cwk::report
