#pragma once

// Named checks with expected and actual values, rendered as text or JSON.

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cspoly {

inline constexpr const char* kToolkitVersion = "1.0.0";

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string expected;
  std::string actual;
  double elapsed_ms = 0;
  /// Depends on the coordinate frame rather than on the combinatorics.
  bool frame_dependent = false;

  bool operator==(const Check&) const = default;
};

struct VerificationReport {
  std::string title;
  std::vector<Check> checks;
  std::string version = kToolkitVersion;
  std::vector<std::pair<std::string, std::string>> input_checksums;

  /// Pass iff every non-skipped check passes.
  bool passed() const;
  const Check* find(const std::string& name) const;

  nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);
  std::string to_text() const;

  bool operator==(const VerificationReport&) const = default;
};

/// Same checks with the same statuses and actual values, ignoring timings,
/// checksums and frame-dependent checks.
bool same_outcome(const VerificationReport& a, const VerificationReport& b, std::string* first_difference = nullptr);

/// Runs checks in order. A check body returns (passed, actual); exceptions
/// become failures carrying the message.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string title) { report_.title = std::move(title); }

  using Body = std::function<std::pair<bool, std::string>()>;

  bool run(const std::string& name, const std::string& expected, const Body& body, bool frame_dependent = false);
  void skip(const std::string& name, const std::string& expected, const std::string& reason, bool frame_dependent = false);
  void checksum(const std::string& input, const std::string& value) { report_.input_checksums.emplace_back(input, value); }

  VerificationReport finish() { return std::move(report_); }

 private:
  VerificationReport report_;
};

}  // namespace cspoly
