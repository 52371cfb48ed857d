#include "cspoly/report.hpp"

#include <sstream>

#include "cspoly/errors.hpp"

namespace cspoly {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skipped") return CheckStatus::skipped;
  throw ParseError("unknown check status '" + s + "'");
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title;
  j["verdict"] = passed() ? "pass" : "fail";
  j["version"] = version;
  j["input_checksums"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : input_checksums) j["input_checksums"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["elapsed_ms"] = c.elapsed_ms;
    e["frame_dependent"] = c.frame_dependent;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::ordered_json& j) {
  try {
    VerificationReport r;
    r.title = j.at("title").get<std::string>();
    r.version = j.at("version").get<std::string>();
    for (const auto& [k, v] : j.at("input_checksums").items()) r.input_checksums.emplace_back(k, v.get<std::string>());
    for (const auto& e : j.at("checks")) {
      Check c;
      c.name = e.at("name").get<std::string>();
      c.status = check_status_from_string(e.at("status").get<std::string>());
      c.expected = e.at("expected").get<std::string>();
      c.actual = e.at("actual").get<std::string>();
      c.elapsed_ms = e.at("elapsed_ms").get<double>();
      c.frame_dependent = e.at("frame_dependent").get<bool>();
      r.checks.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string VerificationReport::to_text() const {
  std::ostringstream s;
  s << title << " (toolkit " << version << ")\n";
  for (const auto& [k, v] : input_checksums) s << "  input " << k << ": " << v << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    std::string status = to_string(c.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    s << "  [" << status << "]" << std::string(8 - status.size(), ' ') << c.name << std::string(width - c.name.size() + 2, ' ')
      << c.actual;
    if (c.status == CheckStatus::fail) s << "  (expected " << c.expected << ")";
    s << "\n";
  }
  s << "verdict: " << (passed() ? "PASS" : "FAIL") << "\n";
  return s.str();
}

bool same_outcome(const VerificationReport& a, const VerificationReport& b, std::string* first_difference) {
  auto relevant = [](const VerificationReport& r) {
    std::vector<const Check*> out;
    for (const auto& c : r.checks)
      if (!c.frame_dependent) out.push_back(&c);
    return out;
  };
  auto ca = relevant(a), cb = relevant(b);
  auto note = [&](const std::string& msg) {
    if (first_difference) *first_difference = msg;
    return false;
  };
  if (ca.size() != cb.size()) return note("different number of checks");
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i]->name != cb[i]->name) return note("check " + std::to_string(i) + ": " + ca[i]->name + " vs " + cb[i]->name);
    if (ca[i]->status != cb[i]->status) return note(ca[i]->name + ": status differs");
    if (ca[i]->actual != cb[i]->actual) return note(ca[i]->name + ": '" + ca[i]->actual + "' vs '" + cb[i]->actual + "'");
  }
  return true;
}

bool ReportBuilder::run(const std::string& name, const std::string& expected, const Body& body, bool frame_dependent) {
  Check c;
  c.name = name;
  c.expected = expected;
  c.frame_dependent = frame_dependent;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [ok, actual] = body();
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    c.actual = std::move(actual);
  } catch (const std::exception& e) {
    c.status = CheckStatus::fail;
    c.actual = std::string("error: ") + e.what();
  }
  c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool ok = c.status == CheckStatus::pass;
  report_.checks.push_back(std::move(c));
  return ok;
}

void ReportBuilder::skip(const std::string& name, const std::string& expected, const std::string& reason, bool frame_dependent) {
  Check c;
  c.name = name;
  c.expected = expected;
  c.actual = reason;
  c.status = CheckStatus::skipped;
  c.frame_dependent = frame_dependent;
  report_.checks.push_back(std::move(c));
}

}  // namespace cspoly
