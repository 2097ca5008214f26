#include "spinorbit/report.hpp"

#include <sstream>

#include "json.hpp"

namespace spinorbit {

bool Report::check(const std::string& name, bool ok, const std::string& detail) {
  entries_.push_back({name, ok, false, detail});
  return ok;
}

void Report::note(const std::string& name, const std::string& value) {
  entries_.push_back({name, true, true, value});
}

void Report::merge(const Report& sub) {
  for (const auto& e : sub.entries_)
    entries_.push_back({sub.title_ + "/" + e.name, e.ok, e.informational, e.detail});
}

bool Report::all_ok() const {
  for (const auto& e : entries_)
    if (!e.informational && !e.ok) return false;
  return true;
}

int Report::checks_run() const {
  int n = 0;
  for (const auto& e : entries_)
    if (!e.informational) n++;
  return n;
}

int Report::checks_failed() const {
  int n = 0;
  for (const auto& e : entries_)
    if (!e.informational && !e.ok) n++;
  return n;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "== " << title_ << " ==\n";
  for (const auto& e : entries_) {
    if (e.informational) {
      os << "  info  " << e.name;
      if (!e.detail.empty()) os << ": " << e.detail;
      os << "\n";
    } else {
      os << "  " << (e.ok ? "ok    " : "FAIL  ") << e.name;
      if (!e.detail.empty()) os << ": " << e.detail;
      os << "\n";
    }
  }
  os << (all_ok() ? "all checks passed" : "CHECKS FAILED") << " ("
     << checks_run() - checks_failed() << "/" << checks_run() << ")\n";
  return os.str();
}

std::string Report::json_str() const {
  nlohmann::json j;
  j["title"] = title_;
  j["ok"] = all_ok();
  j["checks_run"] = checks_run();
  j["checks_failed"] = checks_failed();
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json je;
    je["name"] = e.name;
    if (e.informational) {
      je["kind"] = "info";
    } else {
      je["kind"] = "check";
      je["ok"] = e.ok;
    }
    if (!e.detail.empty()) je["detail"] = e.detail;
    j["entries"].push_back(je);
  }
  return j.dump(2) + "\n";
}

}  // namespace spinorbit
