// Check reporting: named pass/fail entries plus informational notes,
// rendered as aligned text and mirrored as JSON for the --json flag.
#pragma once

#include <string>
#include <vector>

namespace spinorbit {

class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  // Records a named check.  Returns ok so call sites can chain.
  bool check(const std::string& name, bool ok, const std::string& detail = "");
  // Informational line (always "ok", never affects the verdict).
  void note(const std::string& name, const std::string& value);
  // Absorb a sub-report's entries under "<sub title>/" prefixes.
  void merge(const Report& sub);

  bool all_ok() const;
  int checks_run() const;
  int checks_failed() const;
  const std::string& title() const { return title_; }

  std::string text() const;
  std::string json_str() const;  // pretty-printed JSON mirror of text()

 private:
  struct Entry {
    std::string name;
    bool ok;
    bool informational;
    std::string detail;
  };
  std::string title_;
  std::vector<Entry> entries_;
};

}  // namespace spinorbit
