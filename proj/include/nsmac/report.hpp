#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nsmac {

struct ReportEntry {
  std::string id;
  bool passed = true;
  std::string detail;
};

// Outcome of a verification suite: one entry per checked item.
class Report {
 public:
  explicit Report(std::string name = {}) : name_(std::move(name)) {}

  void add(std::string id, bool passed, std::string detail = {});
  void merge(const Report& other);

  const std::string& name() const { return name_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }
  bool passed() const;
  size_t failures() const;
  size_t checks() const { return entries_.size(); }
  // First failing entry, or nullptr.
  const ReportEntry* first_failure() const;

  void print(std::ostream& out, bool failures_only = true) const;

 private:
  std::string name_;
  std::vector<ReportEntry> entries_;
};

}  // namespace nsmac
