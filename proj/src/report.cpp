#include "nsmac/report.hpp"

#include <algorithm>

namespace nsmac {

void Report::add(std::string id, bool passed, std::string detail) {
  entries_.push_back({std::move(id), passed, std::move(detail)});
}

void Report::merge(const Report& other) { entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end()); }

bool Report::passed() const { return failures() == 0; }

size_t Report::failures() const {
  return static_cast<size_t>(std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.passed; }));
}

const ReportEntry* Report::first_failure() const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.passed; });
  return it == entries_.end() ? nullptr : &*it;
}

void Report::print(std::ostream& out, bool failures_only) const {
  out << name_ << ": " << (checks() - failures()) << "/" << checks() << " checks passed\n";
  for (const auto& e : entries_) {
    if (failures_only && e.passed) continue;
    out << "  [" << (e.passed ? "pass" : "FAIL") << "] " << e.id;
    if (!e.detail.empty()) out << ": " << e.detail;
    out << "\n";
  }
}

}  // namespace nsmac
