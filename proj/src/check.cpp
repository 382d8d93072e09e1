#include "hopfkit/check.hpp"

#include <algorithm>

namespace hopfkit {

void CheckItem::record(Violation v) {
  if (violations.size() < kStoredViolations) violations.push_back(std::move(v));
  ++count;
}

CheckItem& ValidityReport::item(const std::string& name) {
  auto it = std::find_if(items_.begin(), items_.end(), [&](const CheckItem& c) { return c.name == name; });
  if (it != items_.end()) return *it;
  items_.push_back(CheckItem{name, {}, 0});
  return items_.back();
}

const CheckItem* ValidityReport::find(const std::string& name) const {
  auto it = std::find_if(items_.begin(), items_.end(), [&](const CheckItem& c) { return c.name == name; });
  return it == items_.end() ? nullptr : &*it;
}

bool ValidityReport::ok() const {
  return std::all_of(items_.begin(), items_.end(), [](const CheckItem& c) { return c.passed(); });
}

std::size_t ValidityReport::violation_count() const {
  std::size_t n = 0;
  for (const auto& c : items_) n += c.count;
  return n;
}

void ValidityReport::merge(const ValidityReport& other, const std::string& prefix) {
  for (const auto& c : other.items_) {
    CheckItem& mine = item(prefix + c.name);
    for (const auto& v : c.violations) mine.record(v);
    mine.count += c.count - c.violations.size();
  }
}

}  // namespace hopfkit
