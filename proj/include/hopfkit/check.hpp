#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

/// One failing instance of an axiom: the basis indices involved plus a short
/// human-readable description.
struct Violation {
  std::vector<std::size_t> indices;
  std::string detail;
};

/// A named axiom together with every instance that failed. At most
/// kStoredViolations are kept; `count` is the true total.
struct CheckItem {
  static constexpr std::size_t kStoredViolations = 32;

  std::string name;
  std::vector<Violation> violations;
  std::size_t count = 0;

  bool passed() const { return count == 0; }
  void record(Violation v);
};

/// Itemized result of an axiom checker.
class ValidityReport {
 public:
  CheckItem& item(const std::string& name);
  const CheckItem* find(const std::string& name) const;
  const std::deque<CheckItem>& items() const { return items_; }
  bool ok() const;
  std::size_t violation_count() const;
  void merge(const ValidityReport& other, const std::string& prefix = "");

 private:
  std::deque<CheckItem> items_;  // deque: item() references stay valid
};

/// Boolean answer carrying a counterexample when false.
struct Witnessed {
  bool holds = true;
  std::optional<Violation> witness;

  explicit operator bool() const { return holds; }
  static Witnessed yes() { return {}; }
  static Witnessed no(Violation v) { return {false, std::move(v)}; }
};

}  // namespace hopfkit
