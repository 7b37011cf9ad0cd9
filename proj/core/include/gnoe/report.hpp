#ifndef GNOE_REPORT_HPP
#define GNOE_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace gnoe {

inline constexpr const char* kReportSchema = "gnoe-report/1";

/// Ordered key=value record plus free-form summary lines.
///
/// Machine form is the schema line followed by one `key=value` per entry, in
/// insertion order. Human form is the summary lines followed by an aligned
/// listing of the same entries. Values never contain newlines.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  void add(std::string key, std::string value);
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, unsigned long long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, int value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, unsigned value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, unsigned long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, long value) { add(std::move(key), std::to_string(value)); }

  void note(std::string line) { notes_.push_back(std::move(line)); }

  /// Appends every entry of `other` with keys prefixed by `prefix.`.
  void merge(const std::string& prefix, const Report& other);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  const std::string* find(const std::string& key) const;

  std::string machine(bool with_schema = true) const;
  std::string human() const;

 private:
  std::string title_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::string> notes_;
};

}  // namespace gnoe

#endif  // GNOE_REPORT_HPP
