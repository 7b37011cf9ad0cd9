#include "gnoe/report.hpp"

#include <algorithm>
#include <sstream>

namespace gnoe {

namespace {

std::string sanitize(std::string value) {
  std::replace(value.begin(), value.end(), '\n', ' ');
  return value;
}

}  // namespace

void Report::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), sanitize(std::move(value)));
}

void Report::merge(const std::string& prefix, const Report& other) {
  for (const auto& [key, value] : other.entries_) entries_.emplace_back(prefix + "." + key, value);
  for (const auto& line : other.notes_) notes_.push_back(line);
}

const std::string* Report::find(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return &v;
  return nullptr;
}

std::string Report::machine(bool with_schema) const {
  std::ostringstream out;
  if (with_schema) out << "schema=" << kReportSchema << '\n';
  for (const auto& [key, value] : entries_) out << key << '=' << value << '\n';
  return out.str();
}

std::string Report::human() const {
  std::ostringstream out;
  if (!title_.empty()) out << "== " << title_ << " ==\n";
  for (const auto& line : notes_) out << line << '\n';
  std::size_t width = 0;
  for (const auto& entry : entries_) width = std::max(width, entry.first.size());
  for (const auto& [key, value] : entries_) {
    out << "  " << key << std::string(width - key.size(), ' ') << " : " << value << '\n';
  }
  return out.str();
}

}  // namespace gnoe
