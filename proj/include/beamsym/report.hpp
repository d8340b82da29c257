#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace beamsym {

enum class ReportFormat { structured, human };

ReportFormat parse_report_format(std::string_view name);

/// Shortest text that reads back to the same double; "inf", "-inf", "nan" otherwise.
std::string format_number(double v);

/// Ordered key/value document. The structured rendering is one `key = value`
/// line per entry after a schema line; the human rendering is derived from it.
class Report {
 public:
  explicit Report(std::string command, int version = 1);

  Report& add(std::string key, std::string value);
  Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  Report& add(std::string key, double value);
  Report& add(std::string key, int value);
  Report& add(std::string key, std::size_t value);
  Report& add(std::string key, bool value);
  Report& add(std::string key, const std::vector<double>& values);

  /// Appends every entry of `other` with `prefix.` prepended.
  Report& merge(const std::string& prefix, const Report& other);

  const std::string& command() const { return command_; }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::string render(ReportFormat format) const;

 private:
  std::string command_;
  int version_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace beamsym
