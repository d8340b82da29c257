#include "beamsym/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "beamsym/errors.hpp"

namespace beamsym {

ReportFormat parse_report_format(std::string_view name) {
  if (name == "structured") return ReportFormat::structured;
  if (name == "human") return ReportFormat::human;
  throw ValidationError("unknown report format '" + std::string(name) + "' (expected structured or human)");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Report::Report(std::string command, int version) : command_(std::move(command)), version_(version) {}

Report& Report::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Report& Report::add(std::string key, double value) { return add(std::move(key), format_number(value)); }
Report& Report::add(std::string key, int value) { return add(std::move(key), std::to_string(value)); }
Report& Report::add(std::string key, std::size_t value) { return add(std::move(key), std::to_string(value)); }
Report& Report::add(std::string key, bool value) { return add(std::move(key), std::string(value ? "true" : "false")); }

Report& Report::add(std::string key, const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += format_number(values[i]);
  }
  return add(std::move(key), std::move(s));
}

Report& Report::merge(const std::string& prefix, const Report& other) {
  for (const auto& [k, v] : other.entries_) entries_.emplace_back(prefix + "." + k, v);
  return *this;
}

std::string Report::render(ReportFormat format) const {
  std::ostringstream out;
  if (format == ReportFormat::structured) {
    out << "schema = beamsym." << command_ << "/" << version_ << '\n';
    for (const auto& [k, v] : entries_) out << k << " = " << v << '\n';
    return out.str();
  }
  // Human: entries grouped under their first key segment, values aligned.
  out << "beamsym " << command_ << '\n';
  std::size_t width = 0;
  for (const auto& e : entries_) width = std::max(width, e.first.size());
  std::string section;
  for (const auto& [k, v] : entries_) {
    const auto dot = k.find('.');
    const std::string head = dot == std::string::npos ? std::string() : k.substr(0, dot);
    if (head != section) {
      section = head;
      out << '\n';
      if (!head.empty()) out << head << '\n';
    }
    out << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return out.str();
}

}  // namespace beamsym
