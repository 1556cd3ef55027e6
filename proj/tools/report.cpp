#include "report.hpp"

namespace brouwer::cli {

Report make_report(const std::string& command, const std::string& status) {
  Report r;
  r["version"] = kVersion;
  r["command"] = command;
  r["status"] = status;
  return r;
}

namespace {

bool is_scalar(const Report& v) { return !v.is_object() && !v.is_array(); }

std::string scalar(const Report& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void text(const Report& v, const std::string& indent, std::string& out) {
  for (const auto& [key, value] : v.items()) {
    if (is_scalar(value)) {
      out += indent + key + ": " + scalar(value) + "\n";
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
      std::string joined;
      for (const auto& item : value) joined += (joined.empty() ? "" : ", ") + scalar(item);
      out += indent + key + ": " + (value.empty() ? "(none)" : joined) + "\n";
    } else if (value.is_array()) {
      out += indent + key + ":\n";
      for (const auto& item : value) {
        if (is_scalar(item)) {
          out += indent + "  - " + scalar(item) + "\n";
        } else {
          out += indent + "  -\n";
          text(item, indent + "    ", out);
        }
      }
    } else {
      out += indent + key + ":\n";
      text(value, indent + "  ", out);
    }
  }
}

}  // namespace

std::string render(const Report& report, bool json) {
  if (json) return report.dump(2) + "\n";
  std::string out;
  text(report, "", out);
  return out;
}

}  // namespace brouwer::cli
