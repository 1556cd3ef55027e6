#pragma once

#include <string>

#include <json.hpp>

namespace brouwer::cli {

using Report = nlohmann::ordered_json;

inline constexpr const char* kVersion = "brouwer 1.0.0";

/// A fresh report carrying the version and the status.
Report make_report(const std::string& command, const std::string& status);

/// Pretty JSON when `json` is set, otherwise indented "key: value" lines.
std::string render(const Report& report, bool json);

}  // namespace brouwer::cli
