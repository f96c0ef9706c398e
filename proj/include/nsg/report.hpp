#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nsg/invariants.hpp"

namespace nsg {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "1.0.0";

class ReportError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ReportDocument {
  std::string tool_version{kToolVersion};
  int schema_version = kReportSchemaVersion;
  std::string group_name;
  std::size_t group_order = 0;
  std::size_t sol_size = 0;
  InvariantReport invariants;
  double runtime_ms = 0;

  bool operator==(const ReportDocument&) const = default;
};

// JSON text, two-space indented, keys in a fixed order.
std::string format_report(const ReportDocument& doc);
// Throws ReportError on malformed input, missing fields or a schema_version
// other than kReportSchemaVersion.
ReportDocument parse_report(std::string_view text);

void write_report(const ReportDocument& doc, const std::filesystem::path& path);
ReportDocument read_report(const std::filesystem::path& path);

} // namespace nsg
