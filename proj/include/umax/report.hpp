// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace umax {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

/// Raised when a report destination cannot be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One CLI run: keys are emitted in the order command, tool_version,
/// config, results, elapsed_seconds.
struct RunReport {
  std::string command;
  Json config = Json::object();
  Json results = Json::object();
  std::string tool_version = UMAX_VERSION;
  double elapsed_seconds = 0.0;

  /// CSV view of the results: a header and one or more records.
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  /// Statistic vector destined for the `<out>.samples.csv` sidecar.
  std::vector<double> samples;
  bool write_sidecar = false;
};

/// 17 significant digits ("%.17g"), with ".0" appended to integral values;
/// non-finite values become "inf", "-inf" and "nan".
std::string format_double(double value);

/// Compact JSON with doubles printed at 17 significant digits.
std::string to_json_text(const Json& value);

Json report_to_json(const RunReport& report);

/// Writes the report to `destination` (stdout when empty) and the sample
/// sidecar next to it when requested. Throws IoError on failure.
void emit_report(const RunReport& report, Format format,
                 const std::optional<std::string>& destination, std::ostream& stdout_stream);

}  // namespace umax
