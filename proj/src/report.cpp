// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include "umax/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace umax {
namespace {

void write_json(const Json& v, std::string& out) {
  switch (v.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write_json(item, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        write_json(v[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : Json(format_double(d)).dump();
      break;
    }
    default: out += v.dump(); break;
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_csv(const RunReport& report, std::ostream& os) {
  for (std::size_t i = 0; i < report.csv_header.size(); ++i) {
    os << (i ? "," : "") << csv_escape(report.csv_header[i]);
  }
  os << '\n';
  for (const auto& row : report.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
    os << '\n';
  }
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  std::string s = buf;
  // Keep integral values recognisable as floating point in JSON.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string to_json_text(const Json& value) {
  std::string out;
  write_json(value, out);
  return out;
}

Json report_to_json(const RunReport& report) {
  Json j;
  j["command"] = report.command;
  j["tool_version"] = report.tool_version;
  j["config"] = report.config;
  j["results"] = report.results;
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

void emit_report(const RunReport& report, Format format,
                 const std::optional<std::string>& destination, std::ostream& stdout_stream) {
  std::ostringstream body;
  if (format == Format::Json) {
    body << to_json_text(report_to_json(report)) << '\n';
  } else {
    write_csv(report, body);
  }
  if (!destination) {
    stdout_stream << body.str();
  } else {
    std::ofstream file(*destination);
    if (!file || !(file << body.str()) || !file.flush()) {
      throw IoError("cannot write report to " + *destination);
    }
  }
  if (report.write_sidecar && destination) {
    const std::string path = *destination + ".samples.csv";
    std::ofstream side(path);
    if (!side) throw IoError("cannot write samples to " + path);
    for (double v : report.samples) side << format_double(v) << '\n';
    if (!side.flush()) throw IoError("cannot write samples to " + path);
  }
}

}  // namespace umax
