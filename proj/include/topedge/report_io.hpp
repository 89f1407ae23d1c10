#pragma once

#include <string>

#include "json.hpp"
#include "topedge/config.hpp"
#include "topedge/invariants.hpp"

namespace topedge {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json report_to_json(const InvariantReport& rep, int exit_code, const std::string& error = "");

// Sorted keys, integers exact, floats with 17 significant digits.
std::string canonical_json(const nlohmann::json& j);

std::string fermi_csv(const InvariantReport& rep);
std::string summary_text(const InvariantReport& rep, int exit_code, const std::string& error = "");

std::string render_report(const InvariantReport& rep, OutputFormat format, int exit_code,
                          const std::string& error = "");

// Writes to path, or stdout when path is empty; throws Error(Io) when the path is unwritable.
void emit_report(const InvariantReport& rep, OutputFormat format, const std::string& path, int exit_code,
                 const std::string& error = "");

}  // namespace topedge
