#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topedge/catalog.hpp"

namespace topedge {

enum class Command { BulkChern, EdgeIndex, SpectralFlow, FermiPoints, LocalKernel, VerifyBec, CheckEvenness, Selftest };
enum class OutputFormat { Json, Csv, Text };

const char* command_name(Command c);
const char* format_name(OutputFormat f);

struct RunConfig {
  Command command = Command::Selftest;
  std::string family;
  std::optional<TrigFamilySpec> inline_family;
  int grid = 16;
  int scan_resolution = 64;
  int sites = 60;
  std::optional<double> mu;  // empty means automatic
  int samples = 512;         // loop samples for spectral flow
  double energy = 0.0;       // probe energy for local-kernel
  bool reverse = false;      // reverse the base orientation
  std::string output_path;   // empty means stdout
  OutputFormat format = OutputFormat::Json;
  int threads = 0;           // 0 means automatic
  std::uint64_t seed = 42;
};

// Flags override values from --config; throws Error(Usage) on any invalid input.
RunConfig parse_config(const std::vector<std::string>& args);
RunConfig parse_config(int argc, char** argv);

// Resolves the family of a validated config.
CatalogEntry resolve_family(const RunConfig& cfg);

}  // namespace topedge
