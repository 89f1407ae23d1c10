#include <iostream>

#include "topedge/config.hpp"
#include "topedge/report_io.hpp"
#include "topedge/runner.hpp"

int main(int argc, char** argv) {
  using namespace topedge;
  RunConfig cfg;
  try {
    cfg = parse_config(argc, argv);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  if (cfg.command == Command::Selftest && cfg.format == OutputFormat::Csv) cfg.format = OutputFormat::Json;
  RunOutcome outcome = run(cfg);
  if (!outcome.error.empty()) std::cerr << outcome.error << "\n";
  try {
    emit_report(outcome.report, cfg.format, cfg.output_path, outcome.exit_code, outcome.error);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return outcome.exit_code;
}
