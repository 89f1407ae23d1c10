#include "topedge/config.hpp"

#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"

namespace topedge {

namespace {

using nlohmann::json;

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> t = {
      {"bulk-chern", Command::BulkChern},       {"edge-index", Command::EdgeIndex},
      {"spectral-flow", Command::SpectralFlow}, {"fermi-points", Command::FermiPoints},
      {"local-kernel", Command::LocalKernel},   {"verify-bec", Command::VerifyBec},
      {"check-evenness", Command::CheckEvenness}, {"selftest", Command::Selftest},
  };
  return t;
}

Command parse_command(const std::string& s) {
  auto it = command_table().find(s);
  if (it == command_table().end()) throw Error(ErrorKind::Usage, "unknown command '" + s + "'");
  return it->second;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw Error(ErrorKind::Usage, "unknown output format '" + s + "'");
}

std::optional<double> parse_mu(const std::string& s) {
  if (s == "auto") return std::nullopt;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used != s.size() || !(v > 0)) throw Error(ErrorKind::Usage, "mu must be 'auto' or a positive number");
  return v;
}

int parse_threads(const std::string& s) {
  if (s == "auto") return 0;
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used != s.size() || v < 1) throw Error(ErrorKind::Usage, "threads must be 'auto' or a positive integer");
  return v;
}

template <class T>
T typed(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::Usage, "config key '" + key + "' has the wrong type");
  }
}

void require_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw Error(ErrorKind::Usage, "config section '" + where + "' must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorKind::Usage, "unknown config key '" + where + key + "'");
  }
}

TrigPolynomial parse_poly(const json& j, const std::string& key) {
  if (!j.is_array()) throw Error(ErrorKind::Usage, "config key '" + key + "' must be a list of terms");
  TrigPolynomial p;
  for (const auto& term : j) {
    require_keys(term, key + ".", {"coeff", "freq"});
    TrigPolynomial::Term t;
    auto coeff = typed<std::vector<double>>(term.at("coeff"), key + ".coeff");
    if (coeff.size() != 2) throw Error(ErrorKind::Usage, "term coefficient must be [re, im]");
    t.coeff = cplx(coeff[0], coeff[1]);
    t.freq = typed<std::vector<int>>(term.at("freq"), key + ".freq");
    p.terms.push_back(std::move(t));
  }
  return p;
}

TrigFamilySpec parse_inline(const json& j) {
  require_keys(j, "family.", {"id", "model", "a", "b", "c"});
  TrigFamilySpec spec;
  if (j.contains("id")) spec.id = typed<std::string>(j.at("id"), "family.id");
  std::string model = j.contains("model") ? typed<std::string>(j.at("model"), "family.model") : "local-odd";
  if (model == "local-odd") {
    spec.model = EdgeModel::LocalOdd;
    spec.dim = 3;
  } else if (model == "local-even") {
    spec.model = EdgeModel::LocalEven;
    spec.dim = 2;
  } else if (model == "chain") {
    spec.model = EdgeModel::Chain;
    spec.dim = 1;
  } else {
    throw Error(ErrorKind::Usage, "unknown inline model '" + model + "'");
  }
  if (j.contains("a")) spec.a = parse_poly(j.at("a"), "family.a");
  if (j.contains("b")) spec.b = parse_poly(j.at("b"), "family.b");
  if (j.contains("c")) spec.c = parse_poly(j.at("c"), "family.c");
  return spec;
}

void apply_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Usage, std::string("config file is not valid JSON: ") + e.what());
  }
  require_keys(j, "", {"command", "family", "grid", "scan", "truncation", "mu", "samples", "energy", "reverse",
                       "output", "threads", "seed"});
  if (j.contains("command")) cfg.command = parse_command(typed<std::string>(j["command"], "command"));
  if (j.contains("family")) {
    if (j["family"].is_string()) {
      cfg.family = j["family"].get<std::string>();
      cfg.inline_family.reset();
    } else {
      cfg.inline_family = parse_inline(j["family"]);
      cfg.family = cfg.inline_family->id;
    }
  }
  if (j.contains("grid")) cfg.grid = typed<int>(j["grid"], "grid");
  if (j.contains("scan")) cfg.scan_resolution = typed<int>(j["scan"], "scan");
  if (j.contains("truncation")) cfg.sites = typed<int>(j["truncation"], "truncation");
  if (j.contains("mu")) {
    if (j["mu"].is_string())
      cfg.mu = parse_mu(j["mu"].get<std::string>());
    else {
      double v = typed<double>(j["mu"], "mu");
      if (!(v > 0)) throw Error(ErrorKind::Usage, "mu must be 'auto' or a positive number");
      cfg.mu = v;
    }
  }
  if (j.contains("samples")) cfg.samples = typed<int>(j["samples"], "samples");
  if (j.contains("energy")) cfg.energy = typed<double>(j["energy"], "energy");
  if (j.contains("reverse")) cfg.reverse = typed<bool>(j["reverse"], "reverse");
  if (j.contains("output")) {
    require_keys(j["output"], "output.", {"path", "format"});
    if (j["output"].contains("path")) cfg.output_path = typed<std::string>(j["output"]["path"], "output.path");
    if (j["output"].contains("format"))
      cfg.format = parse_format(typed<std::string>(j["output"]["format"], "output.format"));
  }
  if (j.contains("threads")) {
    if (j["threads"].is_string())
      cfg.threads = parse_threads(j["threads"].get<std::string>());
    else
      cfg.threads = parse_threads(std::to_string(typed<int>(j["threads"], "threads")));
  }
  if (j.contains("seed")) cfg.seed = typed<std::uint64_t>(j["seed"], "seed");
}

void validate(const RunConfig& cfg) {
  if (cfg.grid < 8) throw Error(ErrorKind::Usage, "grid must be at least 8");
  if (cfg.sites < 8) throw Error(ErrorKind::Usage, "truncation N must be at least 8");
  if (cfg.scan_resolution < 8) throw Error(ErrorKind::Usage, "scan resolution must be at least 8");
  if (cfg.samples < 4) throw Error(ErrorKind::Usage, "loop samples must be at least 4");
  if (cfg.command == Command::Selftest) return;
  if (cfg.family.empty() && !cfg.inline_family) throw Error(ErrorKind::Usage, "a --family is required");
  resolve_family(cfg);
}

}  // namespace

const char* command_name(Command c) {
  for (const auto& [name, cmd] : command_table())
    if (cmd == c) return name.c_str();
  return "?";
}

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "?";
}

CatalogEntry resolve_family(const RunConfig& cfg) {
  if (cfg.inline_family) return trig_family(*cfg.inline_family);
  return lookup_family(cfg.family);
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Topological invariants of Hermitian operator families", "topedge"};
  std::string command, family, mu, format, threads, config_path, output;
  int grid = 0, scan = 0, sites = 0, samples = 0;
  double energy = 0.0;
  std::uint64_t seed = 0;
  bool reverse = false;
  app.add_option("command", command,
                 "bulk-chern | edge-index | spectral-flow | fermi-points | local-kernel | verify-bec | "
                 "check-evenness | selftest");
  auto* o_family = app.add_option("--family", family, "catalog id (example1..4, hn:<n>, hn:<n>:stab, local:...)");
  auto* o_grid = app.add_option("--grid", grid, "bulk lattice points per axis (default 16)");
  auto* o_scan = app.add_option("--scan", scan, "Fermi scan points per axis (default 64)");
  auto* o_sites = app.add_option("--N", sites, "truncation sites (default 60)");
  auto* o_mu = app.add_option("--mu", mu, "window radius or 'auto'");
  auto* o_samples = app.add_option("--samples", samples, "loop samples for spectral-flow (default 512)");
  auto* o_energy = app.add_option("--energy", energy, "probe energy for local-kernel");
  auto* o_reverse = app.add_flag("--reverse", reverse, "reverse the base orientation");
  auto* o_output = app.add_option("--output", output, "output path (default stdout)");
  auto* o_format = app.add_option("--format", format, "json | csv | text");
  auto* o_threads = app.add_option("--threads", threads, "thread count or 'auto'");
  auto* o_seed = app.add_option("--seed", seed, "seed for randomised checks (default 42)");
  app.add_option("--config", config_path, "JSON run configuration file");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    throw Error(ErrorKind::Usage, app.help());
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::Usage, e.what());
  }

  RunConfig cfg;
  bool have_command = false;
  if (!config_path.empty()) {
    apply_file(cfg, config_path);
    have_command = true;
  }
  if (!command.empty()) {
    cfg.command = parse_command(command);
    have_command = true;
  }
  if (!have_command) throw Error(ErrorKind::Usage, "no command given");
  if (o_family->count()) {
    cfg.family = family;
    cfg.inline_family.reset();
  }
  if (o_grid->count()) cfg.grid = grid;
  if (o_scan->count()) cfg.scan_resolution = scan;
  if (o_sites->count()) cfg.sites = sites;
  if (o_mu->count()) cfg.mu = parse_mu(mu);
  if (o_samples->count()) cfg.samples = samples;
  if (o_energy->count()) cfg.energy = energy;
  if (o_reverse->count()) cfg.reverse = reverse;
  if (o_output->count()) cfg.output_path = output;
  if (o_format->count()) cfg.format = parse_format(format);
  if (o_threads->count()) cfg.threads = parse_threads(threads);
  if (o_seed->count()) cfg.seed = seed;
  validate(cfg);
  return cfg;
}

RunConfig parse_config(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_config(args);
}

}  // namespace topedge
