#include "topedge/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace topedge {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void write_canonical(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        write_canonical(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write_canonical(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: out += format_double(j.get<double>()); break;
    default: out += j.dump(); break;
  }
}

json point_json(const FermiPoint& fp) {
  json jac = json::array();
  for (Eigen::Index r = 0; r < fp.jacobian.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < fp.jacobian.cols(); ++c) row.push_back(fp.jacobian(r, c));
    jac.push_back(row);
  }
  return json{{"chart", fp.chart},
              {"coords", fp.coords},
              {"point", fp.point},
              {"sign", fp.sign},
              {"det_j", fp.det},
              {"jacobian", jac},
              {"c", {fp.c_value.real(), fp.c_value.imag()}},
              {"abs_c", std::abs(fp.c_value)},
              {"residual", fp.residual}};
}

json certificate_json(const Certificate& c) {
  return json{{"ok", c.ok},           {"window_dim", c.window_dim}, {"expected_dim", c.expected_dim},
              {"mu", c.mu},           {"max_error", c.max_error},   {"tolerance", c.tolerance},
              {"toeplitz_sign", c.toeplitz_sign}, {"note", c.note}};
}

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json report_to_json(const InvariantReport& rep, int exit_code, const std::string& error) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["family"] = rep.family;
  j["command"] = rep.command;
  j["exit_code"] = exit_code;
  if (!error.empty()) j["error"] = error;
  if (rep.bulk_c2) j["bulk_c2"] = *rep.bulk_c2;
  if (rep.edge_index) j["edge_index"] = *rep.edge_index;
  if (rep.spectral_flow) j["spectral_flow"] = *rep.spectral_flow;
  if (rep.evenness_ok) j["evenness_ok"] = *rep.evenness_ok;
  if (rep.bulk_edge_ok) j["bulk_edge_ok"] = *rep.bulk_edge_ok;
  json pts = json::array();
  for (const auto& fp : rep.fermi_points) pts.push_back(point_json(fp));
  j["fermi_points"] = pts;
  json certs = json::array();
  for (const auto& c : rep.certificates) certs.push_back(certificate_json(c));
  j["certificates"] = certs;
  j["warnings"] = rep.warnings;
  json diag = json::object();
  for (const auto& [key, value] : rep.diagnostics)
    std::visit([&](const auto& v) { diag[key] = v; }, value);
  j["diagnostics"] = diag;
  return j;
}

std::string canonical_json(const json& j) {
  std::string out;
  write_canonical(j, out);
  return out;
}

std::string fermi_csv(const InvariantReport& rep) {
  std::ostringstream os;
  os << "chart";
  for (int i = 1; i <= rep.fermi_dim; ++i) os << ",u" << i;
  os << ",sign,det_j,abs_c,residual\n";
  for (const auto& fp : rep.fermi_points) {
    os << fp.chart;
    for (double u : fp.coords) os << ',' << csv_double(u);
    os << ',' << fp.sign << ',' << csv_double(fp.det) << ',' << csv_double(std::abs(fp.c_value)) << ','
       << csv_double(fp.residual) << '\n';
  }
  return os.str();
}

std::string summary_text(const InvariantReport& rep, int exit_code, const std::string& error) {
  std::ostringstream os;
  os << rep.command << " " << rep.family << "\n";
  if (rep.bulk_c2) os << "  bulk c2        " << *rep.bulk_c2 << "\n";
  if (rep.edge_index) os << "  edge index     " << *rep.edge_index << "\n";
  if (rep.spectral_flow) os << "  spectral flow  " << *rep.spectral_flow << "\n";
  if (rep.evenness_ok) os << "  evenness       " << (*rep.evenness_ok ? "ok" : "violated") << "\n";
  if (rep.bulk_edge_ok) os << "  bulk-edge      " << (*rep.bulk_edge_ok ? "ok" : "mismatch") << "\n";
  if (!rep.fermi_points.empty()) {
    os << "  Fermi points:\n";
    os.precision(12);
    for (const auto& fp : rep.fermi_points) {
      os << "    (";
      for (std::size_t i = 0; i < fp.point.size(); ++i) os << (i ? ", " : "") << fp.point[i];
      os << ")  sign " << (fp.sign > 0 ? "+1" : "-1") << "  det J " << fp.det << "  |c| " << std::abs(fp.c_value)
         << "\n";
    }
  }
  for (const auto& [key, value] : rep.diagnostics) {
    os << "  " << key << " = ";
    std::visit([&](const auto& v) { os << v; }, value);
    os << "\n";
  }
  for (const auto& w : rep.warnings) os << "  warning: " << w << "\n";
  if (!error.empty()) os << "  error: " << error << "\n";
  os << "  exit " << exit_code << "\n";
  return os.str();
}

std::string render_report(const InvariantReport& rep, OutputFormat format, int exit_code, const std::string& error) {
  switch (format) {
    case OutputFormat::Json: return canonical_json(report_to_json(rep, exit_code, error)) + "\n";
    case OutputFormat::Csv: return fermi_csv(rep);
    case OutputFormat::Text: return summary_text(rep, exit_code, error);
  }
  return "";
}

void emit_report(const InvariantReport& rep, OutputFormat format, const std::string& path, int exit_code,
                 const std::string& error) {
  std::string text = render_report(rep, format, exit_code, error);
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace topedge
