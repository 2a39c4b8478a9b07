#include "iosim/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace iosim {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string RunManifest::to_json() const {
  std::ostringstream os;
  os << "{\n";
  os << "  \"tool_version\": \"" << tool_version << "\",\n";
  os << "  \"scenario_hash\": \"" << scenario_hash << "\",\n";
  os << "  \"seed\": " << seed << ",\n";
  os << "  \"outputs\": [";
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (i) os << ", ";
    os << "{\"file\": \"" << outputs[i].first << "\", \"hash\": \""
       << outputs[i].second << "\"}";
  }
  os << "],\n";
  os << "  \"wall_time_ms\": " << g17(wall_time_ms) << "\n";
  os << "}\n";
  return os.str();
}

void emit_file(RunManifest& manifest, const std::string& dir,
               const std::string& name, const std::string& content) {
  const std::filesystem::path p = std::filesystem::path(dir) / name;
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + p.string() + "'");
  out << content;
  manifest.outputs.emplace_back(name, fnv1a(content));
}

FitTarget load_fit_targets_csv(const std::string& path, int diodes_per_layer) {
  std::ifstream in(path);
  if (!in) throw ConfigError("fit targets: cannot open '" + path + "'");
  FitTarget target;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 || line.empty()) continue; // header
    std::istringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    const std::string where =
        "fit targets: " + path + ":" + std::to_string(lineno);
    if (fields.size() != 11) throw ConfigError(where + ": expected 11 columns");
    FitPoint p;
    if (fields[0] == "off") p.state = make_element_state(false, diodes_per_layer);
    else if (fields[0] == "on") p.state = make_element_state(true, diodes_per_layer);
    else throw ConfigError(where + ": unknown state '" + fields[0] + "'");
    try {
      std::size_t pos = 0;
      p.freq_hz = std::stod(fields[1], &pos) * 1e9;
      p.gamma_r = cplx(std::stod(fields[3]), std::stod(fields[4]));
      p.gamma_t = cplx(std::stod(fields[7]), std::stod(fields[8]));
    } catch (const std::exception&) {
      throw ConfigError(where + ": malformed number");
    }
    target.points.push_back(p);
  }
  target.validate();
  return target;
}

} // namespace iosim
