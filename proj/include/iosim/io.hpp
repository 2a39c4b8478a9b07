#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iosim/param_fit.hpp"

// Artifact plumbing for the CLI: deterministic number formatting, FNV-1a
// content hashes, the run manifest, and the scatter-CSV fit-target loader.

namespace iosim {

// Shortest round-trip decimal, '.' decimal point, no locale.
std::string g17(double v);

std::uint64_t fnv1a(const std::string& data);

struct RunManifest {
  std::string tool_version;
  std::uint64_t scenario_hash = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::uint64_t>> outputs; // file, hash
  double wall_time_ms = 0.0; // excluded from determinism comparisons

  std::string to_json() const;
};

// Writes content and records (name, fnv1a(content)) in the manifest.
void emit_file(RunManifest& manifest, const std::string& dir,
               const std::string& name, const std::string& content);

// Parses the scatter CSV layout back into fit targets. ConfigError names the
// offending line.
FitTarget load_fit_targets_csv(const std::string& path, int diodes_per_layer = 1);

} // namespace iosim
