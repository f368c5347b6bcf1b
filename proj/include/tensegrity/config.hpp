#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tensegrity/energy.hpp"
#include "tensegrity/mechanism.hpp"
#include "tensegrity/optimizer.hpp"
#include "tensegrity/table_io.hpp"

namespace tensegrity {

enum class Command { kPose, kIk, kSingularities, kEnergyProfile, kOptimize };

std::string_view command_name(Command c);

// Rejected configuration; field() names the offending key path, e.g.
// "geometry.h2".
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct RunConfig {
  std::optional<SegmentGeometry> geometry;
  SpringParams springs;
  std::vector<double> alphas;
  std::optional<double> lambda;  // stack taper ratio
  DesignBounds bounds;
  TieBreak tie_break = TieBreak::kLargestBase;
  int samples = 101;
  int workers = 0;
  std::optional<std::pair<double, double>> range;
  io::Format format = io::Format::kCsv;
  std::optional<std::string> output;
  bool degrees = false;
};

// Parses a JSON run document for the given subcommand. Unknown keys and
// missing mode-specific sections raise ConfigError.
RunConfig parse_config(std::string_view text, Command command);
RunConfig load_config(const std::string& path, Command command);

// Checks the sections a subcommand needs once command-line overrides are in.
void require_sections(const RunConfig& config, Command command);

}  // namespace tensegrity
