#include "tensegrity/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "tensegrity/errors.hpp"

namespace tensegrity {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || item.key() == a;
    if (!known) {
      throw ConfigError(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
    }
  }
}

double number(const json& obj, const std::string& key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<int>();
}

SegmentGeometry parse_geometry(const json& obj) {
  reject_unknown(obj, "geometry", {"h1", "h2", "h3", "l1", "l2"});
  SegmentGeometry g;
  for (auto [key, field] : {std::pair{"h1", &g.h1}, std::pair{"h2", &g.h2}, std::pair{"h3", &g.h3},
                            std::pair{"l1", &g.l1}, std::pair{"l2", &g.l2}}) {
    const std::string path = std::string("geometry.") + key;
    if (!obj.contains(key)) throw ConfigError(path, "missing");
    *field = number(obj, key, path);
  }
  try {
    validate_geometry(g);
  } catch (const InvalidGeometry& e) {
    throw ConfigError("geometry." + e.field(), "out of range");
  }
  return g;
}

SpringParams parse_springs(const json& obj) {
  reject_unknown(obj, "springs", {"k", "k1", "k2", "rest_fraction"});
  SpringParams sp;
  if (obj.contains("k")) {
    if (obj.contains("k1") || obj.contains("k2")) {
      throw ConfigError("springs.k", "give either k or k1/k2");
    }
    sp.k1 = sp.k2 = number(obj, "k", "springs.k");
  }
  if (obj.contains("k1")) sp.k1 = number(obj, "k1", "springs.k1");
  if (obj.contains("k2")) sp.k2 = number(obj, "k2", "springs.k2");
  if (obj.contains("rest_fraction")) {
    sp.rest_fraction = number(obj, "rest_fraction", "springs.rest_fraction");
  }
  if (!(sp.k1 > 0.0)) throw ConfigError("springs.k1", "must be positive");
  if (!(sp.k2 > 0.0)) throw ConfigError("springs.k2", "must be positive");
  if (!(sp.rest_fraction > 0.0 && sp.rest_fraction < 1.0)) {
    throw ConfigError("springs.rest_fraction", "must lie in (0, 1)");
  }
  return sp;
}

void parse_optimize(const json& obj, RunConfig& config) {
  reject_unknown(obj, "optimize", {"resolutions", "bounds", "tie_break"});
  DesignBounds& b = config.bounds;
  auto axes = {std::pair{"l1", &b.l1}, std::pair{"h1", &b.h1}, std::pair{"h2", &b.h2},
               std::pair{"lambda", &b.lambda}};
  if (obj.contains("resolutions")) {
    const json& res = obj.at("resolutions");
    reject_unknown(res, "optimize.resolutions", {"l1", "h1", "h2", "lambda"});
    for (auto [key, axis] : axes) {
      if (res.contains(key)) {
        axis->samples = integer(res.at(key), std::string("optimize.resolutions.") + key);
      }
    }
  }
  if (obj.contains("bounds")) {
    const json& bounds = obj.at("bounds");
    reject_unknown(bounds, "optimize.bounds", {"l1", "h1", "h2", "lambda"});
    for (auto [key, axis] : axes) {
      if (!bounds.contains(key)) continue;
      const std::string path = std::string("optimize.bounds.") + key;
      const json& pair = bounds.at(key);
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw ConfigError(path, "expected [lo, hi]");
      }
      axis->lo = pair[0].get<double>();
      axis->hi = pair[1].get<double>();
    }
  }
  if (obj.contains("tie_break")) {
    const json& v = obj.at("tie_break");
    const std::string name = v.is_string() ? v.get<std::string>() : "";
    if (name == "largest_base") {
      config.tie_break = TieBreak::kLargestBase;
    } else if (name == "lowest_energy") {
      config.tie_break = TieBreak::kLowestEnergy;
    } else {
      throw ConfigError("optimize.tie_break", "expected largest_base or lowest_energy");
    }
  }
  try {
    validate_bounds(b);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("optimize", e.what());
  }
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kPose:
      return "pose";
    case Command::kIk:
      return "ik";
    case Command::kSingularities:
      return "singularities";
    case Command::kEnergyProfile:
      return "energy-profile";
    case Command::kOptimize:
      return "optimize";
  }
  return "";
}

RunConfig parse_config(std::string_view text, Command command) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", std::string("malformed JSON: ") + e.what());
  }
  reject_unknown(doc, "",
                 {"command", "geometry", "springs", "alphas", "lambda", "optimize", "samples",
                  "workers", "range", "format", "output", "degrees"});

  RunConfig config;
  if (doc.contains("command")) {
    const json& c = doc.at("command");
    if (!c.is_string() || c.get<std::string>() != command_name(command)) {
      throw ConfigError("command", "does not match subcommand " + std::string(command_name(command)));
    }
  }
  if (doc.contains("geometry")) config.geometry = parse_geometry(doc.at("geometry"));
  if (doc.contains("springs")) config.springs = parse_springs(doc.at("springs"));
  if (doc.contains("alphas")) {
    const json& list = doc.at("alphas");
    if (!list.is_array()) throw ConfigError("alphas", "expected a list of angles");
    for (const json& a : list) {
      if (!a.is_number()) throw ConfigError("alphas", "expected a list of angles");
      config.alphas.push_back(a.get<double>());
    }
  }
  if (doc.contains("lambda")) {
    const double lambda = number(doc, "lambda", "lambda");
    if (!(lambda > 0.0 && lambda <= 1.0)) throw ConfigError("lambda", "must lie in (0, 1]");
    config.lambda = lambda;
  }
  if (doc.contains("optimize")) parse_optimize(doc.at("optimize"), config);
  if (doc.contains("samples")) config.samples = integer(doc.at("samples"), "samples");
  if (doc.contains("workers")) config.workers = integer(doc.at("workers"), "workers");
  if (doc.contains("range")) {
    const json& r = doc.at("range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number() ||
        !(r[0].get<double>() < r[1].get<double>())) {
      throw ConfigError("range", "expected [lo, hi] with lo < hi");
    }
    config.range = std::pair{r[0].get<double>(), r[1].get<double>()};
  }
  if (doc.contains("format")) {
    const json& f = doc.at("format");
    try {
      config.format = io::parse_format(f.is_string() ? f.get<std::string>() : "");
    } catch (const std::invalid_argument&) {
      throw ConfigError("format", "expected csv or json");
    }
  }
  if (doc.contains("output")) {
    if (!doc.at("output").is_string()) throw ConfigError("output", "expected a path");
    config.output = doc.at("output").get<std::string>();
  }
  if (doc.contains("degrees")) {
    if (!doc.at("degrees").is_boolean()) throw ConfigError("degrees", "expected true or false");
    config.degrees = doc.at("degrees").get<bool>();
  }
  return config;
}

RunConfig load_config(const std::string& path, Command command) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), command);
}

void require_sections(const RunConfig& config, Command command) {
  const bool needs_geometry = command != Command::kOptimize;
  const bool needs_alphas = command == Command::kPose || command == Command::kIk;
  if (needs_geometry && !config.geometry) throw ConfigError("geometry", "required");
  if (needs_alphas && config.alphas.empty()) throw ConfigError("alphas", "required");
  if (command == Command::kEnergyProfile && config.samples < 3) {
    throw ConfigError("samples", "must be at least 3");
  }
  if (config.workers < 0) throw ConfigError("workers", "must not be negative");
}

}  // namespace tensegrity
