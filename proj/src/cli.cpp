#include "tensegrity/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tensegrity/config.hpp"
#include "tensegrity/energy.hpp"
#include "tensegrity/errors.hpp"
#include "tensegrity/optimizer.hpp"
#include "tensegrity/singularity.hpp"
#include "tensegrity/table_io.hpp"

namespace tensegrity {

namespace {

namespace fs = std::filesystem;
using io::Cell;
using io::Table;

struct Flags {
  std::string config_path;
  std::string output;
  std::string format;
  std::string range;
  int samples = -1;
  int workers = -1;
  bool degrees = false;
  bool stack = false;
};

std::pair<double, double> parse_range(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("--range", "expected lo,hi");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, comma);
    const std::string hi_text = text.substr(comma + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size() || !(lo < hi)) {
      throw ConfigError("--range", "expected lo,hi with lo < hi");
    }
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ConfigError("--range", "expected lo,hi with lo < hi");
  }
}

RunConfig resolve_config(const Flags& flags, Command command) {
  RunConfig config;
  if (!flags.config_path.empty()) {
    config = load_config(flags.config_path, command);
  } else if (command != Command::kOptimize) {
    throw ConfigError("--config", "required for " + std::string(command_name(command)));
  }
  if (!flags.output.empty()) config.output = flags.output;
  if (!flags.format.empty()) {
    try {
      config.format = io::parse_format(flags.format);
    } catch (const std::invalid_argument&) {
      throw ConfigError("--format", "expected csv or json");
    }
  }
  if (!flags.range.empty()) config.range = parse_range(flags.range);
  if (flags.samples >= 0) config.samples = flags.samples;
  if (flags.workers >= 0) config.workers = flags.workers;
  if (flags.degrees) config.degrees = true;
  require_sections(config, command);
  return config;
}

class AngleUnit {
 public:
  explicit AngleUnit(bool degrees) : degrees_(degrees) {}
  double operator()(double radians) const {
    return degrees_ ? radians * 180.0 / std::numbers::pi : radians;
  }
  std::string name() const { return degrees_ ? "deg" : "rad"; }

 private:
  bool degrees_;
};

void add_geometry_meta(Table& table, const SegmentGeometry& g) {
  table.header.emplace_back("h1", io::format_number(g.h1));
  table.header.emplace_back("h2", io::format_number(g.h2));
  table.header.emplace_back("h3", io::format_number(g.h3));
  table.header.emplace_back("l1", io::format_number(g.l1));
  table.header.emplace_back("l2", io::format_number(g.l2));
}

void emit(const Table& table, const std::string& name, const RunConfig& config, std::ostream& out) {
  if (!config.output) {
    io::write_table(table, config.format, out);
    return;
  }
  const fs::path dir(*config.output);
  fs::create_directories(dir);
  const fs::path file = dir / (name + std::string(io::extension(config.format)));
  std::ofstream stream(file, std::ios::binary);
  if (!stream) throw std::runtime_error("cannot write " + file.string());
  io::write_table(table, config.format, stream);
}

void cmd_pose(const RunConfig& config, bool stack, std::ostream& out) {
  if (stack && !config.lambda) throw ConfigError("lambda", "required with --stack");
  const SegmentGeometry g = *config.geometry;
  const AngleUnit unit(config.degrees);

  Table table;
  add_geometry_meta(table, g);
  table.header.emplace_back("angle_unit", unit.name());
  table.columns = {"alpha", "a1_x", "a1_y", "a2_x", "a2_y", "b0_x", "b0_y", "c0_x", "c0_y",
                   "d0_x",  "d0_y", "d1_x", "d1_y", "d2_x", "d2_y"};
  if (stack) {
    table.header.emplace_back("lambda", io::format_number(*config.lambda));
    for (const char* f : {"f1", "f2", "f3"}) {
      for (const char* c : {"_x", "_y", "_theta"}) table.columns.push_back(std::string(f) + c);
    }
  }
  for (double alpha : config.alphas) {
    const SegmentPose p = segment_points(g, {alpha});
    std::vector<Cell> row = {unit(alpha), p.a1.x, p.a1.y, p.a2.x, p.a2.y, p.b0.x, p.b0.y, p.c0.x,
                             p.c0.y,      p.d0.x, p.d0.y, p.d1.x, p.d1.y, p.d2.x, p.d2.y};
    if (stack) {
      const auto frames = stack_forward(tapered_stack(g, *config.lambda, {alpha, alpha, alpha}));
      for (const Frame2D& f : frames) {
        row.insert(row.end(), {f.origin.x, f.origin.y, unit(f.theta)});
      }
    }
    table.rows.push_back(std::move(row));
  }
  emit(table, "pose", config, out);
}

void cmd_ik(const RunConfig& config, std::ostream& out) {
  const SegmentGeometry g = *config.geometry;
  const AngleUnit unit(config.degrees);
  Table table;
  add_geometry_meta(table, g);
  table.header.emplace_back("angle_unit", unit.name());
  table.columns = {"alpha", "rho1", "rho2"};
  for (double alpha : config.alphas) {
    const CableLengths rho = cable_lengths(g, {alpha});
    table.rows.push_back({unit(alpha), rho.rho1, rho.rho2});
  }
  emit(table, "ik", config, out);
}

void cmd_singularities(const RunConfig& config, std::ostream& out) {
  const SegmentGeometry g = *config.geometry;
  const AngleUnit unit(config.degrees);
  const SingularitySet set = singular_angles(g);

  Table table;
  add_geometry_meta(table, g);
  table.header.emplace_back("angle_unit", unit.name());
  table.columns = {"loop", "angle", "residual", "tangential"};
  for (const auto& [id, loop] : {std::pair{1LL, &set.loop1}, std::pair{2LL, &set.loop2}}) {
    for (const SingularAngle& s : *loop) {
      table.rows.push_back({id, unit(s.angle), s.residual, s.tangential ? 1LL : 0LL});
    }
  }
  table.footer.emplace_back("alpha_sing",
                            set.alpha_sing ? io::format_number(unit(*set.alpha_sing)) : "NONE");
  emit(table, "singularities", config, out);
}

void cmd_energy_profile(const RunConfig& config, std::ostream& out) {
  const SegmentGeometry g = *config.geometry;
  const SpringParams& sp = config.springs;
  const AngleUnit unit(config.degrees);
  const SingularitySet set = singular_angles(g);
  if (!set.alpha_sing && !config.range) throw NoSingularity();

  const double lo = config.range ? config.range->first : -*set.alpha_sing;
  const double hi = config.range ? config.range->second : *set.alpha_sing;
  const EnergyProfile profile = energy_profile(g, sp, config.samples, lo, hi);
  const StabilityClass stability = classify_home_stability(g, sp);

  Table table;
  add_geometry_meta(table, g);
  table.header.emplace_back("angle_unit", unit.name());
  table.header.emplace_back("class", std::string(to_string(stability.stability)));
  table.header.emplace_back("second_derivative", io::format_number(stability.second_derivative));
  table.header.emplace_back("alpha_sing",
                            set.alpha_sing ? io::format_number(unit(*set.alpha_sing)) : "NONE");
  table.header.emplace_back("energy_at_zero", io::format_number(energy(g, sp, 0.0)));
  table.header.emplace_back(
      "energy_at_sing",
      set.alpha_sing ? io::format_number(energy(g, sp, *set.alpha_sing)) : "NONE");
  table.header.emplace_back("total_energy", io::format_number(total_energy(g, sp, lo, hi)));
  table.header.emplace_back("range_lo", io::format_number(unit(lo)));
  table.header.emplace_back("range_hi", io::format_number(unit(hi)));
  table.columns = {"alpha", "energy"};
  for (std::size_t i = 0; i < profile.alphas.size(); ++i) {
    table.rows.push_back({unit(profile.alphas[i]), profile.energies[i]});
  }
  emit(table, "energy_profile", config, out);
}

void cmd_optimize(RunConfig config, std::ostream& out) {
  const AngleUnit unit(config.degrees);
  if (!config.output) config.output = ".";
  const OptimizationReport report =
      optimize(config.bounds, config.springs, {config.workers, config.tie_break});

  Table best;
  best.header.emplace_back("angle_unit", unit.name());
  best.header.emplace_back("tie_break", config.tie_break == TieBreak::kLargestBase
                                            ? "largest_base"
                                            : "lowest_energy");
  best.columns = {"lambda",     "h1",        "h2",           "h3",
                  "l1",         "l2",        "alpha_sing",   "class",
                  "total_energy", "energy_at_zero", "energy_at_sing"};
  for (const DesignRecord& r : report.best) {
    best.rows.push_back({r.x.lambda, r.x.h1, r.x.h2, r.x.h3(), r.x.l1, r.x.l2(),
                         unit(r.alpha_sing), std::string(to_string(r.stability.stability)),
                         r.total_energy, r.energy_at_zero, r.energy_at_sing});
  }
  best.footer.emplace_back("max_alpha_sing", io::format_number(unit(report.max_alpha_sing)));
  best.footer.emplace_back("evaluated", std::to_string(report.evaluated));
  best.footer.emplace_back("infeasible", std::to_string(report.infeasible));

  Table lambda_curve;
  lambda_curve.columns = {"lambda", "l1", "l2"};
  for (const LambdaCurvePoint& p : report.lambda_curve) {
    lambda_curve.rows.push_back({p.lambda, p.l1, p.l2});
  }
  Table energy_curve;
  energy_curve.columns = {"lambda", "total_energy"};
  for (const EnergyCurvePoint& p : report.energy_curve) {
    energy_curve.rows.push_back({p.lambda, p.total_energy});
  }

  emit(best, "best", config, out);
  emit(lambda_curve, "lambda_curve", config, out);
  emit(energy_curve, "energy_curve", config, out);
  out << "max alpha_sing = " << io::format_number(unit(report.max_alpha_sing)) << ' '
      << unit.name() << '\n';
}

void add_common_options(CLI::App* sub, Flags& flags) {
  sub->add_option("--config", flags.config_path, "JSON run configuration");
  sub->add_option("--output", flags.output, "Directory for output files (default: stdout)");
  sub->add_option("--format", flags.format, "Output format: csv or json");
  sub->add_option("--samples", flags.samples, "Energy profile sample count");
  sub->add_option("--workers", flags.workers, "Worker threads (0 = all cores)");
  sub->add_option("--range", flags.range, "Explicit angle range lo,hi in radians");
  sub->add_flag("--degrees", flags.degrees, "Report angles in degrees");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kinematics, singularity, stability and design analysis of stacked planar "
               "tensegrity segments"};
  app.name("tensegrity");
  app.require_subcommand(1);
  Flags flags;

  struct Entry {
    Command command;
    const char* description;
  };
  const Entry entries[] = {
      {Command::kPose, "Segment points (and stacked frames with --stack) per angle"},
      {Command::kIk, "Cable lengths per angle"},
      {Command::kSingularities, "Singular angles of both closed loops and alpha_sing"},
      {Command::kEnergyProfile, "Spring energy over the travel range with stability class"},
      {Command::kOptimize, "Grid search of the design box maximizing alpha_sing"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(e.command)), e.description);
    add_common_options(sub, flags);
    if (e.command == Command::kPose) {
      sub->add_flag("--stack", flags.stack, "Append the three stacked platform frames");
    }
    subs.emplace_back(sub, e.command);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  Command command = Command::kPose;
  for (const auto& [sub, c] : subs) {
    if (sub->parsed()) command = c;
  }

  try {
    RunConfig config = resolve_config(flags, command);
    switch (command) {
      case Command::kPose:
        cmd_pose(config, flags.stack, out);
        break;
      case Command::kIk:
        cmd_ik(config, out);
        break;
      case Command::kSingularities:
        cmd_singularities(config, out);
        break;
      case Command::kEnergyProfile:
        cmd_energy_profile(config, out);
        break;
      case Command::kOptimize:
        cmd_optimize(config, out);
        break;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NoSingularity&) {
    err << "range error: geometry has no singularity; pass --range lo,hi\n";
    return kExitRange;
  } catch (const EmptyGrid& e) {
    err << "error: " << e.what() << '\n';
    return kExitEmptyGrid;
  } catch (const InvalidGeometry& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace tensegrity
