#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "format.hpp"
#include "mfdim/mass_io.hpp"
#include "svg.hpp"
#include "tables.hpp"

namespace mfdim::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Source {
  std::optional<MassFunction> mass;
  std::optional<CardinalityProfile> profile;
  std::size_t frame_size = 0;
};

Source load_source(const RunConfig& cfg) {
  const bool from_family = cfg.family.has_value() || cfg.n.has_value();
  if (cfg.input_path.has_value() == from_family) {
    throw Error(ErrorCode::InvalidArgument, "give either --input or --family with --n");
  }
  Source s;
  if (cfg.input_path) {
    s.mass = read_mass_function_file(*cfg.input_path, cfg.sum_tolerance);
    s.frame_size = s.mass->frame().size();
    return s;
  }
  if (!cfg.family || !cfg.n) throw Error(ErrorCode::InvalidArgument, "--family and --n must be given together");
  s.profile = family_profile(*cfg.family, *cfg.n);
  s.frame_size = *cfg.n;
  return s;
}

std::string optional_cardinality(const std::optional<unsigned>& k) { return k ? std::to_string(*k) : ""; }

std::string spectrum_output(const Spectrum& s, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: {
      std::string out = csv_line({"y", "f", "mass_value", "multiplicity", "representative_cardinality"});
      for (const auto& p : s.points) {
        out += csv_line({format_double(p.y), format_double(p.f), format_double(p.mass_value),
                         std::to_string(p.multiplicity), optional_cardinality(p.representative_cardinality)});
      }
      return out;
    }
    case OutputFormat::Json: {
      Json j;
      j["frame_size"] = s.frame_size;
      j["points"] = Json::array();
      for (const auto& p : s.points) {
        Json row;
        row["y"] = p.y;
        row["f"] = p.f;
        row["mass_value"] = p.mass_value;
        row["multiplicity"] = p.multiplicity;
        if (p.representative_cardinality) row["representative_cardinality"] = *p.representative_cardinality;
        else row["representative_cardinality"] = nullptr;
        j["points"].push_back(std::move(row));
      }
      return j.dump(2) + "\n";
    }
    case OutputFormat::Svg: {
      PlotSpec plot{"Multifractal spectrum, n = " + std::to_string(s.frame_size), "y", "f(y)", 0.0, 0.1, 0.0, 1.05, {}};
      PlotSeries pts;
      for (const auto& p : s.points) {
        pts.points.emplace_back(p.y, p.f);
        plot.x_max = std::max(plot.x_max, p.y + 0.1);
      }
      plot.series.push_back(std::move(pts));
      return render_svg(plot);
    }
  }
  return {};
}

std::string sweep_output(const std::vector<SweepEntry>& entries, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: {
      std::string out = csv_line({"alpha", "D_alpha", "branch", "numerator_bits", "denominator_bits", "error"});
      for (const auto& e : entries) {
        if (e.ok()) {
          const auto& r = *e.result;
          out += csv_line({format_double(e.alpha), format_double(r.value), std::string(to_string(r.branch)),
                           format_double(r.numerator_bits), format_double(r.denominator_bits), ""});
        } else {
          out += csv_line({format_double(e.alpha), "", "", "", "", std::string(to_string(*e.error))});
        }
      }
      return out;
    }
    case OutputFormat::Json: {
      Json rows = Json::array();
      for (const auto& e : entries) {
        Json row;
        row["alpha"] = e.alpha;
        if (e.ok()) {
          row["D_alpha"] = e.result->value;
          row["branch"] = to_string(e.result->branch);
          row["numerator_bits"] = e.result->numerator_bits;
          row["denominator_bits"] = e.result->denominator_bits;
        } else {
          row["error"] = to_string(*e.error);
          row["message"] = e.message;
        }
        rows.push_back(std::move(row));
      }
      return rows.dump(2) + "\n";
    }
    case OutputFormat::Svg: {
      PlotSpec plot{"Multifractal dimension", "alpha", "D_alpha", 0.0, 1.0, 0.0, 1.0, {}};
      PlotSeries line{{}, true, "#1f77b4"};
      PlotSeries pts;
      bool first = true;
      for (const auto& e : entries) {
        if (!e.ok()) continue;
        const double d = e.result->value;
        if (first) {
          plot.x_min = plot.x_max = e.alpha;
          plot.y_min = std::min(0.0, d);
          first = false;
        }
        plot.x_min = std::min(plot.x_min, e.alpha);
        plot.x_max = std::max(plot.x_max, e.alpha);
        plot.y_min = std::min(plot.y_min, d);
        plot.y_max = std::max(plot.y_max, d * 1.05);
        line.points.emplace_back(e.alpha, d);
      }
      pts.points = line.points;
      plot.series.push_back(std::move(line));
      plot.series.push_back(std::move(pts));
      return render_svg(plot);
    }
  }
  return {};
}

std::string envelope_output(std::size_t n, std::size_t samples, OutputFormat format) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "--samples must be at least 2");
  const auto env = quadratic_envelope(n);
  const auto anchors = asymptotic_anchor_points(n);
  std::vector<std::pair<double, double>> curve;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = kEnvelopeRootLow + (kEnvelopeRootHigh - kEnvelopeRootLow) * static_cast<double>(i) /
                                            static_cast<double>(samples - 1);
    curve.emplace_back(x, env(x));
  }
  switch (format) {
    case OutputFormat::Csv: {
      std::string out = csv_line({"kind", "x", "F"});
      for (const auto& a : anchors) out += csv_line({"anchor", format_double(a.y), format_double(a.f)});
      for (const auto& [x, f] : curve) out += csv_line({"sample", format_double(x), format_double(f)});
      return out;
    }
    case OutputFormat::Json: {
      Json j;
      j["n"] = n;
      j["a"] = env.a();
      j["anchors"] = Json::array();
      for (const auto& a : anchors) j["anchors"].push_back(Json{{"x", a.y}, {"F", a.f}});
      j["samples"] = Json::array();
      for (const auto& [x, f] : curve) j["samples"].push_back(Json{{"x", x}, {"F", f}});
      return j.dump(2) + "\n";
    }
    case OutputFormat::Svg: {
      PlotSpec plot{"Quadratic envelope and max-Deng spectrum, n = " + std::to_string(n), "y", "f(y)", 0.0, 1.7, 0.0,
                    1.05, {}};
      PlotSeries points{{}, false, "#d62728"};
      for (const auto& p : spectrum_from_profile(max_deng_profile(n)).points) {
        points.points.emplace_back(p.y, p.f);
        plot.x_max = std::max(plot.x_max, p.y + 0.1);
      }
      for (const auto& [x, f] : curve) plot.y_max = std::max(plot.y_max, f * 1.05);
      plot.series.push_back(PlotSeries{curve, true, "#1f77b4"});
      plot.series.push_back(std::move(points));
      return render_svg(plot);
    }
  }
  return {};
}

std::string family_output(const RunConfig& cfg) {
  if (!cfg.family || !cfg.n) throw Error(ErrorCode::InvalidArgument, "family needs --family and --n");
  if (cfg.input_path) throw Error(ErrorCode::InvalidArgument, "family does not read --input");
  if (cfg.emit) return to_json(family_mass(*cfg.family, FrameOfDiscernment(*cfg.n)));
  const auto profile = family_profile(*cfg.family, *cfg.n);
  switch (cfg.format) {
    case OutputFormat::Csv: {
      std::string out = csv_line({"cardinality", "mass", "multiplicity"});
      for (const auto& c : profile.classes) {
        out += csv_line({std::to_string(c.cardinality), format_double(c.mass), std::to_string(c.multiplicity)});
      }
      return out;
    }
    case OutputFormat::Json: {
      Json j;
      j["family"] = to_string(*cfg.family);
      j["n"] = profile.frame_size;
      j["classes"] = Json::array();
      for (const auto& c : profile.classes) {
        j["classes"].push_back(Json{{"cardinality", c.cardinality}, {"mass", c.mass}, {"multiplicity", c.multiplicity}});
      }
      return j.dump(2) + "\n";
    }
    case OutputFormat::Svg:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "family supports csv and json output");
}

void warn_negative_orders(const std::vector<double>& alphas, std::ostream& err) {
  for (double a : alphas) {
    if (a < 0.0) {
      err << "warning: alpha=" << format_double(a) << " is negative; computed outside the tabulated range\n";
    }
  }
}

std::string produce(const RunConfig& cfg, std::ostream& err, int& status) {
  status = 0;
  switch (cfg.command) {
    case Command::Spectrum: {
      const auto src = load_source(cfg);
      const auto s = src.mass ? spectrum(*src.mass, cfg.grouping_tolerance)
                              : spectrum_from_profile(*src.profile, cfg.grouping_tolerance);
      return spectrum_output(s, cfg.format);
    }
    case Command::Dimension:
    case Command::Sweep: {
      if (cfg.alphas.empty()) throw Error(ErrorCode::InvalidArgument, "no alpha values given");
      if (std::any_of(cfg.alphas.begin(), cfg.alphas.end(), [](double a) { return !std::isfinite(a); })) {
        throw Error(ErrorCode::InvalidArgument, "alpha values must be finite");
      }
      const auto src = load_source(cfg);
      warn_negative_orders(cfg.alphas, err);
      const auto entries =
          src.mass ? dimension_sweep(*src.mass, cfg.alphas) : dimension_sweep(*src.profile, cfg.alphas);
      if (std::none_of(entries.begin(), entries.end(), [](const SweepEntry& e) { return e.ok(); })) {
        status = exit_code_for(*entries.front().error);
      }
      for (const auto& e : entries) {
        if (!e.ok()) err << "error: alpha=" << format_double(e.alpha) << ": " << e.message << "\n";
      }
      return sweep_output(entries, cfg.format);
    }
    case Command::Table: {
      const auto table = make_table(cfg.table_id);
      if (cfg.format == OutputFormat::Svg) throw Error(ErrorCode::InvalidArgument, "table supports csv and json output");
      return cfg.format == OutputFormat::Json ? render_table_json(table) : render_table_csv(table);
    }
    case Command::Family:
      return family_output(cfg);
    case Command::Envelope:
      if (!cfg.n) throw Error(ErrorCode::InvalidArgument, "envelope needs --n");
      return envelope_output(*cfg.n, cfg.samples, cfg.format);
  }
  throw Error(ErrorCode::UnknownCommand, "unknown command");
}

const std::vector<std::string> kCommandNames = {"spectrum", "dimension", "sweep", "table", "family", "envelope"};

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDenominator:
    case ErrorCode::DegenerateFrame:
    case ErrorCode::DegenerateSupport:
      return 3;
    case ErrorCode::UnknownTable:
    case ErrorCode::UnknownCommand:
      return 4;
    default:
      return 2;
  }
}

std::vector<double> parse_alpha_range(const std::string& spec) {
  double v[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const auto next = i < 2 ? spec.find(':', pos) : spec.size();
    if (next == std::string::npos) throw Error(ErrorCode::InvalidArgument, "alpha range must be start:stop:step");
    const std::string part = spec.substr(pos, next - pos);
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v[i]);
    if (ec != std::errc{} || end != part.data() + part.size() || part.empty()) {
      throw Error(ErrorCode::InvalidArgument, "bad number '" + part + "' in alpha range");
    }
    pos = next + 1;
  }
  const auto [start, stop, step] = v;
  if (!(step > 0.0) || stop < start) throw Error(ErrorCode::InvalidArgument, "alpha range needs step > 0 and stop >= start");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

std::filesystem::path resolve_output_path(const std::filesystem::path& path) {
  if (path.is_absolute()) return path;
  if (const char* dir = std::getenv("MFDIM_OUTPUT_DIR"); dir && *dir) return std::filesystem::path(dir) / path;
  return path;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    int status = 0;
    const std::string text = produce(cfg, err, status);
    if (cfg.output_path) {
      const auto path = resolve_output_path(*cfg.output_path);
      std::ofstream file(path, std::ios::binary);
      if (!file) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
      file << text;
      if (!file) throw Error(ErrorCode::IoError, "failed writing " + path.string());
    } else {
      out << text;
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (argc > 1 && argv[1][0] != '-' &&
      std::find(kCommandNames.begin(), kCommandNames.end(), argv[1]) == kCommandNames.end()) {
    err << "error: " << to_string(ErrorCode::UnknownCommand) << ": '" << argv[1] << "' is not a command\n";
    return exit_code_for(ErrorCode::UnknownCommand);
  }

  RunConfig cfg;
  std::string input, family, format = "csv", output, alpha_range;
  std::size_t n = 0;

  CLI::App app{"Multifractal spectrum and dimension of Dempster-Shafer mass functions", "mfdim"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}, {"svg", OutputFormat::Svg}};
  std::vector<std::string> family_names;
  for (auto f : {Family::MaxDeng, Family::UniformPowerset, Family::Vacuous, Family::UniformSingleton}) {
    family_names.emplace_back(to_string(f));
  }

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--output,-o", output, "write to this file (relative to $MFDIM_OUTPUT_DIR if set)");
  };
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input, "mass-function JSON file");
    sub->add_option("--family", family, "generated family")->check(CLI::IsMember(family_names));
    sub->add_option("--n", n, "frame size for --family")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance-sum", cfg.sum_tolerance, "tolerance on the mass total of --input")
        ->check(CLI::NonNegativeNumber);
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "multifractal spectrum points");
  add_source(spectrum_cmd);
  add_output(spectrum_cmd);
  spectrum_cmd->add_option("--tolerance-grouping", cfg.grouping_tolerance, "relative tolerance for equal masses")
      ->check(CLI::NonNegativeNumber);

  auto* dimension_cmd = app.add_subcommand("dimension", "multifractal dimension at given orders");
  add_source(dimension_cmd);
  add_output(dimension_cmd);
  dimension_cmd->add_option("--alpha,-a", cfg.alphas, "comma-separated orders")->delimiter(',')->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "multifractal dimension over a range of orders");
  add_source(sweep_cmd);
  add_output(sweep_cmd);
  auto* sweep_list = sweep_cmd->add_option("--alpha,-a", cfg.alphas, "comma-separated orders")->delimiter(',');
  auto* sweep_range = sweep_cmd->add_option("--alpha-range", alpha_range, "start:stop:step, inclusive");
  sweep_list->excludes(sweep_range);
  sweep_cmd->require_option(1, 0);

  auto* table_cmd = app.add_subcommand("table", "regenerate a reference table (T1..T6)");
  table_cmd->add_option("id", cfg.table_id, "table id")->required();
  add_output(table_cmd);

  auto* family_cmd = app.add_subcommand("family", "cardinality profile of a generated family");
  family_cmd->add_option("--family", family, "family name")->check(CLI::IsMember(family_names))->required();
  family_cmd->add_option("--n", n, "frame size")->check(CLI::PositiveNumber)->required();
  family_cmd->add_flag("--emit", cfg.emit, "write the full mass-function JSON document");
  add_output(family_cmd);

  auto* envelope_cmd = app.add_subcommand("envelope", "quadratic envelope of the max-Deng spectrum");
  envelope_cmd->add_option("--n", n, "frame size")->check(CLI::PositiveNumber)->required();
  envelope_cmd->add_option("--samples", cfg.samples, "number of samples on [0.585, 1.585]");
  add_output(envelope_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "spectrum") cfg.command = Command::Spectrum;
  else if (name == "dimension") cfg.command = Command::Dimension;
  else if (name == "sweep") cfg.command = Command::Sweep;
  else if (name == "table") cfg.command = Command::Table;
  else if (name == "family") cfg.command = Command::Family;
  else cfg.command = Command::Envelope;

  if (!input.empty()) cfg.input_path = input;
  if (!family.empty()) cfg.family = parse_family(family);
  if (n != 0) cfg.n = n;
  cfg.format = formats.at(format);
  if (!output.empty()) cfg.output_path = output;
  if (!alpha_range.empty()) {
    try {
      cfg.alphas = parse_alpha_range(alpha_range);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return exit_code_for(e.code());
    }
  }
  return run(cfg, out, err);
}

}  // namespace mfdim::cli
