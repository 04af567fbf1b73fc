// chromo: exact triangle reports, SVG figures and finite-field theorem sweeps.
//
// Exit codes: 0 ok, 1 sweep found failures, 2 bad input, 3 degenerate
// triangle, 4 field error, 5 output not writable.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include "chromo/chromo.hpp"

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitField = 4;
constexpr int kExitOutput = 5;

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const chromo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const chromo::DegenerateTriangle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const chromo::InvalidField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitField;
  } catch (const chromo::MixedFields& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitField;
  } catch (const chromo::CharacteristicThree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitField;
  } catch (const chromo::DivisionByZero& e) {
    // Only reachable from a zero denominator in the input.
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_report(const std::string& points, const std::string& field_text, const std::string& format) {
  return run_guarded([&] {
    const chromo::FieldSpec field = chromo::FieldSpec::parse(field_text);
    auto pts = chromo::parse_points(points, field);
    chromo::Triangle t(pts[0], pts[1], pts[2]);
    chromo::ReportDocument doc = chromo::make_report(t);
    if (format == "text") {
      std::cout << chromo::to_text(doc);
    } else {
      std::cout << chromo::to_json(doc).dump(2) << "\n";
    }
    return 0;
  });
}

int cmd_svg(const std::string& points, const std::string& elements, const std::string& out_path, int width) {
  return run_guarded([&] {
    chromo::SvgOptions options = chromo::parse_svg_elements(elements);
    options.width = width;
    auto pts = chromo::parse_points(points, chromo::FieldSpec::rational());
    chromo::Triangle t(pts[0], pts[1], pts[2]);
    const std::string svg = chromo::render_svg(t, options);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitOutput;
    }
    out << svg;
    out.close();
    if (!out) {
      std::cerr << "error: failed writing '" << out_path << "'\n";
      return kExitOutput;
    }
    return 0;
  });
}

int cmd_sweep(std::uint64_t prime, const std::string& mode, const std::string& laws, unsigned jobs,
              std::uint64_t seed, const std::string& format, bool timing) {
  return run_guarded([&] {
    chromo::SweepOptions options;
    options.prime = prime;
    options.seed = seed;
    options.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
    // Validate the modulus before anything else so a bad prime is a field error.
    chromo::FieldSpec::prime(prime);
    if (mode == "exhaustive") {
      options.exhaustive = true;
    } else if (mode.starts_with("random:")) {
      options.exhaustive = false;
      try {
        options.samples = std::stoull(mode.substr(7));
      } catch (const std::exception&) {
        throw chromo::ParseError("bad sample count in mode '" + mode + "'");
      }
    } else {
      throw chromo::ParseError("mode must be 'exhaustive' or 'random:<n>'");
    }
    if (laws != "all") {
      options.groups.clear();
      std::string_view rest = laws;
      while (!rest.empty()) {
        auto comma = rest.find(',');
        options.groups.push_back(chromo::parse_check_group(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    }
    chromo::SweepSummary summary = chromo::run_sweep(options);
    if (format == "text") {
      std::cout << chromo::to_text(summary);
    } else {
      std::cout << chromo::to_json(summary, timing).dump(2) << "\n";
      std::cerr << "elapsed: " << summary.elapsed_seconds << " s\n";
    }
    return summary.total_failures() == 0 ? 0 : kExitFailures;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromogeometry: exact blue, red and green triangle geometry"};
  app.require_subcommand(1);

  std::string points, field = "Q", format = "json";
  auto* report = app.add_subcommand("report", "Print every invariant, center, circle and theorem check of a triangle");
  report->add_option("--points", points, "Three points as \"x1,y1;x2,y2;x3,y3\"")->required();
  report->add_option("--field", field, "Q (default) or fp:<odd prime>");
  report->add_option("--format", format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));

  std::string svg_points, elements = "all", out_path;
  int width = 800;
  auto* svg = app.add_subcommand("svg", "Draw a rational triangle with its coloured Euler lines and circles");
  svg->add_option("--points", svg_points, "Three points as \"x1,y1;x2,y2;x3,y3\"")->required();
  svg->add_option("--elements", elements, "Comma list of euler, circumcircles, ninepoint, centers, or all");
  svg->add_option("--out", out_path, "Output SVG path")->required();
  svg->add_option("--width", width, "Width in pixels")->check(CLI::PositiveNumber);

  std::uint64_t prime = 7, seed = 1;
  std::string mode = "exhaustive", laws = "all", sweep_format = "json";
  unsigned jobs = 1;
  bool timing = false;
  auto* sweep = app.add_subcommand("sweep", "Check every theorem over F_p");
  sweep->add_option("--prime", prime, "Odd prime modulus")->required();
  sweep->add_option("--mode", mode, "exhaustive (default) or random:<n>");
  sweep->add_option("--laws", laws,
                    "Comma list of check groups: laws, identities, altitudes, centers, euler, omega, circles; or all");
  sweep->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
  sweep->add_option("--seed", seed, "Seed for random mode");
  sweep->add_option("--format", sweep_format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
  sweep->add_flag("--timing", timing, "Include elapsed_seconds in the JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (*report) return cmd_report(points, field, format);
  if (*svg) return cmd_svg(svg_points, elements, out_path, width);
  if (*sweep) return cmd_sweep(prime, mode, laws, jobs, seed, sweep_format, timing);
  return kExitParse;
}
