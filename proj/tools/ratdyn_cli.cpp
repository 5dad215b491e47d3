#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ratdyn/errors.hpp"
#include "ratdyn/render.hpp"
#include "ratdyn/report.hpp"

int main(int argc, char** argv) {
  using namespace ratdyn;
  CLI::App app{"Rational map analyzer"};
  app.require_subcommand(1);
  auto* analyze = app.add_subcommand("analyze", "Analyze a rational map given as JSON");
  std::string map_path, config_path, out_path, render_path;
  bool text = false;
  int max_period = 0, ro_depth = 0, preimage_depth = 0, budget = 0;
  double tolerance = 0.0;
  analyze->add_option("map", map_path, "map JSON: {\"numerator\": [...], \"denominator\": [...]}")->required();
  analyze->add_option("--config", config_path, "config JSON");
  analyze->add_option("--out", out_path, "write the JSON report here instead of stdout");
  analyze->add_flag("--text", text, "print the text report");
  analyze->add_option("--render", render_path, "write an attraction-time image (binary PPM)");
  analyze->add_option("--max-period", max_period, "override max_period");
  analyze->add_option("--ro-depth", ro_depth, "override ro_depth");
  analyze->add_option("--preimage-depth", preimage_depth, "override preimage_depth");
  analyze->add_option("--budget", budget, "override orbit_budget");
  analyze->add_option("--tolerance", tolerance, "override tolerance");
  CLI11_PARSE(app, argc, argv);

  try {
    AnalysisConfig cfg;
    if (!config_path.empty()) cfg = config_from_json(read_json_file(config_path));
    Json overrides = Json::object();
    if (max_period) overrides["max_period"] = max_period;
    if (ro_depth) overrides["ro_depth"] = ro_depth;
    if (preimage_depth) overrides["preimage_depth"] = preimage_depth;
    if (budget) overrides["orbit_budget"] = budget;
    if (tolerance > 0.0) overrides["tolerance"] = tolerance;
    merge_config(cfg, overrides);

    const Json map_doc = read_json_file(map_path);
    ParsedMap parsed = parse_map(map_doc, cfg.tolerance);
    Analysis a = run_analysis(parsed.map, cfg);
    a.notices = parsed.notices;
    const std::string report = report_json(a, map_doc).dump(2) + "\n";

    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw Error(ErrorCode::Io, "cannot write " + out_path);
      out << report;
    } else if (!text) {
      std::cout << report;
    }
    if (text) std::cout << report_text(a);

    if (!render_path.empty()) {
      const RenderConfig rc = cfg.render.value_or(RenderConfig{});
      const Image img = render_julia(a.map, attractors_of(a.cycles), rc);
      std::ofstream out(render_path, std::ios::binary);
      if (!out) throw Error(ErrorCode::Io, "cannot write " + render_path);
      write_ppm(img, out);
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::Io ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
