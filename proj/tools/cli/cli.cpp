#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cli/handles.hpp"

namespace cesent::cli {

namespace {

int exit_code_for(cesent_status status) {
  return status == CESENT_ERR_INVALID_ARGUMENT ? kExitInvalid : kExitNumerics;
}

RunResult failure(const ApiError& e) { return {exit_code_for(e.status), {}, std::string("error: ") + e.what() + "\n"}; }

Config config_for(const RunRequest& req) {
  Config cfg = make_config();
  if (req.rel_tol) check(cesent_config_set_rel_tol(cfg.get(), *req.rel_tol));
  if (req.abs_tol) check(cesent_config_set_abs_tol(cfg.get(), *req.abs_tol));
  if (req.max_panels) check(cesent_config_set_max_panels(cfg.get(), *req.max_panels));
  return cfg;
}

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = a + (b - a) * i / (count - 1);
  return v;
}

}  // namespace

RunResult run_state(const RunRequest& req) {
  try {
    Config cfg = config_for(req);
    cesent_report report{};
    check(cesent_entropy_report(cfg.get(), &req.spec, &report));
    RunResult r;
    r.output = format_report(report, req.format);
    if (!report.bbm_satisfied) {
      r.exit_code = kExitCheckFailed;
      r.diagnostics = "BBM inequality violated (margin " + fixed6(report.margin) + ")\n";
    }
    return r;
  } catch (const ApiError& e) {
    return failure(e);
  }
}

RunResult run_table(const RunRequest& req) {
  if (req.table_id < 1 || req.table_id > 3) return {kExitInvalid, {}, "error: --table must be 1, 2 or 3\n"};
  try {
    Config cfg = config_for(req);
    Table table = make_table(cfg.get(), req.table_id, req.threads);
    TableData data;
    data.id = req.table_id;
    size_t rows = 0;
    size_t cols = 0;
    check(cesent_table_shape(table.get(), &rows, &cols));
    for (size_t j = 0; j < cols; ++j) {
      const char* name = nullptr;
      check(cesent_table_column_name(table.get(), j, &name));
      data.columns.emplace_back(name);
    }
    double worst = 0.0;
    for (size_t i = 0; i < rows; ++i) {
      int n = 0;
      check(cesent_table_row_n(table.get(), i, &n));
      data.n.push_back(n);
      std::vector<std::optional<double>> cells, golden;
      for (size_t j = 0; j < cols; ++j) {
        double v = 0.0, g = 0.0;
        int has_v = 0, has_g = 0;
        check(cesent_table_cell(table.get(), i, j, &v, &has_v));
        check(cesent_table_golden(table.get(), i, j, &g, &has_g));
        cells.push_back(has_v ? std::optional<double>(v) : std::nullopt);
        golden.push_back(has_g ? std::optional<double>(g) : std::nullopt);
        if (has_v && has_g) worst = std::max(worst, std::abs(v - g));
      }
      data.cells.push_back(std::move(cells));
      data.golden.push_back(std::move(golden));
    }

    RunResult r;
    r.output = format_table(data, req.format, req.compare);
    size_t count = 0;
    check(cesent_table_report_count(table.get(), &count));
    for (size_t k = 0; k < count; ++k) {
      cesent_report rep{};
      check(cesent_table_report(table.get(), k, &rep));
      if (!rep.bbm_satisfied) {
        r.exit_code = kExitCheckFailed;
        r.diagnostics += "BBM inequality violated for a table state\n";
      }
    }
    if (req.compare && worst > 0.01) {
      r.exit_code = kExitCheckFailed;
      r.diagnostics += "max deviation from published values " + fixed6(worst) + " exceeds 0.01\n";
    }
    return r;
  } catch (const ApiError& e) {
    return failure(e);
  }
}

RunResult run_plotdata(const RunRequest& req) {
  try {
    Config cfg = config_for(req);
    check(cesent_validate_spec(&req.spec));
    const bool radial = req.spec.family == CESENT_RADIAL3D;
    double x_radius = 0.0;
    check(cesent_state_radius(cfg.get(), &req.spec, &x_radius));
    Amplitude amp = make_amplitude(cfg.get(), req.spec);
    double p_radius = 0.0;
    check(cesent_amplitude_radius(amp.get(), &p_radius));

    PlotData d;
    d.x = linspace(radial ? 0.0 : -x_radius, x_radius, kPlotPoints);
    d.p = linspace(radial ? 0.0 : -p_radius, p_radius, kPlotPoints);
    for (double x : d.x) {
      double v = 0.0;
      check(cesent_psi_position(&req.spec, x, &v));
      d.pos_density.push_back(v * v);
    }
    for (double p : d.p) {
      double v = 0.0;
      check(cesent_amplitude_density(amp.get(), p, &v));
      d.mom_density.push_back(v);
    }
    return {kExitOk, format_plot(d, req.format), {}};
  } catch (const ApiError& e) {
    return failure(e);
  }
}

RunResult run(const RunRequest& req) {
  switch (req.mode) {
    case Mode::state: return run_state(req);
    case Mode::table: return run_table(req);
    case Mode::plotdata: return run_plotdata(req);
  }
  return {kExitInvalid, {}, "error: unknown mode\n"};
}

Parsed parse_args(int argc, const char* const* argv) {
  CLI::App app{"Shannon entropies and BBM check for oscillator-isospectral potentials", "cesent"};
  std::string family;
  std::string sector;
  std::optional<int> n;
  int l = 0;
  std::optional<int> table;
  std::string format = "json";
  bool compare = false;
  std::optional<double> tol;
  std::optional<double> abs_tol;
  std::optional<int> max_panels;
  std::optional<std::string> out;
  bool plot = false;
  int threads = 1;

  app.add_option("--family", family, "Model family")->check(CLI::IsMember({"radial", "linear"}));
  app.add_option("--sector", sector, "Partner sector")->check(CLI::IsMember({"plus", "minus"}));
  app.add_option("--n", n, "Quantum number n");
  app.add_option("--l", l, "Superpotential parameter l (radial family)");
  app.add_option("--table", table, "Regenerate a published table (1, 2 or 3)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_flag("--compare", compare, "Append deviations from the published values");
  app.add_option("--tol", tol, "Relative quadrature tolerance");
  app.add_option("--abs-tol", abs_tol, "Absolute quadrature tolerance");
  app.add_option("--max-panels", max_panels, "Panel budget of the adaptive quadrature");
  app.add_option("--out", out, "Write output to this file instead of stdout");
  app.add_flag("--plot-data", plot, "Emit sampled position/momentum densities");
  app.add_option("--threads", threads, "Worker threads for table rows");

  Parsed parsed;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    parsed.early = {kExitOk, app.help(), {}};
    return parsed;
  } catch (const CLI::ParseError& e) {
    parsed.early = {kExitInvalid, {}, std::string("error: ") + e.what() + "\n"};
    return parsed;
  }

  RunRequest req;
  req.format = format == "csv" ? Format::csv : format == "md" ? Format::md : Format::json;
  req.compare = compare;
  req.output_path = out;
  req.rel_tol = tol;
  req.abs_tol = abs_tol;
  req.max_panels = max_panels;
  req.threads = threads;
  if (table && plot) {
    parsed.early = {kExitInvalid, {}, "error: --table and --plot-data are mutually exclusive\n"};
    return parsed;
  }
  if (table) {
    req.mode = Mode::table;
    req.table_id = *table;
  } else {
    req.mode = plot ? Mode::plotdata : Mode::state;
    if (family.empty() || sector.empty() || !n) {
      parsed.early = {kExitInvalid, {}, "error: --family, --sector and --n are required\n"};
      return parsed;
    }
    req.spec.family = family == "radial" ? CESENT_RADIAL3D : CESENT_LINEAR1D;
    req.spec.sector = sector == "plus" ? CESENT_PLUS : CESENT_MINUS;
    req.spec.n = *n;
    req.spec.l = l;
  }
  parsed.request = req;
  return parsed;
}

int main_entry(int argc, const char* const* argv) {
  const Parsed parsed = parse_args(argc, argv);
  const RunResult result = parsed.request ? run(*parsed.request) : parsed.early;
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  if (!result.output.empty()) {
    if (parsed.request && parsed.request->output_path) {
      std::ofstream f(*parsed.request->output_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot open " << *parsed.request->output_path << "\n";
        return kExitInvalid;
      }
      f << result.output;
    } else {
      std::cout << result.output;
    }
  }
  return result.exit_code;
}

}  // namespace cesent::cli
