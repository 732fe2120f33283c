#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cesent/cesent.h"

namespace cesent::cli {

enum class Mode { state, table, plotdata };
enum class Format { json, csv, md };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // BBM violated, or --compare deviation > 0.01
inline constexpr int kExitNumerics = 2;     // quadrature / transform failure
inline constexpr int kExitInvalid = 3;      // invalid state or arguments

struct RunRequest {
  Mode mode = Mode::state;
  cesent_state_spec spec{CESENT_LINEAR1D, CESENT_PLUS, 0, 0};
  int table_id = 0;
  Format format = Format::json;
  bool compare = false;
  std::optional<std::string> output_path;
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::optional<int> max_panels;
  int threads = 1;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;       // data for stdout / --out
  std::string diagnostics;  // messages for stderr
};

RunResult run_state(const RunRequest& req);
RunResult run_table(const RunRequest& req);
RunResult run_plotdata(const RunRequest& req);
RunResult run(const RunRequest& req);

// Parses argv into a request; on failure returns a result carrying the exit
// code (0 for --help) and message.
struct Parsed {
  std::optional<RunRequest> request;
  RunResult early;
};
Parsed parse_args(int argc, const char* const* argv);

int main_entry(int argc, const char* const* argv);

// Serialization.
inline constexpr int kPlotPoints = 512;

std::string format_report(const cesent_report& r, Format fmt);

struct TableData {
  int id = 0;
  std::vector<std::string> columns;
  std::vector<int> n;
  std::vector<std::vector<std::optional<double>>> cells;
  std::vector<std::vector<std::optional<double>>> golden;
};

std::string format_table(const TableData& t, Format fmt, bool compare);

struct PlotData {
  std::vector<double> x, pos_density, p, mom_density;
};

std::string format_plot(const PlotData& d, Format fmt);

// Fixed 6-fractional-digit decimal, never NaN/Inf (throws instead).
std::string fixed6(double v);

}  // namespace cesent::cli
