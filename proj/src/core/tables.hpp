#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/entropy.hpp"

namespace cesent {

// Regenerates the three published entropy tables. Table 1: radial minus
// sector; Table 2: both radial sectors at equal n; Table 3: linear family,
// minus state n against plus state n-1 (absent for n = 0).
struct EntropyTable {
  int id = 0;
  std::vector<std::string> columns;  // value columns, excluding n
  std::vector<int> n;
  std::vector<std::vector<std::optional<double>>> cells;
  std::vector<std::vector<std::optional<double>>> golden;  // published values
  std::vector<EntropyReport> reports;                      // every state computed
};

inline constexpr double kTableTolerance = 0.01;

EntropyTable compute_table(int id, const QuadratureConfig& cfg, int threads = 1);

// Largest |computed - published| over all cells that have both.
double max_table_deviation(const EntropyTable& table);

}  // namespace cesent
