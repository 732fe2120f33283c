#include "core/tables.hpp"

#include <cmath>
#include <exception>
#include <future>
#include <map>
#include <numbers>

#include "core/error.hpp"

namespace cesent {

namespace {

using Row = std::vector<std::optional<double>>;

struct Layout {
  std::vector<std::string> columns;
  std::vector<Row> golden;
  std::vector<StateSpec> states;
};

StateSpec radial(Sector s, int n) { return {Family::radial3d, s, n, 0}; }
StateSpec linear(Sector s, int n) { return {Family::linear1d, s, n, 0}; }

Layout layout(int id) {
  Layout t;
  switch (id) {
    case 1:
      t.columns = {"s_pos_minus", "s_mom_minus", "sum_minus", "bbm_bound"};
      t.golden = {{3.361, 3.646, 6.917, 6.434},
                  {4.015, 4.199, 8.214, 6.434},
                  {4.568, 4.628, 9.196, 6.434},
                  {4.822, 4.954, 9.776, 6.434}};
      for (int n = 0; n < 4; ++n) t.states.push_back(radial(Sector::minus, n));
      break;
    case 2:
      t.columns = {"s_pos_plus", "s_pos_minus", "s_mom_plus", "s_mom_minus"};
      t.golden = {{3.217, 3.361, 3.217, 3.646},
                  {4.151, 4.015, 4.151, 4.199},
                  {4.709, 4.568, 4.709, 4.628},
                  {5.109, 4.822, 5.109, 4.954}};
      for (int n = 0; n < 4; ++n) {
        t.states.push_back(radial(Sector::plus, n));
        t.states.push_back(radial(Sector::minus, n));
      }
      break;
    case 3:
      t.columns = {"s_pos_plus_prev", "s_mom_plus_prev", "sum_plus_prev", "s_pos_minus",
                   "s_mom_minus",     "sum_minus",       "bbm_bound"};
      t.golden = {{std::nullopt, std::nullopt, std::nullopt, 0.479, 1.679, 2.158, 2.144},
                  {1.072, 1.072, 2.144, 1.261, 1.607, 2.868, 2.144},
                  {1.343, 1.343, 2.686, 1.425, 1.578, 3.003, 2.144},
                  {1.499, 1.499, 2.998, 1.578, 1.748, 3.326, 2.144}};
      for (int n = 0; n < 4; ++n) {
        t.states.push_back(linear(Sector::minus, n));
        if (n > 0) t.states.push_back(linear(Sector::plus, n - 1));
      }
      break;
    default:
      throw InvalidArgument("table id must be 1, 2 or 3");
  }
  return t;
}

struct SpecLess {
  bool operator()(const StateSpec& a, const StateSpec& b) const {
    return std::tie(a.family, a.sector, a.n, a.l) < std::tie(b.family, b.sector, b.n, b.l);
  }
};

}  // namespace

EntropyTable compute_table(int id, const QuadratureConfig& cfg, int threads) {
  Layout t = layout(id);
  EntropyTable out;
  out.id = id;
  out.columns = t.columns;
  out.golden = t.golden;

  out.reports.resize(t.states.size());
  if (threads <= 1) {
    for (size_t i = 0; i < t.states.size(); ++i) out.reports[i] = entropy_report(t.states[i], cfg);
  } else {
    // Rows are independent; results are stored by index so output order is fixed.
    std::vector<std::future<EntropyReport>> jobs;
    size_t next = 0;
    while (next < t.states.size()) {
      const size_t batch_end = std::min(t.states.size(), next + static_cast<size_t>(threads));
      jobs.clear();
      for (size_t i = next; i < batch_end; ++i) {
        jobs.push_back(std::async(std::launch::async, [&, i] { return entropy_report(t.states[i], cfg); }));
      }
      for (size_t i = next; i < batch_end; ++i) out.reports[i] = jobs[i - next].get();
      next = batch_end;
    }
  }

  std::map<StateSpec, const EntropyReport*, SpecLess> by_spec;
  for (const EntropyReport& r : out.reports) by_spec[r.spec] = &r;
  const auto get = [&](const StateSpec& s) -> const EntropyReport& { return *by_spec.at(s); };

  for (int n = 0; n < 4; ++n) {
    out.n.push_back(n);
    Row row;
    if (id == 1) {
      const EntropyReport& m = get(radial(Sector::minus, n));
      row = {m.s_pos, m.s_mom, m.sum, m.bbm_bound};
    } else if (id == 2) {
      const EntropyReport& p = get(radial(Sector::plus, n));
      const EntropyReport& m = get(radial(Sector::minus, n));
      row = {p.s_pos, m.s_pos, p.s_mom, m.s_mom};
    } else {
      const EntropyReport& m = get(linear(Sector::minus, n));
      if (n == 0) {
        row = {std::nullopt, std::nullopt, std::nullopt, m.s_pos, m.s_mom, m.sum, m.bbm_bound};
      } else {
        const EntropyReport& p = get(linear(Sector::plus, n - 1));
        row = {p.s_pos, p.s_mom, p.sum, m.s_pos, m.s_mom, m.sum, m.bbm_bound};
      }
    }
    out.cells.push_back(std::move(row));
  }
  return out;
}

double max_table_deviation(const EntropyTable& table) {
  double worst = 0.0;
  for (size_t i = 0; i < table.cells.size(); ++i) {
    for (size_t j = 0; j < table.cells[i].size(); ++j) {
      if (table.cells[i][j] && table.golden[i][j]) {
        worst = std::max(worst, std::abs(*table.cells[i][j] - *table.golden[i][j]));
      }
    }
  }
  return worst;
}

}  // namespace cesent
