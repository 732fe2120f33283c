#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "cli/cli.hpp"

namespace cesent::cli {

namespace {

std::string family_name(cesent_family f) { return f == CESENT_RADIAL3D ? "radial" : "linear"; }
std::string sector_name(cesent_sector s) { return s == CESENT_PLUS ? "plus" : "minus"; }

std::string sci(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("refusing to serialize a non-finite value");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

const char* const kReportColumns[] = {"family", "sector", "n",      "l",      "s_pos",  "s_mom",
                                      "sum",    "bound",  "margin", "err_pos", "err_mom"};

std::vector<std::string> report_values(const cesent_report& r, bool quote_strings) {
  const auto str = [&](const std::string& s) { return quote_strings ? quoted(s) : s; };
  return {str(family_name(r.spec.family)),
          str(sector_name(r.spec.sector)),
          std::to_string(r.spec.n),
          std::to_string(r.spec.family == CESENT_RADIAL3D ? r.spec.l : 0),
          fixed6(r.s_pos),
          fixed6(r.s_mom),
          fixed6(r.sum),
          fixed6(r.bbm_bound),
          fixed6(r.margin),
          fixed6(r.err_pos),
          fixed6(r.err_mom)};
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string md_row(const std::vector<std::string>& cells) { return "| " + join(cells, " | ") + " |\n"; }

std::string md_rule(size_t n) {
  std::string out = "|";
  for (size_t i = 0; i < n; ++i) out += "---|";
  return out + "\n";
}

}  // namespace

std::string fixed6(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("refusing to serialize a non-finite value");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string format_report(const cesent_report& r, Format fmt) {
  const std::vector<std::string> keys(std::begin(kReportColumns), std::end(kReportColumns));
  switch (fmt) {
    case Format::json: {
      const std::vector<std::string> vals = report_values(r, true);
      std::vector<std::string> pairs;
      for (size_t i = 0; i < keys.size(); ++i) pairs.push_back(quoted(keys[i]) + ": " + vals[i]);
      return "{" + join(pairs, ", ") + "}\n";
    }
    case Format::csv:
      return join(keys, ",") + "\n" + join(report_values(r, false), ",") + "\n";
    case Format::md:
      return md_row(keys) + md_rule(keys.size()) + md_row(report_values(r, false));
  }
  return {};
}

std::string format_table(const TableData& t, Format fmt, bool compare) {
  std::vector<std::string> header{"n"};
  for (const auto& c : t.columns) header.push_back(c);
  if (compare)
    for (const auto& c : t.columns) header.push_back(c + "_dev");

  const std::string absent = fmt == Format::json ? "null" : fmt == Format::csv ? "" : "-";
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < t.cells.size(); ++i) {
    std::vector<std::string> row{std::to_string(t.n[i])};
    for (const auto& cell : t.cells[i]) row.push_back(cell ? fixed6(*cell) : absent);
    if (compare) {
      for (size_t j = 0; j < t.cells[i].size(); ++j) {
        const auto& c = t.cells[i][j];
        const auto& g = t.golden[i][j];
        row.push_back(c && g ? fixed6(*c - *g) : absent);
      }
    }
    rows.push_back(std::move(row));
  }

  std::ostringstream out;
  switch (fmt) {
    case Format::json: {
      out << "{\"table\": " << t.id << ", \"rows\": [\n";
      for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> pairs;
        for (size_t j = 0; j < header.size(); ++j) pairs.push_back(quoted(header[j]) + ": " + rows[i][j]);
        out << "  {" << join(pairs, ", ") << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
      }
      out << "]}\n";
      break;
    }
    case Format::csv:
      out << join(header, ",") << "\n";
      for (const auto& r : rows) out << join(r, ",") << "\n";
      break;
    case Format::md:
      out << md_row(header) << md_rule(header.size());
      for (const auto& r : rows) out << md_row(r);
      break;
  }
  return out.str();
}

std::string format_plot(const PlotData& d, Format fmt) {
  const size_t n = d.x.size();
  std::ostringstream out;
  switch (fmt) {
    case Format::json: {
      const auto array = [&](const std::vector<double>& v) {
        std::vector<std::string> s;
        for (double x : v) s.push_back(sci(x));
        return "[" + join(s, ", ") + "]";
      };
      out << "{\"x\": " << array(d.x) << ",\n \"pos_density\": " << array(d.pos_density) << ",\n \"p\": "
          << array(d.p) << ",\n \"mom_density\": " << array(d.mom_density) << "}\n";
      break;
    }
    case Format::csv:
      out << "x,pos_density,p,mom_density\n";
      for (size_t i = 0; i < n; ++i)
        out << sci(d.x[i]) << "," << sci(d.pos_density[i]) << "," << sci(d.p[i]) << "," << sci(d.mom_density[i])
            << "\n";
      break;
    case Format::md:
      // Whitespace-separated columns, gnuplot-style comment header.
      out << "# x pos_density p mom_density\n";
      for (size_t i = 0; i < n; ++i)
        out << sci(d.x[i]) << " " << sci(d.pos_density[i]) << " " << sci(d.p[i]) << " " << sci(d.mom_density[i])
            << "\n";
      break;
  }
  return out.str();
}

}  // namespace cesent::cli
