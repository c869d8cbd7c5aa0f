#pragma once

#include <string>
#include <vector>

namespace nmg {

/// %.17g, so values round-trip.
std::string fmt(double v);
inline std::string fmt(bool b) { return b ? "true" : "false"; }
inline std::string fmt(int v) { return std::to_string(v); }

using CsvRow = std::vector<std::string>;

void write_csv(const std::string& path, const CsvRow& header, const std::vector<CsvRow>& rows);
void write_text(const std::string& path, const std::string& content);

/// SHA-1 of "blob <size>\0<content>", as git hashes file contents.
std::string git_blob_sha1(const std::string& content);

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string label;
};

/// Minimal SVG line plot with axes and tick labels at the data range.
std::string svg_plot(const std::vector<Series>& series, const std::string& title, const std::string& xlabel,
                     const std::string& ylabel);

}  // namespace nmg
