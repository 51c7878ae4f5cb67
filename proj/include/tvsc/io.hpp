#pragma once

// Text file formats.
//
//   TV-graph file:  "tvg 1 N T", then one "t i j w" line per edge
//                   (0-based, ascending t, then i < j ascending).
//   Labels file:    "lbl 1 N T K", then T lines of N space-separated labels.
//
// All files are UTF-8 with LF line endings. Reals are written with 17
// significant digits so that reading back reproduces the same doubles.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvsc/graph.hpp"
#include "tvsc/labels.hpp"

namespace tvsc::io {

/// Parse or I/O failure in a project file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_tvg(const std::filesystem::path& path, const TVGraphSequence& seq);
TVGraphSequence read_tvg(const std::filesystem::path& path);

void write_labels(const std::filesystem::path& path, const LabelSequence& labels);
LabelSequence read_labels(const std::filesystem::path& path);

/// Shortest decimal form that round-trips (std::to_chars).
std::string format_real(double v);

/// Writes header + rows as comma-separated values.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Simple line chart: one polyline per series over x = 1..len.
void write_svg_lines(const std::filesystem::path& path, const std::string& title,
                     const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& series, double y_min, double y_max);

}  // namespace tvsc::io
