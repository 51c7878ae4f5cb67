#include "tvsc/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tvsc::io {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  return in;
}

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line, const std::string& msg) {
  throw FormatError(path.string() + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse(std::string_view s, T& v) {
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

std::string format_real(double v) {
  std::array<char, 64> buf{};
  const auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}

void write_tvg(const std::filesystem::path& path, const TVGraphSequence& seq) {
  auto out = open_out(path);
  out << "tvg 1 " << seq.n() << ' ' << seq.t_len() << '\n';
  for (std::size_t t = 0; t < seq.t_len(); ++t) {
    for (const Edge& e : seq[t].edges()) {
      out << t << ' ' << e.i << ' ' << e.j << ' ' << format_real(e.w) << '\n';
    }
  }
  if (!out) throw FormatError("write failed: " + path.string());
}

TVGraphSequence read_tvg(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) fail(path, 1, "empty file");
  auto head = split_ws(line);
  std::size_t n = 0, T = 0;
  if (head.size() != 4 || head[0] != "tvg" || head[1] != "1" || !parse(head[2], n) ||
      !parse(head[3], T)) {
    fail(path, 1, "expected header 'tvg 1 N T'");
  }
  if (T == 0) fail(path, 1, "T must be positive");
  std::vector<std::vector<Edge>> edges(T);
  std::size_t lineno = 1, last_t = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto f = split_ws(line);
    if (f.empty()) continue;
    std::size_t t = 0;
    Edge e;
    if (f.size() != 4 || !parse(f[0], t) || !parse(f[1], e.i) || !parse(f[2], e.j) ||
        !parse(f[3], e.w)) {
      fail(path, lineno, "expected 't i j w'");
    }
    if (t >= T) fail(path, lineno, "frame index out of range");
    if (t < last_t) fail(path, lineno, "frames must be in ascending order");
    last_t = t;
    edges[t].push_back(e);
  }
  std::vector<WeightedGraph> graphs;
  graphs.reserve(T);
  try {
    for (auto& es : edges) graphs.emplace_back(n, std::move(es));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(path.string() + ": " + ex.what());
  }
  return TVGraphSequence(std::move(graphs));
}

void write_labels(const std::filesystem::path& path, const LabelSequence& labels) {
  auto out = open_out(path);
  out << "lbl 1 " << labels.n() << ' ' << labels.t_len() << ' ' << labels.k() << '\n';
  for (std::size_t t = 0; t < labels.t_len(); ++t) {
    const auto f = labels.frame(t);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << f[i];
    }
    out << '\n';
  }
  if (!out) throw FormatError("write failed: " + path.string());
}

LabelSequence read_labels(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) fail(path, 1, "empty file");
  auto head = split_ws(line);
  std::size_t n = 0, T = 0;
  int k = 0;
  if (head.size() != 5 || head[0] != "lbl" || head[1] != "1" || !parse(head[2], n) ||
      !parse(head[3], T) || !parse(head[4], k)) {
    fail(path, 1, "expected header 'lbl 1 N T K'");
  }
  std::vector<int> values;
  values.reserve(n * T);
  std::size_t lineno = 1, rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto f = split_ws(line);
    if (f.empty()) continue;
    if (f.size() != n) fail(path, lineno, "expected " + std::to_string(n) + " labels");
    for (auto s : f) {
      int v = 0;
      if (!parse(s, v)) fail(path, lineno, "non-integer label '" + std::string(s) + "'");
      values.push_back(v);
    }
    ++rows;
  }
  if (rows != T) fail(path, lineno, "expected " + std::to_string(T) + " frames, found " + std::to_string(rows));
  try {
    return LabelSequence(n, T, k, std::move(values));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(path.string() + ": " + ex.what());
  }
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  auto out = open_out(path);
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_real(row[c]);
    out << '\n';
  }
  if (!out) throw FormatError("write failed: " + path.string());
}

void write_svg_lines(const std::filesystem::path& path, const std::string& title,
                     const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& series, double y_min, double y_max) {
  constexpr double W = 640, H = 400, L = 60, R = 150, Tm = 40, B = 50;
  static constexpr std::array<const char*, 6> colors = {"#1f77b4", "#d62728", "#2ca02c",
                                                        "#ff7f0e", "#9467bd", "#8c564b"};
  std::size_t len = 0;
  for (const auto& s : series) len = std::max(len, s.size());
  const double span = y_max > y_min ? y_max - y_min : 1.0;
  auto px = [&](std::size_t i) {
    return L + (len > 1 ? static_cast<double>(i) / static_cast<double>(len - 1) : 0.0) * (W - L - R);
  };
  auto py = [&](double v) { return Tm + (1.0 - (v - y_min) / span) * (H - Tm - B); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
  svg << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << L << "\" y1=\"" << Tm << "\" x2=\"" << L << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double v = y_min + span * tick / 4.0;
    svg << "<text x=\"" << L - 6 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\">"
        << format_real(std::round(v * 1000.0) / 1000.0) << "</text>\n";
  }
  svg << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">t</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = colors[s % colors.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[s].size(); ++i) {
      svg << (i ? " " : "") << px(i) << ',' << py(series[s][i]);
    }
    svg << "\"/>\n";
    const double ly = Tm + 16.0 * static_cast<double>(s);
    svg << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 30 << "\" y2=\""
        << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << W - R + 35 << "\" y=\"" << ly + 4 << "\">"
        << (s < names.size() ? names[s] : "") << "</text>\n";
  }
  svg << "</svg>\n";
  auto out = open_out(path);
  out << svg.str();
}

}  // namespace tvsc::io
