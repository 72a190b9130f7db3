#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Output plumbing for the primewave CLI: deterministic CSV/JSON/SVG emission
// with a replayable config echo, and CSV graph ingestion. Everything here is
// format handling; the math lives behind the C API.
namespace pwcli {

// 17 significant digits: doubles survive the decimal round trip bit-exactly
std::string format_double(double v);

// canonical "key=value key=value" line in insertion order
class ConfigEcho {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, uint64_t value);
  void set_int(const std::string& key, int64_t value);
  std::string line(const std::string& subcommand) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct CsvColumn {
  std::string name;
  std::vector<double> values;
};

std::string render_csv(const std::string& config_line,
                       const std::vector<CsvColumn>& columns);

// flat JSON object; keys emitted in insertion order, config first
class JsonReport {
 public:
  explicit JsonReport(const std::string& config_line);
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add(const std::string& key, uint64_t value);
  void add(const std::string& key, int64_t value);
  void add(const std::string& key, bool value);
  // histogram-style array of [x, y] pairs
  void add_pairs(const std::string& key,
                 const std::vector<std::pair<double, double>>& pairs);
  std::string render() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct SvgSeries {
  std::vector<double> x, y;
};

// polyline plot with axes; several series, fixed palette
std::string render_svg(const std::string& config_line,
                       const std::vector<SvgSeries>& series,
                       const std::string& x_label,
                       const std::string& y_label);

// temp file + rename; "-" writes to stdout
void write_output(const std::string& path, const std::string& content);

struct GraphData {
  double t_start = 0.0;
  double t_end = 0.0;
  std::vector<double> t, re, im;
};

// reads a t,re[,im] CSV produced by this tool (comment lines ignored);
// verifies the grid is uniform
GraphData read_graph_csv(const std::string& path);

}  // namespace pwcli
