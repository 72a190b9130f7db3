#include "cli_support.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace pwcli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void ConfigEcho::set(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}
void ConfigEcho::set(const std::string& key, double value) {
  entries_.emplace_back(key, format_double(value));
}
void ConfigEcho::set(const std::string& key, uint64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}
void ConfigEcho::set_int(const std::string& key, int64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}

std::string ConfigEcho::line(const std::string& subcommand) const {
  std::string out = subcommand;
  for (const auto& [k, v] : entries_) {
    out += ' ';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

std::string render_csv(const std::string& config_line,
                       const std::vector<CsvColumn>& columns) {
  std::string out = "# primewave " + config_line + "\n";
  for (size_t c = 0; c < columns.size(); ++c) {
    out += columns[c].name;
    out += (c + 1 < columns.size()) ? ',' : '\n';
  }
  size_t rows = columns.empty() ? 0 : columns[0].values.size();
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < columns.size(); ++c) {
      out += format_double(columns[c].values[r]);
      out += (c + 1 < columns.size()) ? ',' : '\n';
    }
  }
  return out;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
      out += ch;
    } else if (ch == '\n') {
      out += "\\n";
    } else {
      out += ch;
    }
  }
  return out;
}

}  // namespace

JsonReport::JsonReport(const std::string& config_line) {
  entries_.emplace_back("config",
                        '"' + json_escape("primewave " + config_line) + '"');
}
void JsonReport::add(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, '"' + json_escape(value) + '"');
}
void JsonReport::add(const std::string& key, double value) {
  entries_.emplace_back(key, format_double(value));
}
void JsonReport::add(const std::string& key, uint64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}
void JsonReport::add(const std::string& key, int64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}
void JsonReport::add(const std::string& key, bool value) {
  entries_.emplace_back(key, value ? "true" : "false");
}
void JsonReport::add_pairs(
    const std::string& key,
    const std::vector<std::pair<double, double>>& pairs) {
  std::string v = "[";
  for (size_t i = 0; i < pairs.size(); ++i) {
    v += '[' + format_double(pairs[i].first) + ',' +
         format_double(pairs[i].second) + ']';
    if (i + 1 < pairs.size()) v += ',';
  }
  v += ']';
  entries_.emplace_back(key, v);
}

std::string JsonReport::render() const {
  std::string out = "{\n";
  for (size_t i = 0; i < entries_.size(); ++i) {
    out += "  \"" + entries_[i].first + "\": " + entries_[i].second;
    if (i + 1 < entries_.size()) out += ',';
    out += '\n';
  }
  out += "}\n";
  return out;
}

namespace {

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::string& config_line,
                       const std::vector<SvgSeries>& series,
                       const std::string& x_label,
                       const std::string& y_label) {
  const double width = 960, height = 600;
  const double ml = 70, mr = 20, mt = 20, mb = 50;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& s : series)
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (first) {
        xmin = xmax = s.x[i];
        ymin = ymax = s.y[i];
        first = false;
      }
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;
  auto px = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
  };
  auto py = [&](double y) {
    return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
  };

  static const char* palette[] = {"#1a1a1a", "#888888", "#c03030", "#3060c0"};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- primewave " << config_line << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
      << width - mr << "\" y2=\"" << height - mb
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << height - mb
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    double fx = xmin + (xmax - xmin) * i / 5.0;
    double fy = ymin + (ymax - ymin) * i / 5.0;
    out << "<text x=\"" << px(fx) << "\" y=\"" << height - mb + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << svg_num(fx)
        << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << py(fy) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << svg_num(fy)
        << "</text>\n";
    out << "<line x1=\"" << px(fx) << "\" y1=\"" << height - mb << "\" x2=\""
        << px(fx) << "\" y2=\"" << height - mb + 4
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml - 4 << "\" y1=\"" << py(fy) << "\" x2=\"" << ml
        << "\" y2=\"" << py(fy) << "\" stroke=\"black\"/>\n";
  }
  out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
      << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  out << "<text x=\"16\" y=\"" << (mt + height - mb) / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "16 "
      << (mt + height - mb) / 2 << ")\">" << y_label << "</text>\n";

  for (size_t s = 0; s < series.size(); ++s) {
    out << "<polyline fill=\"none\" stroke=\"" << palette[s % 4]
        << "\" stroke-width=\"0.8\" points=\"";
    for (size_t i = 0; i < series[s].x.size(); ++i) {
      if (!std::isfinite(series[s].x[i]) || !std::isfinite(series[s].y[i]))
        continue;
      out << svg_num(px(series[s].x[i])) << ',' << svg_num(py(series[s].y[i]))
          << ' ';
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + tmp);
    f.write(content.data(), std::streamsize(content.size()));
    if (!f) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

GraphData read_graph_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  GraphData g;
  std::string line;
  bool header_seen = false;
  size_t t_col = 0, re_col = 1;
  std::optional<size_t> im_col;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    if (!header_seen) {
      header_seen = true;
      bool named = false;
      for (size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "t") {
          t_col = i;
          named = true;
        } else if (fields[i] == "re") {
          re_col = i;
        } else if (fields[i] == "im") {
          im_col = i;
        }
      }
      if (named) continue;  // header row consumed
      // no named header: fall through and parse as data
    }
    if (fields.size() <= std::max(t_col, re_col))
      throw std::runtime_error("graph csv: short row");
    g.t.push_back(std::stod(fields[t_col]));
    g.re.push_back(std::stod(fields[re_col]));
    g.im.push_back(im_col && *im_col < fields.size()
                       ? std::stod(fields[*im_col])
                       : 0.0);
  }
  if (g.t.size() < 2) throw std::runtime_error("graph csv: too few rows");
  g.t_start = g.t.front();
  g.t_end = g.t.back();
  double h = (g.t_end - g.t_start) / double(g.t.size() - 1);
  for (size_t i = 0; i < g.t.size(); ++i) {
    double expect = g.t_start + double(i) * h;
    if (std::abs(g.t[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)))
      throw std::runtime_error("graph csv: t grid is not uniform");
  }
  return g;
}

}  // namespace pwcli
