#include "quadgait/trace_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace quadgait {

std::size_t TraceTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no column '" + std::string(name) + "'");
}

std::vector<double> TraceTable::column(std::string_view name) const {
  const std::size_t i = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[i]);
  return out;
}

std::vector<std::string> trace_columns() {
  std::vector<std::string> cols{"t", "body_x", "body_y", "body_z", "body_yaw"};
  for (int i = 1; i <= 4; ++i) {
    const std::string p = "leg" + std::to_string(i) + "_";
    for (const char* s : {"x", "y", "z", "support"}) cols.push_back(p + s);
  }
  cols.push_back("margin");
  return cols;
}

TraceTable trace_table(const SimTrace& trace) {
  TraceTable table;
  table.header = trace_columns();
  table.rows.reserve(trace.samples.size());
  for (const SimSample& s : trace.samples) {
    std::vector<double> row{s.t, s.state.body.position.x(), s.state.body.position.y(), s.state.body.position.z(),
                            s.state.body.yaw};
    for (Leg leg : kAllLegs) {
      const Vec3& f = s.state.foot(leg);
      row.insert(row.end(), {f.x(), f.y(), f.z(), s.state.supporting(leg) ? 1.0 : 0.0});
    }
    row.push_back(s.margin);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

std::string format_trace_csv(const SimTrace& trace) {
  const TraceTable table = trace_table(trace);
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  const std::size_t n = table.header.size();
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out += ',';
      // Support flags are written as integers.
      const bool flag = i >= 5 && i < n - 1 && (i - 5) % 4 == 3;
      out += flag ? (row[i] != 0.0 ? "1" : "0") : format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path) {
  const std::string text = format_trace_csv(trace);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

TraceTable parse_trace_csv(std::string_view text) {
  TraceTable table;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t f = 0;
    while (true) {
      const auto comma = line.find(',', f);
      fields.push_back(line.substr(f, comma == std::string_view::npos ? std::string_view::npos : comma - f));
      if (comma == std::string_view::npos) break;
      f = comma + 1;
    }
    if (first) {
      for (auto h : fields) table.header.emplace_back(h);
      first = false;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw std::invalid_argument("row " + std::to_string(table.rows.size() + 1) + " has " +
                                  std::to_string(fields.size()) + " fields");
    }
    std::vector<double> row(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto [ptr, ec] = std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), row[i]);
      if (ec != std::errc() || ptr != fields[i].data() + fields[i].size()) {
        throw std::invalid_argument("bad number '" + std::string(fields[i]) + "'");
      }
    }
    table.rows.push_back(std::move(row));
  }
  if (first) throw std::invalid_argument("missing header");
  return table;
}

TraceTable read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trace_csv(buf.str());
}

}  // namespace quadgait
