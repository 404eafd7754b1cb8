#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quadgait/simulator.hpp"

namespace quadgait {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Column-major view of a trace as written to CSV.
struct TraceTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(std::string_view name) const;
  std::vector<double> column(std::string_view name) const;
};

/// t, body_x, body_y, body_z, body_yaw, leg{i}_x, leg{i}_y, leg{i}_z,
/// leg{i}_support for i = 1..4, margin.
std::vector<std::string> trace_columns();

TraceTable trace_table(const SimTrace& trace);

/// Shortest round-trip decimal form, independent of the locale.
std::string format_number(double value);

std::string format_trace_csv(const SimTrace& trace);
void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path);

/// Throws IoError when the file cannot be read and std::invalid_argument on
/// malformed content.
TraceTable parse_trace_csv(std::string_view text);
TraceTable read_trace_csv(const std::filesystem::path& path);

}  // namespace quadgait
