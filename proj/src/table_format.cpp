#include "kingdom/table_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kingdom/errors.hpp"

namespace kingdom {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("bad integer '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  Range r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.first > r.last) throw ParseError("range '" + std::string(text) + "' is empty");
  if (r.first < 0) throw ParseError("range '" + std::string(text) + "' has negative sides");
  return r;
}

std::string render_text(const ValueTable& table, const std::vector<std::vector<bool>>* marks) {
  std::vector<std::vector<std::string>> grid;
  auto& header = grid.emplace_back();
  header.push_back("n\\m");
  for (int m : table.ms) header.push_back(std::to_string(m));
  for (std::size_t r = 0; r < table.ns.size(); ++r) {
    auto& row = grid.emplace_back();
    row.push_back(std::to_string(table.ns[r]));
    for (std::size_t c = 0; c < table.ms.size(); ++c) {
      std::string cell = table.cells[r][c].get_str();
      if (marks && !(*marks)[r][c]) cell += '!';
      row.push_back(std::move(cell));
    }
  }

  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_csv(const ValueTable& table) {
  std::ostringstream out;
  out << "n\\m";
  for (int m : table.ms) out << ',' << m;
  out << '\n';
  for (std::size_t r = 0; r < table.ns.size(); ++r) {
    out << table.ns[r];
    for (const auto& v : table.cells[r]) out << ',' << v.get_str();
    out << '\n';
  }
  return out.str();
}

ValueTable parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty CSV");

  const auto header = split(lines[0], ',');
  if (header[0] != "n\\m") throw ParseError("CSV header must start with n\\m");
  ValueTable table;
  for (std::size_t c = 1; c < header.size(); ++c) table.ms.push_back(parse_int(header[c]));

  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = split(lines[r], ',');
    if (fields.size() != header.size())
      throw ParseError("CSV row " + std::to_string(r) + " has " + std::to_string(fields.size()) +
                       " fields, expected " + std::to_string(header.size()));
    table.ns.push_back(parse_int(fields[0]));
    auto& row = table.cells.emplace_back();
    for (std::size_t c = 1; c < fields.size(); ++c) {
      BigInt v;
      if (fields[c].empty() || v.set_str(std::string(fields[c]), 10) != 0)
        throw ParseError("bad CSV value '" + std::string(fields[c]) + "'");
      row.push_back(std::move(v));
    }
  }
  return table;
}

}  // namespace kingdom
