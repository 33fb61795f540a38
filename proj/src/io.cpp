#include "ryser/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace ryser {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view field, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line_no, "expected an integer, got '" + std::string(field) + "'");
  return value;
}

}  // namespace

PartiteHypergraph parse_instance(std::string_view text, bool allow_duplicates) {
  std::vector<int> sizes;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  bool have_header = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!have_header) {
      if (fields.front() != "parts") throw ParseError(line_no, "expected header 'parts k_1 ... k_r'");
      if (fields.size() < 2) throw ParseError(line_no, "header lists no parts");
      for (std::size_t i = 1; i < fields.size(); ++i) {
        int k = parse_int(fields[i], line_no);
        if (k <= 0) throw ParseError(line_no, "part sizes must be positive");
        sizes.push_back(k);
      }
      have_header = true;
      continue;
    }

    if (fields.size() != sizes.size())
      throw ParseError(line_no, "edge has " + std::to_string(fields.size()) + " entries, expected " +
                                    std::to_string(sizes.size()));
    Edge e(sizes.size());
    for (std::size_t p = 0; p < fields.size(); ++p) {
      int j = parse_int(fields[p], line_no);
      if (j < 1 || j > sizes[p])
        throw ParseError(line_no, "vertex " + std::to_string(j) + " is out of range for part " +
                                      std::to_string(p + 1) + " (size " + std::to_string(sizes[p]) + ")");
      e[p] = j - 1;
    }
    if (!allow_duplicates && !seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(line_no, "missing 'parts' header");

  return PartiteHypergraph(std::move(sizes), std::move(edges), allow_duplicates);
}

PartiteHypergraph read_instance(std::istream& in, bool allow_duplicates) {
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), allow_duplicates);
}

PartiteHypergraph load_instance(const std::filesystem::path& path, bool allow_duplicates) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_instance(in, allow_duplicates);
}

std::string format_instance(const PartiteHypergraph& h) {
  std::string out = "parts";
  for (int k : h.part_sizes()) out += " " + std::to_string(k);
  out += '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t p = 0; p < e.size(); ++p) {
      if (p) out += ' ';
      out += std::to_string(e[p] + 1);
    }
    out += '\n';
  }
  return out;
}

void write_instance(std::ostream& out, const PartiteHypergraph& h) { out << format_instance(h); }

}  // namespace ryser
