#pragma once

// Instance text format:
//
//   parts k_1 k_2 ... k_r
//   j_1 j_2 ... j_r          one line per edge, j_i is the 1-based index in part i
//
// Lines starting with '#' are comments and may appear anywhere. Blank lines
// are ignored on input. Output uses LF, single spaces and no trailing blanks.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ryser/core.hpp"

namespace ryser {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

PartiteHypergraph parse_instance(std::string_view text, bool allow_duplicates = false);
PartiteHypergraph read_instance(std::istream& in, bool allow_duplicates = false);
PartiteHypergraph load_instance(const std::filesystem::path& path, bool allow_duplicates = false);

std::string format_instance(const PartiteHypergraph& h);
void write_instance(std::ostream& out, const PartiteHypergraph& h);

}  // namespace ryser
