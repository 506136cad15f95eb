#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dimsat/cnf.hpp"

namespace dimsat {

enum class ParseErrorKind {
  missing_header,
  duplicate_header,
  malformed_header,
  literal_out_of_range,
  clause_count_mismatch,
  non_integer_token,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// Reads DIMACS CNF. A 0 always terminates the current clause; a trailing
// clause without terminator at end of input is accepted. A line starting
// with '%' ends the input (SATLIB convention). Throws ParseError.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(std::string_view text);
Formula parse_dimacs_file(const std::string& path);

// Writes "p cnf" header and one clause per line. Each entry of `comments`
// becomes a "c " line before the header.
std::string serialize_dimacs(const Formula& f,
                             const std::vector<std::string>& comments = {});

}  // namespace dimsat
