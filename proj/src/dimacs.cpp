#include "dimsat/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace dimsat {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::missing_header: return "missing header";
    case ParseErrorKind::duplicate_header: return "duplicate header";
    case ParseErrorKind::malformed_header: return "malformed header";
    case ParseErrorKind::literal_out_of_range: return "literal out of range";
    case ParseErrorKind::clause_count_mismatch: return "clause count mismatch";
    case ParseErrorKind::non_integer_token: return "non-integer token";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         std::string(to_string(kind)) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

namespace {

bool parse_int(std::string_view tok, std::int64_t& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Formula parse_dimacs(std::istream& in) {
  Formula f;
  bool have_header = false;
  std::int64_t declared_clauses = 0;
  Clause current;
  bool pending = false;  // literals seen since the last terminator
  std::size_t lineno = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == 'c') continue;
    if (toks[0].front() == '%') break;

    if (toks[0] == "p") {
      if (have_header)
        throw ParseError(ParseErrorKind::duplicate_header, lineno, "");
      std::int64_t n = 0, m = 0;
      if (toks.size() != 4 || toks[1] != "cnf" || !parse_int(toks[2], n) ||
          !parse_int(toks[3], m) || n < 0 || m < 0 || n > 0x7fffffff)
        throw ParseError(ParseErrorKind::malformed_header, lineno, line);
      f.num_vars = static_cast<Var>(n);
      declared_clauses = m;
      f.clauses.reserve(static_cast<std::size_t>(std::min<std::int64_t>(m, 1 << 24)));
      have_header = true;
      continue;
    }

    if (!have_header)
      throw ParseError(ParseErrorKind::missing_header, lineno,
                       "clause data before 'p cnf' line");

    for (auto tok : toks) {
      std::int64_t lit = 0;
      if (!parse_int(tok, lit))
        throw ParseError(ParseErrorKind::non_integer_token, lineno,
                         "'" + std::string(tok) + "'");
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current = Clause{};
        pending = false;
        continue;
      }
      const std::int64_t mag = lit < 0 ? -lit : lit;
      if (mag > static_cast<std::int64_t>(f.num_vars))
        throw ParseError(ParseErrorKind::literal_out_of_range, lineno,
                         std::to_string(lit) + " exceeds " +
                             std::to_string(f.num_vars) + " variables");
      current.literals.push_back(Literal::from_dimacs(lit));
      pending = true;
    }
  }

  if (!have_header)
    throw ParseError(ParseErrorKind::missing_header, lineno, "no 'p cnf' line");
  if (pending) f.clauses.push_back(std::move(current));
  if (static_cast<std::int64_t>(f.clauses.size()) != declared_clauses)
    throw ParseError(ParseErrorKind::clause_count_mismatch, lineno,
                     "header declares " + std::to_string(declared_clauses) +
                         ", found " + std::to_string(f.clauses.size()));
  return f;
}

Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

Formula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Formula f = parse_dimacs(in);
  f.source_name = path;
  return f;
}

std::string serialize_dimacs(const Formula& f,
                             const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (auto l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace dimsat
