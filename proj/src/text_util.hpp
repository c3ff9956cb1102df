#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "indpoly/errors.hpp"

namespace indpoly::detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Splits a text file into whitespace-separated tokens per line, dropping
/// '#' comments and blank lines.
inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("expected a non-negative integer, got '" + tok + "'", line);
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    throw ValidationError("integer out of range '" + tok + "'", line);
  }
}

/// Reads the "<keyword> <n>" header and returns n.
inline std::size_t parse_header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) throw ValidationError("missing '" + keyword + " <n>' header", 1);
  const auto& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != keyword)
    throw ValidationError("expected header '" + keyword + " <n>'", h.number);
  return parse_index(h.tokens[1], h.number);
}

}  // namespace indpoly::detail
