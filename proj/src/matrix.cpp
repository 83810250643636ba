#include "perm/matrix.hpp"

#include <charconv>

namespace perm::detail {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::size_t parse_count(std::string_view tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ParseError("malformed dimension '" + std::string(tok) + "'");
  return v;
}

}  // namespace

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.front() == '#') continue;
    if (split_tokens(line).empty()) continue;
    out.emplace_back(line);
  }
  return out;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_dimensions(std::string_view line) {
  auto tokens = split_tokens(line);
  if (tokens.size() != 2) throw ParseError("dimension line must be '<m> <n>'");
  std::size_t m = parse_count(tokens[0]);
  std::size_t n = parse_count(tokens[1]);
  if (m > kMaxGround || n > kMaxGround) throw ParseError("matrix dimensions are limited to 62");
  return {m, n};
}

}  // namespace perm::detail
