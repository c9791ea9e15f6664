#include "quandlekit/quandle_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "quandlekit/errors.hpp"

namespace quandlekit {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
    std::size_t const start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
      ++pos;
    }
    if (pos > start) {
      words.push_back(line.substr(start, pos - start));
    }
  }
  return words;
}

std::size_t parse_number(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  auto const [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, "'" + std::string(word) + "' is not a number");
  }
  return value;
}

}  // namespace

Quandle parse_quandle_file(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto const nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
  }
  while (!lines.empty() && split_words(lines.back()).empty()) {
    lines.pop_back();
  }
  if (lines.empty()) {
    throw ParseError(1, "empty quandle file");
  }
  auto const header = split_words(lines[0]);
  if (header.size() != 2 || header[0] != "quandle") {
    throw ParseError(1, "expected 'quandle <order>'");
  }
  std::size_t const n = parse_number(header[1], 1);
  if (n == 0 || n > Permutation::max_degree) {
    throw ParseError(1, "invalid order " + std::to_string(n));
  }
  if (lines.size() != n + 1) {
    throw ParseError(lines.size(), "expected " + std::to_string(n) + " rows, found "
                                       + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Point>> rows(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto const words = split_words(lines[x + 1]);
    if (words.size() != n) {
      throw ParseError(x + 2, "row has " + std::to_string(words.size())
                                  + " entries, expected " + std::to_string(n));
    }
    for (auto w : words) {
      std::size_t const v = parse_number(w, x + 2);
      if (v < 1 || v > n) {
        throw ParseError(x + 2, "entry " + std::string(w) + " out of range 1.."
                                    + std::to_string(n));
      }
      rows[x].push_back(static_cast<Point>(v));
    }
  }
  return Quandle::from_table(rows);
}

std::string write_quandle_file(Quandle const& q) {
  std::string out = "quandle " + std::to_string(q.order()) + "\n";
  for (std::size_t x = 0; x < q.order(); ++x) {
    for (std::size_t y = 0; y < q.order(); ++y) {
      if (y) {
        out += ' ';
      }
      out += std::to_string(q.at0(x, y) + 1);
    }
    out += '\n';
  }
  return out;
}

Quandle load_quandle(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_quandle_file(ss.str());
}

void save_quandle(Quandle const& q, std::string const& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path + "'");
  }
  out << write_quandle_file(q);
  if (!out) {
    throw Error("write to '" + path + "' failed");
  }
}

}  // namespace quandlekit
