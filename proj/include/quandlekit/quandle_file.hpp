#pragma once

#include <string>
#include <string_view>

#include "quandlekit/quandle.hpp"

namespace quandlekit {

// Text form of a quandle table:
//
//   quandle <n>
//   <row 1: n space-separated entries>
//   ...
//
// Row x lists x ▷ 1, ..., x ▷ n. Shape problems raise ParseError with a line
// number; axiom failures raise AxiomViolation.
Quandle parse_quandle_file(std::string_view text);

std::string write_quandle_file(Quandle const& q);

Quandle load_quandle(std::string const& path);

void save_quandle(Quandle const& q, std::string const& path);

}  // namespace quandlekit
