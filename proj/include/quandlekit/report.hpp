#pragma once

#include <string>

#include "quandlekit/enumerate.hpp"

namespace quandlekit {

// Plain-text listing of an enumeration result. The first line is a header
//
//   # enumeration degree=<n> mode=<mode> catalog=<digest> raw=<r> filtered=<f>
//
// followed by one line per entry, numbered [n,1], [n,2], ... in result order:
//
//   [10,1] inn_order=120 dis_order=60 simple=yes primitive=yes affine=no
//       src=<group label> rho=<cycles> quasiprimitive=yes
//
// (on one line). Groups are identified by their catalog labels only.
std::string report(EnumerationResult const& result);

// File name used for entry i (1-based) when an enumeration is written to a
// directory: q<n>_<i>.qnd.
std::string entry_file_name(std::size_t degree, std::size_t index);

}  // namespace quandlekit
