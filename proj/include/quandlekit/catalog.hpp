#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quandlekit/perm_group.hpp"

namespace quandlekit {

// One group of a catalog file:
//
//   group <label>
//   degree <n>
//   gen <cycles>          (one line per generator)
//   flags <f1,f2,...>     (subset of transitive, primitive, quasiprimitive)
//   provenance <text>
//   end
//
// Blank lines and lines starting with '#' are ignored.
struct CatalogRecord {
  std::string label;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::vector<std::string> flags;
  std::string provenance;

  bool has_flag(std::string_view flag) const;

  std::vector<Permutation> permutations() const;

  PermGroup group() const;

  friend bool operator==(CatalogRecord const&, CatalogRecord const&) = default;
};

// Throws ParseError (with line number) on malformed records, unknown flags,
// invalid generators and duplicate labels. Generators are normalized to the
// canonical cycle notation and flags to the order transitive, primitive,
// quasiprimitive, so write_catalog(parse_catalog(t)) is a normal form of t.
std::vector<CatalogRecord> parse_catalog(std::string_view text);

std::string write_catalog(std::vector<CatalogRecord> const& records);

// 16 hex digits of the FNV-1a hash of the normalized text.
std::string catalog_digest(std::vector<CatalogRecord> const& records);

// Reads and parses a file; throws Error if it cannot be read.
std::vector<CatalogRecord> load_catalog(std::string const& path);

// Checks transitivity and every declared flag; throws VerificationError
// naming the offending block system or normal closure.
void verify_record(CatalogRecord const& record);

CatalogRecord const& find_record(std::vector<CatalogRecord> const& records,
                                 std::string_view label);

}  // namespace quandlekit
