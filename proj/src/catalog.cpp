#include "quandlekit/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "quandlekit/errors.hpp"

namespace quandlekit {

namespace {

constexpr std::array<std::string_view, 3> known_flags{
    "transitive", "primitive", "quasiprimitive"};

std::string_view trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> normalize_flags(std::string_view text,
                                         std::size_t line) {
  std::set<std::string_view> given;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const comma = text.find(',', pos);
    auto const item = trim(text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos));
    if (item.empty()) {
      throw ParseError(line, "empty flag");
    }
    if (std::find(known_flags.begin(), known_flags.end(), item)
        == known_flags.end()) {
      throw ParseError(line, "unknown flag '" + std::string(item) + "'");
    }
    given.insert(item);
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  std::vector<std::string> out;
  for (auto f : known_flags) {
    if (given.count(f)) {
      out.emplace_back(f);
    }
  }
  return out;
}

}  // namespace

bool CatalogRecord::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

std::vector<Permutation> CatalogRecord::permutations() const {
  std::vector<Permutation> out;
  for (auto const& g : generators) {
    out.push_back(Permutation::from_cycles(degree, g));
  }
  if (out.empty()) {
    out.emplace_back(degree);
  }
  return out;
}

PermGroup CatalogRecord::group() const { return PermGroup(permutations()); }

std::vector<CatalogRecord> parse_catalog(std::string_view text) {
  std::vector<CatalogRecord> out;
  std::set<std::string> labels;
  std::optional<CatalogRecord> current;
  std::size_t record_line = 0;
  std::vector<std::pair<std::size_t, std::string>> pending_gens;
  bool seen_degree = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto const nl = text.find('\n', pos);
    auto const raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    auto const line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    auto const space = line.find_first_of(" \t");
    auto const key = line.substr(0, space);
    auto const value
        = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

    if (key == "group") {
      if (current) {
        throw ParseError(line_no, "'group' inside record '" + current->label
                                      + "' (missing 'end')");
      }
      if (value.empty()) {
        throw ParseError(line_no, "missing group label");
      }
      current.emplace();
      current->label = std::string(value);
      record_line = line_no;
      pending_gens.clear();
      seen_degree = false;
      continue;
    }
    if (!current) {
      throw ParseError(line_no, "'" + std::string(key) + "' outside a record");
    }
    if (key == "degree") {
      std::size_t n = 0;
      auto const s = std::string(value);
      std::size_t used = 0;
      try {
        n = std::stoul(s, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || used != s.size() || n == 0
          || n > Permutation::max_degree) {
        throw ParseError(line_no, "invalid degree '" + s + "'");
      }
      current->degree = n;
      seen_degree = true;
    } else if (key == "gen") {
      if (value.empty()) {
        throw ParseError(line_no, "empty generator");
      }
      pending_gens.emplace_back(line_no, std::string(value));
    } else if (key == "flags") {
      current->flags = normalize_flags(value, line_no);
    } else if (key == "provenance") {
      current->provenance = std::string(value);
    } else if (key == "end") {
      if (!seen_degree) {
        throw ParseError(line_no, "record '" + current->label
                                      + "' has no degree");
      }
      if (pending_gens.empty()) {
        throw ParseError(line_no, "record '" + current->label
                                      + "' has no generators");
      }
      for (auto const& [gl, g] : pending_gens) {
        try {
          current->generators.push_back(
              Permutation::from_cycles(current->degree, g).to_cycles());
        } catch (InvalidArgument const& e) {
          throw ParseError(gl, e.what());
        }
      }
      if (!labels.insert(current->label).second) {
        throw ParseError(record_line,
                         "duplicate label '" + current->label + "'");
      }
      out.push_back(std::move(*current));
      current.reset();
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (current) {
    throw ParseError(record_line, "record '" + current->label
                                      + "' is not terminated by 'end'");
  }
  return out;
}

std::string write_catalog(std::vector<CatalogRecord> const& records) {
  std::string out;
  for (auto const& r : records) {
    out += "group " + r.label + "\n";
    out += "degree " + std::to_string(r.degree) + "\n";
    for (auto const& g : r.generators) {
      out += "gen " + g + "\n";
    }
    if (!r.flags.empty()) {
      out += "flags ";
      for (std::size_t i = 0; i < r.flags.size(); ++i) {
        out += (i ? "," : "") + r.flags[i];
      }
      out += "\n";
    }
    if (!r.provenance.empty()) {
      out += "provenance " + r.provenance + "\n";
    }
    out += "end\n";
  }
  return out;
}

std::string catalog_digest(std::vector<CatalogRecord> const& records) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : write_catalog(records)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<CatalogRecord> load_catalog(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read catalog '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

void verify_record(CatalogRecord const& record) {
  PermGroup const G = record.group();
  std::string const who = "group '" + record.label + "': ";
  if (!is_transitive(G)) {
    auto const o = orbit(G, 1);
    throw VerificationError(who + "not transitive; the orbit of 1 has "
                            + std::to_string(o.size()) + " of "
                            + std::to_string(G.degree()) + " points");
  }
  if (record.has_flag("primitive") && G.degree() > 1) {
    for (Point b = 2; b <= G.degree(); ++b) {
      auto const sys = minimal_block_system(G, 1, b);
      if (sys.classes().size() != 1) {
        throw VerificationError(who + "declared primitive but has the block "
                                      "system "
                                + sys.to_string());
      }
    }
  }
  if (record.has_flag("quasiprimitive")) {
    if (auto sys = quasiprimitivity_witness(G)) {
      throw VerificationError(
          who + "declared quasiprimitive but the kernel of its action on "
          + sys->to_string()
          + " is a nontrivial intransitive normal subgroup");
    }
  }
}

CatalogRecord const& find_record(std::vector<CatalogRecord> const& records,
                                 std::string_view label) {
  for (auto const& r : records) {
    if (r.label == label) {
      return r;
    }
  }
  throw InvalidArgument("no group labelled '" + std::string(label)
                        + "' in the catalog");
}

}  // namespace quandlekit
