#include "quandlekit/report.hpp"

namespace quandlekit {

namespace {

char const* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string report(EnumerationResult const& result) {
  std::string out = "# enumeration degree=" + std::to_string(result.degree)
                    + " mode=" + to_string(result.mode)
                    + " catalog=" + result.catalog_digest
                    + " raw=" + std::to_string(result.raw)
                    + " filtered=" + std::to_string(result.filtered) + "\n";
  std::string const n = std::to_string(result.degree);
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    auto const& e = result.entries[i];
    out += "[" + n + "," + std::to_string(i + 1) + "]";
    out += " inn_order=" + e.inner_order.str();
    out += " dis_order=" + e.displacement_order.str();
    out += std::string(" simple=") + yes_no(e.simple);
    out += std::string(" primitive=") + yes_no(e.primitive);
    out += std::string(" affine=") + yes_no(e.affine);
    out += " src=" + e.group_label;
    out += " rho=" + e.rho;
    out += std::string(" quasiprimitive=") + yes_no(e.quasiprimitive);
    out += "\n";
  }
  return out;
}

std::string entry_file_name(std::size_t degree, std::size_t index) {
  return "q" + std::to_string(degree) + "_" + std::to_string(index) + ".qnd";
}

}  // namespace quandlekit
