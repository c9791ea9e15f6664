#include "quandlekit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "quandlekit/catalog.hpp"
#include "quandlekit/construct.hpp"
#include "quandlekit/enumerate.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/oracle.hpp"
#include "quandlekit/quandle_file.hpp"
#include "quandlekit/report.hpp"

namespace quandlekit {

namespace {

char const* yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw Error("cannot write '" + path + "'");
  }
}

std::string matrix_text(Matrix const& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ";" : "";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      out += (j ? "," : "") + std::to_string(m[i][j]);
    }
  }
  return out;
}

// "a,b;c,d" -> rows.
Matrix parse_matrix(std::string const& text, std::size_t k) {
  Matrix m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<std::uint32_t> r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(cell, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || used != cell.size()) {
        throw InvalidArgument("bad matrix entry '" + cell + "'");
      }
      r.push_back(static_cast<std::uint32_t>(v));
    }
    m.push_back(std::move(r));
  }
  if (m.size() != k) {
    throw InvalidArgument("psi must have " + std::to_string(k) + " rows");
  }
  for (auto const& r : m) {
    if (r.size() != k) {
      throw InvalidArgument("psi must have " + std::to_string(k) + " columns");
    }
  }
  return m;
}

std::string analysis_line(Quandle const& q) {
  bool const simple = is_simple(q);
  auto const aff = classify_affine(q, simple);
  std::string out = "order=" + std::to_string(q.order());
  out += " inn=" + inner_group(q).order().str();
  out += " dis=" + displacement_group(q).order().str();
  out += std::string(" connected=") + yes_no(is_connected(q));
  out += std::string(" faithful=") + yes_no(is_faithful(q));
  out += std::string(" latin=") + yes_no(is_latin(q));
  out += std::string(" simple=") + yes_no(simple);
  out += std::string(" primitive=") + yes_no(is_primitive_quandle(q));
  out += std::string(" quasiprimitive=") + yes_no(is_quasiprimitive_quandle(q));
  out += " affine=";
  out += aff.classified ? yes_no(aff.affine) : "unknown";
  if (aff.witness) {
    out += " psi=" + matrix_text(*aff.witness);
  }
  return out;
}

bool looks_like_quandle_file(std::string const& text) {
  std::istringstream in(text);
  std::string word;
  in >> word;
  return word == "quandle";
}

struct Options {
  std::string file, file2;
  std::vector<std::string> catalogs;
  std::string group, rep, out_path, psi, mode;
  std::uint32_t p = 0;
  std::size_t k = 0, degree = 0, max_order = 0;
  unsigned jobs = 1;
  std::uint64_t bound = default_enumeration_bound;
  bool no_verify = false, non_affine_only = false;
};

std::vector<CatalogRecord> load_catalogs(std::vector<std::string> const& paths) {
  std::vector<CatalogRecord> all;
  for (auto const& path : paths) {
    try {
      auto part = parse_catalog(read_file(path));
      all.insert(all.end(), part.begin(), part.end());
    } catch (ParseError const& e) {
      throw ParseError(0, path + ": " + e.what());
    }
  }
  return all;
}

int cmd_validate(Options const& o, std::ostream& out) {
  std::string const text = read_file(o.file);
  if (looks_like_quandle_file(text)) {
    Quandle const q = parse_quandle_file(text);
    out << "kind=quandle order=" << q.order() << " valid=yes\n";
    return exit_ok;
  }
  auto const records = parse_catalog(text);
  if (!o.no_verify) {
    for (auto const& r : records) {
      verify_record(r);
    }
  }
  out << "kind=catalog records=" << records.size()
      << " digest=" << catalog_digest(records)
      << " verified=" << (o.no_verify ? "skipped" : "yes") << "\n";
  return exit_ok;
}

int cmd_analyze(Options const& o, std::ostream& out) {
  out << analysis_line(load_quandle(o.file)) << "\n";
  return exit_ok;
}

int cmd_iso(Options const& o, std::ostream& out) {
  Quandle const a = load_quandle(o.file);
  Quandle const b = load_quandle(o.file2);
  auto const f = are_isomorphic(a, b);
  if (!f) {
    out << "isomorphic=no\n";
    return exit_negative;
  }
  out << "isomorphic=yes witness=";
  for (Point x = 1; x <= a.order(); ++x) {
    out << (x > 1 ? "," : "") << (*f)(x);
  }
  out << "\n";
  return exit_ok;
}

int cmd_conj(Options const& o, std::ostream& out) {
  auto const records = load_catalogs(o.catalogs);
  auto const& record = find_record(records, o.group);
  PermGroup const G = record.group();
  Permutation const g = Permutation::from_cycles(record.degree, o.rep);
  auto const c = conj_quandle(G, g, o.bound);
  if (!o.out_path.empty()) {
    save_quandle(c.quandle, o.out_path);
  }
  out << analysis_line(c.quandle) << "\n";
  return exit_ok;
}

int cmd_affine(Options const& o, std::ostream& out) {
  Matrix const psi = parse_matrix(o.psi, o.k);
  Quandle const q = affine_quandle(o.p, o.k, psi);
  if (!o.out_path.empty()) {
    save_quandle(q, o.out_path);
  }
  out << analysis_line(q) << " irreducible=" << yes_no(is_irreducible(o.p, o.k, psi))
      << "\n";
  return exit_ok;
}

int cmd_enumerate(Options const& o, std::ostream& out) {
  auto const catalog = load_catalogs(o.catalogs);
  EnumerationOptions options;
  options.verify_flags = !o.no_verify;
  options.non_affine_only = o.non_affine_only;
  options.jobs = o.jobs;
  options.bound = o.bound;
  auto const result = enumerate_degree(o.degree, catalog, parse_mode(o.mode), options);
  std::string const text = report(result);
  if (!o.out_path.empty()) {
    std::filesystem::create_directories(o.out_path);
    std::filesystem::path const dir(o.out_path);
    write_file((dir / "report.txt").string(), text);
    for (std::size_t i = 0; i < result.entries.size(); ++i) {
      save_quandle(result.entries[i].quandle,
                   (dir / entry_file_name(o.degree, i + 1)).string());
    }
  }
  out << text;
  for (auto const& f : result.cross_check_failures) {
    out << "# cross-check failure: " << f << "\n";
  }
  return exit_ok;
}

int cmd_oracle(Options const& o, std::ostream& out) {
  if (o.max_order > brute_force_max_order) {
    throw BoundExceeded("brute-force enumeration is limited to order "
                        + std::to_string(brute_force_max_order));
  }
  std::string counts, simple;
  for (std::size_t n = 1; n <= o.max_order; ++n) {
    auto const all = brute_force_enumerate(n);
    std::size_t s = 0;
    for (auto const& q : all) {
      s += is_simple(q);
    }
    out << "n=" << n << " count=" << all.size() << " simple=" << s << "\n";
    counts += (n > 1 ? "," : "") + std::to_string(all.size());
    simple += (n > 1 ? "," : "") + std::to_string(s);
  }
  out << "max_order=" << o.max_order << " counts=" << counts
      << " simple=" << simple << "\n";
  return exit_ok;
}

}  // namespace

int run_cli(int argc, char const* const* argv, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Primitive and quasiprimitive quandles from permutation groups",
               "quandlekit"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check a quandle or catalog file");
  validate->add_option("file", o.file)->required();
  validate->add_flag("--no-verify-flags", o.no_verify,
                     "Parse a catalog without checking its declared flags");

  auto* analyze = app.add_subcommand("analyze", "Invariants of a quandle file");
  analyze->add_option("file", o.file)->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism test of two quandle files");
  iso->add_option("first", o.file)->required();
  iso->add_option("second", o.file2)->required();

  auto* conj = app.add_subcommand("conj", "Conjugation quandle of a class");
  conj->add_option("--catalog", o.catalogs)->required();
  conj->add_option("--group", o.group)->required();
  conj->add_option("--rep", o.rep, "Class representative in cycle notation")
      ->required();
  conj->add_option("--out", o.out_path, "Write the quandle table here");
  conj->add_option("--bound", o.bound);

  auto* affine = app.add_subcommand("affine", "Affine quandle on Z_p^k");
  affine->add_option("--p", o.p)->required();
  affine->add_option("--k", o.k)->required();
  affine->add_option("--psi", o.psi, "Matrix rows separated by ';', entries by ','")
      ->required();
  affine->add_option("--out", o.out_path, "Write the quandle table here");

  auto* enumerate = app.add_subcommand("enumerate", "Quandles of a degree from a catalog");
  enumerate->add_option("--degree", o.degree)->required();
  enumerate->add_option("--catalog", o.catalogs, "Repeatable; catalogs are merged")
      ->required();
  enumerate->add_option("--mode", o.mode)
      ->required()
      ->check(CLI::IsMember({"primitive", "quasiprimitive"}));
  enumerate->add_flag("--non-affine-only", o.non_affine_only);
  enumerate->add_option("--out", o.out_path, "Directory for report.txt and tables");
  enumerate->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));
  enumerate->add_flag("--no-verify-flags", o.no_verify);
  enumerate->add_option("--bound", o.bound);

  auto* oracle = app.add_subcommand("oracle", "Brute-force quandle counts");
  oracle->add_option("--max-order", o.max_order)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::string const name = app.get_subcommands().front()->get_name();
  try {
    if (name == "validate") return cmd_validate(o, out);
    if (name == "analyze") return cmd_analyze(o, out);
    if (name == "iso") return cmd_iso(o, out);
    if (name == "conj") return cmd_conj(o, out);
    if (name == "affine") return cmd_affine(o, out);
    if (name == "enumerate") return cmd_enumerate(o, out);
    return cmd_oracle(o, out);
  } catch (BoundExceeded const& e) {
    err << name << ": bound exceeded: " << e.what() << "\n";
    return exit_bound;
  } catch (InvalidArgument const& e) {
    err << name << ": invalid argument: " << e.what() << "\n";
    return exit_usage;
  } catch (ParseError const& e) {
    err << name << ": parse error: " << e.what() << "\n";
    return exit_invalid;
  } catch (AxiomViolation const& e) {
    err << name << ": not a quandle: " << e.what() << "\n";
    return exit_invalid;
  } catch (VerificationError const& e) {
    err << name << ": verification failed: " << e.what() << "\n";
    return exit_invalid;
  } catch (std::exception const& e) {
    err << name << ": error: " << e.what() << "\n";
    return exit_invalid;
  }
}

}  // namespace quandlekit
