// Runs the acceptance checks in order and prints one PASS/FAIL line per
// criterion. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "quandlekit/catalog.hpp"
#include "quandlekit/construct.hpp"
#include "quandlekit/enumerate.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/oracle.hpp"
#include "quandlekit/quandle.hpp"
#include "quandlekit/quandle_file.hpp"

using namespace quandlekit;

namespace {

std::string const data_dir = QUANDLEKIT_DATA_DIR;

// Every quandle built during the run, for the invariant battery.
std::set<Quandle> constructed;

Quandle const& keep(Quandle const& q) {
  return *constructed.insert(q).first;
}

// Failure messages of the criterion being run.
struct Check {
  std::vector<std::string> failures;
  std::string info;  // printed after the verdict

  void expect(bool ok, std::string const& what) {
    if (!ok) {
      failures.push_back(what);
    }
  }
};

std::vector<CatalogRecord> const& primitive_catalog() {
  static auto const c = load_catalog(data_dir + "/catalogs/primitive.cat");
  return c;
}

std::vector<CatalogRecord> const& merged_catalog() {
  static auto const c = [] {
    auto all = primitive_catalog();
    auto more = load_catalog(data_dir + "/catalogs/quasiprimitive.cat");
    all.insert(all.end(), more.begin(), more.end());
    return all;
  }();
  return c;
}

std::set<Permutation> element_set(PermGroup const& G) {
  auto const e = G.elements();
  return {e.begin(), e.end()};
}

void worked_example(Check& c) {
  auto const& q = keep(load_quandle(data_dir + "/examples/example4.qnd"));
  PermGroup const inn = inner_group(q);
  PermGroup const expected({Permutation::from_cycles(4, "(2,3,4)"),
                            Permutation::from_cycles(4, "(1,4,3)"),
                            Permutation::from_cycles(4, "(1,2,4)"),
                            Permutation::from_cycles(4, "(1,3,2)")});
  c.expect(inn.order() == 12, "|Inn| = " + inn.order().str());
  c.expect(inn.contains_all(expected.generators()) &&
               expected.contains_all(inn.generators()),
           "Inn differs from the listed group");
  PermGroup const dis = displacement_group(q);
  std::set<Permutation> const v4{Permutation(4),
                                 Permutation::from_cycles(4, "(1,2)(3,4)"),
                                 Permutation::from_cycles(4, "(1,3)(2,4)"),
                                 Permutation::from_cycles(4, "(1,4)(2,3)")};
  c.expect(element_set(dis) == v4, "Dis differs from the Klein group");
  c.expect(is_primitive_quandle(q), "not primitive");
  c.expect(is_simple(q), "not simple");
  auto const blocks = minimal_block_system(dis, 1, 3);
  c.expect(blocks.classes() == std::vector<std::vector<Point>>{{1, 3}, {2, 4}},
           "Dis blocks " + blocks.to_string());
}

void transposition_class(Check& c) {
  PermGroup const s5({Permutation::from_cycles(5, "(1,2)"),
                      Permutation::from_cycles(5, "(1,2,3,4,5)")});
  auto const cq = conj_quandle(s5, Permutation::from_cycles(5, "(1,2)"));
  auto const& q = keep(cq.quandle);
  c.expect(q.order() == 10, "order " + std::to_string(q.order()));
  c.expect(inner_group(q).order() == 120, "|Inn| " + inner_group(q).order().str());
  c.expect(displacement_group(q).order() == 60,
           "|Dis| " + displacement_group(q).order().str());
  bool const simple = is_simple(q);
  c.expect(simple, "not simple");
  c.expect(is_primitive_quandle(q), "not primitive");
  auto const aff = classify_affine(q, simple);
  c.expect(aff.classified && !aff.affine, "classified as affine");
}

void keep_all(EnumerationResult const& r) {
  for (auto const& e : r.entries) {
    keep(e.quandle);
  }
}

void primitive_counts(Check& c) {
  std::map<std::size_t, std::size_t> const expected{
      {10, 1}, {12, 0}, {15, 1}, {21, 1}, {28, 2}, {36, 3}, {40, 1}, {45, 2}};
  EnumerationOptions opts;
  opts.non_affine_only = true;
  for (auto [n, count] : expected) {
    auto const r = enumerate_degree(n, primitive_catalog(), Mode::primitive, opts);
    keep_all(r);
    c.expect(r.filtered == count, "degree " + std::to_string(n) + ": " +
                                      std::to_string(r.filtered));
    c.expect(r.cross_check_failures.empty(),
             "degree " + std::to_string(n) + " cross-check failures");
  }
}

void quasiprimitive_counts(Check& c) {
  std::map<std::size_t, std::size_t> const expected{
      {12, 1}, {15, 2}, {20, 2}, {21, 2}, {24, 1}, {28, 2}, {30, 1}};
  for (auto [n, count] : expected) {
    auto const r = enumerate_degree(n, merged_catalog(), Mode::quasiprimitive);
    keep_all(r);
    std::size_t simple = 0;
    for (auto const& e : r.entries) {
      simple += e.simple;
    }
    c.expect(simple == count,
             "degree " + std::to_string(n) + ": " + std::to_string(simple));
    c.expect(simple == r.entries.size(),
             "degree " + std::to_string(n) + ": non-simple output");
    c.expect(r.cross_check_failures.empty(),
             "degree " + std::to_string(n) + " cross-check failures");
  }
}

void unitary_spot_check(Check& c) {
  std::vector<CatalogRecord> one{find_record(primitive_catalog(), "PSU(3,3)@63")};
  auto const r = enumerate_degree(63, one, Mode::primitive);
  keep_all(r);
  c.expect(r.raw == 3, "|xi| = " + std::to_string(r.raw));
  c.expect(r.filtered == 2, "filtered " + std::to_string(r.filtered));
}

// Connected quandles of order <= 12 drawn from several constructions.
std::vector<Quandle> connected_suite() {
  std::set<Quandle> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& q : brute_force_enumerate(n)) {
      if (is_connected(q)) {
        out.insert(q);
      }
    }
  }
  for (std::size_t n : {7u, 9u, 11u}) {
    out.insert(dihedral_quandle(n));
  }
  for (std::uint32_t p : {7u, 11u}) {
    for (std::uint32_t a = 2; a < p; ++a) {
      out.insert(affine_quandle(p, 1, {{a}}));
    }
  }
  // Every valid psi on Z_3^2 and Z_2^3, one quandle per isomorphism class.
  for (auto [p, k] : {std::pair<std::uint32_t, std::size_t>{3, 2}, {2, 3}}) {
    std::size_t const entries = k * k;
    std::size_t total = 1;
    for (std::size_t i = 0; i < entries; ++i) {
      total *= p;
    }
    std::vector<Quandle> found;
    for (std::size_t code = 0; code < total; ++code) {
      Matrix psi(k, std::vector<std::uint32_t>(k));
      std::size_t rest = code;
      for (std::size_t i = 0; i < entries; ++i) {
        psi[i / k][i % k] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      try {
        found.push_back(affine_quandle(p, k, psi));
      } catch (InvalidArgument const&) {
      }
    }
    for (auto const& q : filter_up_to_iso(found)) {
      out.insert(q);
    }
  }
  PermGroup const s4({Permutation::from_cycles(4, "(1,2)"),
                      Permutation::from_cycles(4, "(1,2,3,4)")});
  out.insert(conj_quandle(s4, Permutation::from_cycles(4, "(1,2,3,4)")).quandle);
  PermGroup const a5({Permutation::from_cycles(5, "(1,2,3)"),
                      Permutation::from_cycles(5, "(1,2,3,4,5)")});
  out.insert(conj_quandle(a5, Permutation::from_cycles(5, "(1,2,3,4,5)")).quandle);
  PermGroup const s5({Permutation::from_cycles(5, "(1,2)"),
                      Permutation::from_cycles(5, "(1,2,3,4,5)")});
  out.insert(conj_quandle(s5, Permutation::from_cycles(5, "(1,2)")).quandle);
  std::vector<Quandle> result;
  for (auto const& q : out) {
    if (is_connected(q)) {
      result.push_back(q);
    }
  }
  return result;
}

// xi-member envelopes of every bundled catalog group of degree <= 30.
std::vector<std::pair<std::string, Envelope>> const& catalog_envelopes() {
  static auto const envs = [] {
    std::vector<std::pair<std::string, Envelope>> out;
    for (auto const& record : merged_catalog()) {
      if (record.degree > 30) {
        continue;
      }
      PermGroup const G = record.group();
      for (auto const& rho : xi_set(G, 1)) {
        out.emplace_back(record.label, make_envelope(G, 1, rho));
      }
    }
    return out;
  }();
  return envs;
}

void round_trips(Check& c) {
  std::size_t count = 0;
  for (auto const& q : connected_suite()) {
    keep(q);
    for (Point e = 1; e <= q.order(); ++e) {
      auto const r = pq(pe(q, e));
      keep(r);
      ++count;
      c.expect(r == q, "pq(pe(Q," + std::to_string(e) + ")) differs, order " +
                           std::to_string(q.order()));
    }
  }
  for (auto const& [label, env] : catalog_envelopes()) {
    auto const& q = keep(pq(env));
    auto const back = pe(q, env.base_point);
    ++count;
    c.expect(back.group == env.group && back.rho == env.rho,
             label + " rho " + env.rho.to_cycles() + " not reproduced");
  }
  c.expect(count > 100, "suite too small");
  c.info = std::to_string(count) + " round trips, " +
           std::to_string(catalog_envelopes().size()) + " catalog envelopes";
}

void triple_isomorphism(Check& c) {
  std::vector<std::pair<std::string, Envelope>> envs;
  for (auto const& q : connected_suite()) {
    envs.emplace_back("order " + std::to_string(q.order()), pe(q, 1));
  }
  auto const& cat = catalog_envelopes();
  envs.insert(envs.end(), cat.begin(), cat.end());
  c.info = std::to_string(envs.size()) + " envelopes";
  for (auto const& [label, env] : envs) {
    auto const& a = keep(pq(env));
    auto const& b = keep(coset_quandle(env, 100'000'000));
    auto const cq = conj_quandle(env.group, env.rho, 100'000'000);
    auto const& k = keep(cq.quandle);
    c.expect(are_isomorphic(a, b).has_value(), label + ": pq and coset quandle differ");
    if (is_faithful(a)) {
      c.expect(are_isomorphic(a, k).has_value(),
               label + ": pq and conjugation quandle differ");
    } else {
      // y -> R_y maps onto the conjugation quandle of the class of rho.
      std::map<Permutation, Point> index;
      for (std::size_t i = 0; i < cq.elements.size(); ++i) {
        index[cq.elements[i]] = static_cast<Point>(i + 1);
      }
      std::set<Point> image;
      bool hom = true;
      for (Point x = 1; x <= a.order(); ++x) {
        auto const fx = index.find(a.right_translation(x));
        if (fx == index.end()) {
          hom = false;
          break;
        }
        image.insert(fx->second);
        for (Point y = 1; y <= a.order(); ++y) {
          hom &= index.at(a.right_translation(a(x, y))) ==
                 k(fx->second, index.at(a.right_translation(y)));
        }
      }
      c.expect(hom && image.size() == k.order(),
               label + ": conjugation quandle is not the image of pq");
    }
  }
}

void oracle_counts(Check& c) {
  std::vector<std::size_t> const counts{1, 1, 3, 7, 22};
  std::map<std::size_t, std::vector<Quandle>> predicted;
  predicted[3] = {affine_quandle(3, 1, {{2}})};
  predicted[4] = {affine_quandle(2, 2, {{0, 1}, {1, 1}})};
  predicted[5] = {affine_quandle(5, 1, {{2}}), affine_quandle(5, 1, {{3}}),
                  affine_quandle(5, 1, {{4}})};
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const all = brute_force_enumerate(n);
    c.expect(all.size() == counts[n - 1],
             "n=" + std::to_string(n) + ": " + std::to_string(all.size()));
    std::vector<Quandle> simple;
    for (auto const& q : all) {
      keep(q);
      if (is_simple(q)) {
        simple.push_back(q);
      }
    }
    if (n < 3) {
      continue;
    }
    auto const& want = predicted[n];
    c.expect(simple.size() == want.size(),
             "n=" + std::to_string(n) + ": " + std::to_string(simple.size()) + " simple");
    // A bijection between the simple ones and the predicted affine ones.
    std::set<std::size_t> matched;
    for (auto const& q : simple) {
      for (std::size_t i = 0; i < want.size(); ++i) {
        if (!matched.count(i) && are_isomorphic(q, keep(want[i]))) {
          matched.insert(i);
          break;
        }
      }
    }
    c.expect(matched.size() == want.size(),
             "n=" + std::to_string(n) + ": simple quandles not affine as predicted");
  }
}

void invariant_battery(Check& c) {
  for (auto const& q : constructed) {
    std::string const tag = "order " + std::to_string(q.order()) + " quandle";
    try {
      Quandle::from_table(q.rows());
    } catch (Error const& e) {
      c.expect(false, tag + ": " + e.what());
      continue;
    }
    PermGroup const inn = inner_group(q);
    PermGroup const dis = displacement_group(q);
    c.expect(is_normal(inn, dis) && quotient_is_cyclic(inn, dis),
             tag + ": Inn/Dis not cyclic");
    bool const connected = is_connected(q);
    if (connected) {
      c.expect(is_transitive(dis), tag + ": Dis not transitive");
    }
    bool const simple = is_simple(q);
    // The one-point quandle counts as primitive but not as simple.
    if (q.order() > 1 && is_primitive_quandle(q)) {
      c.expect(simple, tag + ": primitive but not simple");
    }
    if (simple && q.order() > 2) {
      c.expect(connected, tag + ": simple but not connected");
      c.expect(is_faithful(q), tag + ": simple but not faithful");
      c.expect(is_quasiprimitive_quandle(q), tag + ": simple but not quasiprimitive");
      c.expect(check_inner_conditions(inn, 100'000'000),
               tag + ": inner group fails the conditions");
    }
  }
  c.expect(constructed.size() > 100, "too few quandles");
  c.info = std::to_string(constructed.size()) + " distinct tables";
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "worked example of order 4", 1, worked_example},
      {2, "transposition class of S5", 1, transposition_class},
      {3, "primitive enumeration counts", 120, primitive_counts},
      {4, "quasiprimitive enumeration counts", 180, quasiprimitive_counts},
      {5, "PSU(3,3) on 63 points", 300, unitary_spot_check},
      {6, "envelope round trips", 120, round_trips},
      {7, "three constructions agree", 120, triple_isomorphism},
      {8, "brute-force counts", 300, oracle_counts},
      {9, "invariant battery", 600, invariant_battery},
  };
  int failed = 0;
  for (auto const& cr : criteria) {
    Check check;
    auto const start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (std::exception const& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double const seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.limit_seconds) {
      std::ostringstream s;
      s << "took " << seconds << " s, limit " << cr.limit_seconds << " s";
      check.failures.push_back(s.str());
    }
    bool const ok = check.failures.empty();
    failed += !ok;
    std::ostringstream line;
    line.precision(3);
    line << "criterion " << cr.number << " (" << cr.name << "): "
         << (ok ? "PASS" : "FAIL") << " [" << std::fixed << seconds << " s]";
    if (ok && !check.info.empty()) {
      line << " " << check.info;
    }
    for (std::size_t i = 0; i < check.failures.size() && i < 5; ++i) {
      line << (i == 0 ? " " : "; ") << check.failures[i];
    }
    if (check.failures.size() > 5) {
      line << "; ... " << check.failures.size() << " failures";
    }
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
