// Regenerates data/catalogs/primitive.cat and data/catalogs/quasiprimitive.cat.
//
//   build_catalogs <output-dir>
//
// Every record is constructed from scratch, its order checked against the
// known value and its flags computed (not asserted) before it is written.

#include <algorithm>
#include <array>
#include <bit>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <unordered_map>

#include "quandlekit/builders.hpp"
#include "quandlekit/catalog.hpp"
#include "quandlekit/errors.hpp"

using namespace quandlekit;
using namespace quandlekit::builders;

namespace {

std::string join_cycles(std::vector<Permutation> const& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out += (i ? ", " : "") + gens[i].to_cycles();
  }
  return out;
}

class CatalogBuilder {
 public:
  // Adds a record with computed flags. expect_primitive guards against
  // construction mistakes.
  void add(std::string label, std::vector<Permutation> gens, Order const& order,
           bool expect_primitive, std::string provenance) {
    PermGroup const G(gens);
    if (G.order() != order) {
      throw Error(label + ": order " + G.order().str() + ", expected "
                  + order.str());
    }
    if (!is_transitive(G)) {
      throw Error(label + ": not transitive");
    }
    bool const primitive = is_primitive(G);
    bool const quasiprimitive = primitive || is_quasiprimitive(G);
    if (primitive != expect_primitive || !quasiprimitive) {
      throw Error(label + ": unexpected primitivity");
    }
    CatalogRecord r;
    r.label = std::move(label);
    r.degree = G.degree();
    for (auto const& g : gens) {
      r.generators.push_back(g.to_cycles());
    }
    r.flags = {"transitive"};
    if (primitive) {
      r.flags.push_back("primitive");
    }
    r.flags.push_back("quasiprimitive");
    r.provenance = std::move(provenance);
    std::cerr << r.label << " degree " << r.degree << " order " << order << "\n";
    records_.push_back(std::move(r));
  }

  std::vector<CatalogRecord> const& records() const { return records_; }

 private:
  std::vector<CatalogRecord> records_;
};

Order factorial(std::size_t n) {
  Order f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

void add_natural(CatalogBuilder& cb, std::size_t n) {
  std::string const d = std::to_string(n);
  cb.add("A" + d + "@" + d, alternating_generators(n), factorial(n) / 2, true,
         "alternating group, natural action");
  cb.add("S" + d + "@" + d, symmetric_generators(n), factorial(n), true,
         "symmetric group, natural action");
}

void add_pairs(CatalogBuilder& cb, std::size_t m) {
  std::string const d = std::to_string(m * (m - 1) / 2);
  std::string const name = std::to_string(m);
  cb.add("A" + name + "@" + d, action_on_pairs(alternating_generators(m)),
         factorial(m) / 2, true,
         "alternating group A" + name + " on unordered pairs");
  cb.add("S" + name + "@" + d, action_on_pairs(symmetric_generators(m)),
         factorial(m), true, "symmetric group S" + name + " on unordered pairs");
}

void add_line(CatalogBuilder& cb, NamedGroup const& g, std::uint32_t q) {
  cb.add(g.name + "@" + std::to_string(q + 1), g.generators, g.order, true,
         g.name + " on the projective line over GF(" + std::to_string(q) + ")");
}

// The group on the conjugates of <x>, x taken as the first element of the
// given order. The kernel is checked by the order comparison in add().
std::vector<Permutation> on_cyclic_subgroups(NamedGroup const& g,
                                             std::uint64_t element_order) {
  PermGroup const G(g.generators);
  Permutation const x = find_element(
      G, [&](Permutation const& p) { return p.order() == element_order; });
  return reduce_generators(action_on_cyclic_subgroups(G, x));
}

std::vector<Permutation> projective_group(FiniteField const& F, std::size_t dim,
                                          bool diagonal, bool frobenius,
                                          std::vector<Vec> const& points) {
  auto maps = sl_generators(F, dim);
  if (diagonal) {
    maps.push_back(diagonal_primitive(F, dim));
  }
  if (frobenius) {
    maps.push_back(frobenius_map(F));
  }
  return reduce_generators(projective_action(F, points, maps));
}

// ---------------------------------------------------------------------------
// Symplectic groups over GF(3) in dimension 4 and their geometry.

struct Symplectic43 {
  FiniteField const& F;
  std::vector<Vec> points;
  std::vector<Permutation> psp;          // on the 40 points
  std::vector<Permutation> psp_similar;  // with a similitude of multiplier -1
};

Symplectic43 symplectic43(FiniteField const& F) {
  Symplectic43 s{F, projective_points(F, 4), {}, {}};
  std::vector<VectorMap> maps;
  for (auto const& v : s.points) {
    maps.push_back(symplectic_transvection(F, v));
  }
  s.psp = reduce_generators(projective_action(F, s.points, maps));
  std::vector<Vec> D{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
  s.psp_similar = s.psp;
  s.psp_similar.push_back(projective_action(F, s.points, {linear_map(F, D)})[0]);
  return s;
}

std::vector<Point> point_indices(std::vector<Vec> const& points,
                                 std::function<bool(Vec const&)> const& pred) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (pred(points[i])) {
      out.push_back(static_cast<Point>(i + 1));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sp(6,2) on quadratic forms polarizing to the standard alternating form.

std::uint32_t bform(std::uint32_t x, std::uint32_t y) {
  std::uint32_t const z = (x & ((y >> 3) & 7)) ^ ((x >> 3) & (y & 7));
  return std::popcount(z) & 1u;
}

std::pair<std::vector<Permutation>, std::vector<Permutation>> sp62_on_forms() {
  // Truth tables over the 64 vectors; bit i of a vector is coordinate i + 1.
  auto q0 = [](std::uint32_t x) {
    return std::popcount(x & (x >> 3) & 7u) & 1u;
  };
  std::vector<std::uint64_t> forms;
  for (std::uint32_t a = 0; a < 64; ++a) {
    std::uint64_t t = 0;
    for (std::uint32_t x = 0; x < 64; ++x) {
      if (q0(x) ^ bform(a, x)) {
        t |= std::uint64_t{1} << x;
      }
    }
    forms.push_back(t);
  }
  std::vector<std::array<std::uint32_t, 64>> transvections;
  for (std::uint32_t v = 1; v < 64; ++v) {
    std::array<std::uint32_t, 64> m{};
    for (std::uint32_t x = 0; x < 64; ++x) {
      m[x] = bform(x, v) ? x ^ v : x;
    }
    transvections.push_back(m);
  }
  auto step = [&](std::uint64_t const& t, std::size_t i) {
    std::uint64_t out = 0;
    for (std::uint32_t x = 0; x < 64; ++x) {
      if ((t >> transvections[i][x]) & 1u) {
        out |= std::uint64_t{1} << x;
      }
    }
    return out;
  };
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  for (auto t : forms) {
    int const zeros = 64 - std::popcount(t);
    if (zeros == 36 && plus == 0) {
      plus = t;
    }
    if (zeros == 28 && minus == 0) {
      minus = t;
    }
  }
  auto act = [&](std::uint64_t seed) {
    return reduce_generators(orbit_action<std::uint64_t>(
        {seed}, transvections.size(), step));
  };
  return {act(minus), act(plus)};
}

// ---------------------------------------------------------------------------
// Unitary groups over GF(9) in dimension 3.

struct Unitary33 {
  std::vector<Permutation> psu;   // on the 28 isotropic points
  std::vector<Permutation> pgu;   // with the field automorphism
};

Unitary33 unitary33() {
  FiniteField const& F = field(9);
  auto sigma = [&](std::uint32_t a) { return F.power(a, 3); };
  // h(x, y) = x1 y3^s + x2 y2^s + x3 y1^s
  auto h = [&](Vec const& x, Vec const& y) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      s = F.add(s, F.mul(x[i], sigma(y[2 - i])));
    }
    return s;
  };
  auto is_unitary = [&](std::vector<Vec> const& M) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Vec ei(3, 0), ej(3, 0);
        ei[i] = 1;
        ej[j] = 1;
        if (h(M[i], M[j]) != h(ei, ej)) {
          return false;
        }
      }
    }
    return true;
  };
  std::vector<VectorMap> maps;
  for (std::uint32_t a = 0; a < 9; ++a) {
    for (std::uint32_t b = 0; b < 9; ++b) {
      for (std::uint32_t c = 0; c < 9; ++c) {
        if (a == 0 && b == 0 && c == 0) {
          continue;
        }
        std::vector<Vec> upper{{1, a, b}, {0, 1, c}, {0, 0, 1}};
        std::vector<Vec> lower{{1, 0, 0}, {a, 1, 0}, {b, c, 1}};
        for (auto const& M : {upper, lower}) {
          if (is_unitary(M)) {
            maps.push_back(linear_map(F, M));
          }
        }
      }
    }
  }
  std::vector<Vec> isotropic;
  for (auto const& v : projective_points(F, 3)) {
    if (h(v, v) == 0) {
      isotropic.push_back(v);
    }
  }
  Unitary33 u;
  u.psu = reduce_generators(projective_action(F, isotropic, maps));
  u.pgu = u.psu;
  u.pgu.push_back(projective_action(F, isotropic, {frobenius_map(F)})[0]);
  return u;
}

// ---------------------------------------------------------------------------
// W(E6) on the 36 pairs of opposite roots.

std::vector<Permutation> weyl_e6_on_root_pairs() {
  using Root = std::array<int, 6>;
  // Simple roots 1-3-4-5-6 in a chain with 2 attached to 4.
  std::array<std::array<int, 6>, 6> A{};
  for (int i = 0; i < 6; ++i) {
    A[i][i] = 2;
  }
  for (auto [i, j] : std::vector<std::pair<int, int>>{
           {0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}) {
    A[i][j] = A[j][i] = -1;
  }
  auto reflect = [&](Root r, int i) {
    int c = 0;
    for (int j = 0; j < 6; ++j) {
      c += r[j] * A[j][i];
    }
    r[i] -= c;
    return r;
  };
  auto pair_key = [](Root r) {
    for (int x : r) {
      if (x != 0) {
        if (x < 0) {
          for (auto& y : r) {
            y = -y;
          }
        }
        break;
      }
    }
    return r;
  };
  std::vector<Root> seeds;
  for (int i = 0; i < 6; ++i) {
    Root r{};
    r[i] = 1;
    seeds.push_back(r);
  }
  return orbit_action<Root>(seeds, 6, [&](Root const& r, std::size_t i) {
    return pair_key(reflect(r, static_cast<int>(i)));
  });
}

// ---------------------------------------------------------------------------
// Product action of subgroups of S6 wr S2 on 6 x 6 = 36 points.

Permutation product_element(Permutation const& a, Permutation const& b,
                            bool swap) {
  std::vector<Point> images(36);
  for (Point i = 1; i <= 6; ++i) {
    for (Point j = 1; j <= 6; ++j) {
      Point x = a(i);
      Point y = b(j);
      if (swap) {
        std::swap(x, y);
      }
      images[(i - 1) * 6 + (j - 1)] = (x - 1) * 6 + y;
    }
  }
  return Permutation::from_images(images);
}

void add_product_actions(CatalogBuilder& cb, std::string const& name,
                         std::vector<Permutation> const& socle_gens,
                         Permutation const& outer, Order const& socle_order) {
  Permutation const one(6);
  std::vector<Permutation> base;
  for (auto const& t : socle_gens) {
    base.push_back(product_element(t, one, false));
  }
  Permutation const swap = product_element(one, one, true);
  auto with = [&](std::vector<Permutation> extra) {
    auto g = base;
    g.insert(g.end(), extra.begin(), extra.end());
    return reduce_generators(g);
  };
  Order const t2 = socle_order * socle_order;
  std::string const what = " in product action on 36 points, socle "
                           + name + " x " + name + " with " + name
                           + " acting on 6 points; top group ";
  cb.add(name + "^2.2@36", with({swap}), 2 * t2, true,
         "(" + name + " x " + name + "):2" + what + "generated by the swap");
  cb.add(name + "^2.4@36", with({compose(product_element(outer, one, false), swap)}),
         4 * t2, true,
         "(" + name + " x " + name + ").4" + what
             + "cyclic of order 4 (outer element times swap)");
  cb.add(name + "^2.2^2@36",
         with({swap, product_element(outer, outer, false)}), 4 * t2, true,
         "(" + name + " x " + name + ").2^2" + what
             + "the swap and the diagonal outer element");
  cb.add(name + "^2.D8@36",
         with({swap, product_element(outer, one, false)}), 8 * t2, true,
         "(" + name + " x " + name + ").D8" + what
             + "the full wreath product");
}

// ---------------------------------------------------------------------------
// Quasiprimitive imprimitive actions: coset actions of almost simple groups
// on non-maximal core-free subgroups.

struct Parent {
  std::string name;
  NamedGroup group;  // acting on the ambient's points
};

struct Ambient {
  std::string name;
  std::vector<Permutation> generators;
  std::vector<Parent> parents;
};

class SubgroupSearch {
 public:
  explicit SubgroupSearch(std::vector<Permutation> const& gens) {
    elements_ = PermGroup(gens).elements();
    n_ = elements_.size();
    std::unordered_map<Permutation, std::uint32_t> index;
    for (std::uint32_t i = 0; i < n_; ++i) {
      index.emplace(elements_[i], i);
    }
    identity_ = index.at(Permutation(gens.front().degree()));
    mul_.resize(n_ * n_);
    inv_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      inv_[i] = index.at(inverse(elements_[i]));
      for (std::uint32_t j = 0; j < n_; ++j) {
        mul_[i * n_ + j] = index.at(compose(elements_[i], elements_[j]));
      }
    }
  }

  struct Subgroup {
    std::vector<std::uint32_t> elements;  // sorted
    std::vector<std::uint32_t> generators;
  };

  // Representatives of the conjugacy classes of subgroups of order at most
  // max_order, in discovery order.
  std::vector<Subgroup> classes(std::size_t max_order) {
    std::vector<Subgroup> reps;
    std::set<std::vector<std::uint32_t>> seen;
    auto offer = [&](std::vector<std::uint32_t> const& gens) {
      auto elems = closure(gens, max_order);
      if (!elems || seen.count(*elems)) {
        return;
      }
      for (std::uint32_t a = 0; a < n_; ++a) {
        std::vector<std::uint32_t> c;
        c.reserve(elems->size());
        for (auto h : *elems) {
          c.push_back(mul(mul(inv_[a], h), a));
        }
        std::sort(c.begin(), c.end());
        seen.insert(std::move(c));
      }
      reps.push_back(Subgroup{std::move(*elems), gens});
    };
    offer({});
    for (std::size_t k = 0; k < reps.size(); ++k) {
      for (std::uint32_t g = 0; g < n_; ++g) {
        auto const& K = reps[k];
        if (std::binary_search(K.elements.begin(), K.elements.end(), g)) {
          continue;
        }
        auto gens = K.generators;
        gens.push_back(g);
        offer(gens);
      }
    }
    return reps;
  }

  Permutation const& element(std::uint32_t i) const { return elements_[i]; }

 private:
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * n_ + b];
  }

  std::optional<std::vector<std::uint32_t>> closure(
      std::vector<std::uint32_t> const& gens, std::size_t max_order) const {
    std::vector<std::uint32_t> out{identity_};
    std::vector<char> in(n_, 0);
    in[identity_] = 1;
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (auto g : gens) {
        auto const x = mul(out[k], g);
        if (!in[x]) {
          if (out.size() == max_order) {
            return std::nullopt;
          }
          in[x] = 1;
          out.push_back(x);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Permutation> elements_;
  std::size_t n_ = 0;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> mul_, inv_;
};

void add_quasi_imprimitive(CatalogBuilder& cb, Ambient const& amb,
                           std::vector<std::size_t> const& degrees) {
  std::size_t max_order = 1;
  for (auto const& p : amb.parents) {
    for (auto d : degrees) {
      if (p.group.order % d == 0) {
        max_order = std::max(max_order, static_cast<std::size_t>(p.group.order / d));
      }
    }
  }
  SubgroupSearch search(amb.generators);
  auto const reps = search.classes(max_order);
  std::cerr << amb.name << ": " << reps.size()
            << " subgroup classes of order <= " << max_order << "\n";
  for (auto const& p : amb.parents) {
    PermGroup const P(p.group.generators);
    std::map<std::size_t, std::vector<std::pair<PermGroup, std::vector<Permutation>>>> found;
    for (auto const& K : reps) {
      std::size_t const k = K.elements.size();
      if (p.group.order % k != 0) {
        continue;
      }
      std::size_t const d = static_cast<std::size_t>(p.group.order / k);
      if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) {
        continue;
      }
      std::vector<Permutation> kgens;
      for (auto g : K.generators) {
        kgens.push_back(search.element(g));
      }
      if (!P.contains_all(kgens)) {
        continue;
      }
      PermGroup const H = kgens.empty() ? PermGroup::trivial(P.degree())
                                        : PermGroup(kgens);
      auto action = coset_action(P, H);
      if (!action.faithful || is_primitive(action.image)
          || !is_quasiprimitive(action.image)) {
        continue;
      }
      found[d].emplace_back(action.image, kgens);
    }
    for (auto& [d, list] : found) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        auto const& [image, kgens] = list[i];
        std::string label = p.name + "@" + std::to_string(d);
        if (list.size() > 1) {
          label += static_cast<char>('a' + i);
        }
        std::string const stab
            = kgens.empty() ? "the trivial subgroup"
                            : "the subgroup of order "
                                  + Order(p.group.order / d).str()
                                  + " generated by " + join_cycles(kgens);
        cb.add(label, reduce_generators(image.generators()), p.group.order,
               false,
               p.name + " (generated by " + join_cycles(p.group.generators)
                   + ") on the right cosets of " + stab);
      }
    }
  }
}

NamedGroup named(std::string name, std::vector<Permutation> gens) {
  Order order = PermGroup(gens).order();
  return NamedGroup{std::move(name), std::move(gens), std::move(order)};
}

// ---------------------------------------------------------------------------

std::vector<Permutation> m11_generators() {
  return {Permutation::from_cycles(11, "(1,2,3,4,5,6,7,8,9,10,11)"),
          Permutation::from_cycles(11, "(3,7,11,8)(4,10,5,6)")};
}

std::vector<Permutation> m12_generators() {
  return {Permutation::from_cycles(12, "(1,2,3,4,5,6,7,8,9,10,11)"),
          Permutation::from_cycles(12, "(3,7,11,8)(4,10,5,6)"),
          Permutation::from_cycles(12, "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)")};
}

std::vector<Permutation> m24_generators() {
  return {Permutation::from_cycles(
              24, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)"),
          Permutation::from_cycles(
              24, "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"),
          Permutation::from_cycles(
              24, "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)"
                  "(13,22)(15,19)")};
}

std::vector<CatalogRecord> primitive_catalog() {
  CatalogBuilder cb;
  // Degree 4.
  add_natural(cb, 4);

  // Degree 10.
  add_pairs(cb, 5);
  add_line(cb, psl2(9), 9);
  add_line(cb, psigmal2(9), 9);
  add_line(cb, pgl2(9), 9);
  auto const m10g = m10();
  {
    PermGroup const M(m10g.generators);
    for (auto const& other : {psigmal2(9), pgl2(9)}) {
      if (PermGroup(other.generators) == M) {
        throw Error("M10 construction coincides with " + other.name);
      }
    }
  }
  add_line(cb, m10g, 9);
  add_line(cb, pgammal2(9), 9);
  add_natural(cb, 10);

  // Degree 12.
  add_line(cb, psl2(11), 11);
  add_line(cb, pgl2(11), 11);
  {
    PermGroup const M11(m11_generators());
    Permutation const c = m11_generators()[0];
    Permutation const y = find_element(M11, [&](Permutation const& p) {
      return p.order() == 2 && PermGroup({c, p}).order() == 660;
    });
    auto action = coset_action(M11, PermGroup({c, y}));
    cb.add("M11@12", reduce_generators(action.image.generators()), 7920, true,
           "M11 (generated by " + join_cycles(m11_generators())
               + ") on the right cosets of PSL(2,11) generated by "
               + join_cycles({c, y}));
  }
  cb.add("M12@12", m12_generators(), 95040, true, "Mathieu group M12");
  add_natural(cb, 12);

  // Degree 15.
  add_pairs(cb, 6);
  {
    // Collineations of the Fano plane with lines {i, i+1, i+3} mod 7.
    auto const a7 = alternating_generators(7);
    std::set<std::set<Point>> lines;
    for (Point i = 0; i < 7; ++i) {
      lines.insert({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    }
    std::vector<Permutation> collineations;
    PermGroup(a7).for_each_element([&](Permutation const& g) {
      std::set<std::set<Point>> image;
      for (auto const& l : lines) {
        image.insert({g(*l.begin()), g(*std::next(l.begin())), g(*l.rbegin())});
      }
      if (image == lines) {
        collineations.push_back(g);
      }
    });
    auto const h = reduce_generators(collineations);
    auto action = coset_action(PermGroup(a7), PermGroup(h));
    cb.add("A7@15", reduce_generators(action.image.generators()), 2520, true,
           "A7 on the right cosets of PSL(2,7) generated by " + join_cycles(h));
  }
  {
    FiniteField const F(2);
    cb.add("A8@15", projective_group(F, 4, false, false, projective_points(F, 4)),
           20160, true, "PSL(4,2) = A8 on the points of PG(3,2)");
  }
  add_natural(cb, 15);

  // Degree 21.
  cb.add("PGL(2,7)@21", on_cyclic_subgroups(pgl2(7), 8), 336, true,
         "PGL(2,7) on its cyclic subgroups of order 8");
  {
    FiniteField const& F = field(4);
    auto const pts = projective_points(F, 3);
    cb.add("PSL(3,4)@21", projective_group(F, 3, false, false, pts), 20160,
           true, "PSL(3,4) on the points of PG(2,4)");
    cb.add("PSigmaL(3,4)@21", projective_group(F, 3, false, true, pts), 40320,
           true, "PSigmaL(3,4) on the points of PG(2,4)");
    cb.add("PGL(3,4)@21", projective_group(F, 3, true, false, pts), 60480, true,
           "PGL(3,4) on the points of PG(2,4)");
    cb.add("PGammaL(3,4)@21", projective_group(F, 3, true, true, pts), 120960,
           true, "PGammaL(3,4) on the points of PG(2,4)");
  }
  add_pairs(cb, 7);
  add_natural(cb, 21);

  // Degree 28.
  cb.add("PGL(2,7)@28", on_cyclic_subgroups(pgl2(7), 3), 336, true,
         "PGL(2,7) on its cyclic subgroups of order 3");
  cb.add("PSL(2,8)@28", on_cyclic_subgroups(psl2(8), 9), 504, true,
         "PSL(2,8) on its cyclic subgroups of order 9");
  cb.add("PGammaL(2,8)@28", on_cyclic_subgroups(pgammal2(8), 9), 1512, true,
         "PGammaL(2,8) on the cyclic subgroups of order 9 of PSL(2,8)");
  auto const u = unitary33();
  cb.add("PSU(3,3)@28", u.psu, 6048, true,
         "PSU(3,3) on the isotropic points of a Hermitian form over GF(9)");
  cb.add("PGammaU(3,3)@28", u.pgu, 12096, true,
         "PGammaU(3,3) = G2(2) on the isotropic points of a Hermitian form "
         "over GF(9)");
  add_pairs(cb, 8);
  auto const [sp_minus, sp_plus] = sp62_on_forms();
  cb.add("Sp(6,2)@28", sp_minus, 1451520, true,
         "Sp(6,2) on the quadratic forms of minus type polarizing to its "
         "alternating form");
  add_line(cb, psl2(27), 27);
  add_line(cb, pgl2(27), 27);
  add_line(cb, psigmal2(27), 27);
  add_line(cb, pgammal2(27), 27);
  add_natural(cb, 28);

  // Degree 36.
  cb.add("PSL(2,8)@36", on_cyclic_subgroups(psl2(8), 7), 504, true,
         "PSL(2,8) on its cyclic subgroups of order 7");
  cb.add("PGammaL(2,8)@36", on_cyclic_subgroups(pgammal2(8), 7), 1512, true,
         "PGammaL(2,8) on the cyclic subgroups of order 7 of PSL(2,8)");
  cb.add("PGL(2,9)@36", on_cyclic_subgroups(pgl2(9), 10), 720, true,
         "PGL(2,9) on its cyclic subgroups of order 10");
  cb.add("M10@36", on_cyclic_subgroups(m10g, 5), 720, true,
         "M10 on its cyclic subgroups of order 5");
  cb.add("PGammaL(2,9)@36", on_cyclic_subgroups(pgammal2(9), 5), 1440, true,
         "PGammaL(2,9) on its cyclic subgroups of order 5");
  {
    auto const w = weyl_e6_on_root_pairs();
    auto const d = reduce_generators(derived_subgroup(PermGroup(w)).generators());
    cb.add("PSp(4,3)@36", d, 25920, true,
           "PSp(4,3) as the derived subgroup of W(E6) on the 36 pairs of "
           "opposite roots");
    cb.add("PSp(4,3):2@36", w, 51840, true,
           "PSp(4,3):2 = W(E6) on the 36 pairs of opposite roots");
  }
  cb.add("Sp(6,2)@36", sp_plus, 1451520, true,
         "Sp(6,2) on the quadratic forms of plus type polarizing to its "
         "alternating form");
  {
    PermGroup const PSU(u.psu);
    PermGroup const PGU(u.pgu);
    Permutation const x = find_element(
        PSU, [](Permutation const& p) { return p.order() == 2; });
    Permutation const y = find_element(PSU, [&](Permutation const& p) {
      return p.order() == 3 && compose(x, p).order() == 7
             && PermGroup({x, p}).order() == 168;
    });
    PermGroup const H({x, y});
    Permutation const z = find_element(PGU, [&](Permutation const& p) {
      return !PSU.contains(p) && H.contains(conjugate(x, p))
             && H.contains(conjugate(y, p));
    });
    auto a = coset_action(PSU, H);
    cb.add("PSU(3,3)@36", reduce_generators(a.image.generators()), 6048, true,
           "PSU(3,3) (as in PSU(3,3)@28) on the right cosets of PSL(2,7) "
           "generated by "
               + join_cycles({x, y}));
    auto b = coset_action(PGU, PermGroup({x, y, z}));
    cb.add("PGammaU(3,3)@36", reduce_generators(b.image.generators()), 12096,
           true,
           "PGammaU(3,3) (as in PGammaU(3,3)@28) on the right cosets of "
           "PGL(2,7) generated by "
               + join_cycles({x, y, z}));
  }
  add_product_actions(cb, "A6", alternating_generators(6),
                      Permutation::from_cycles(6, "(1,2)"), 360);
  {
    auto const t = psl2(5);
    auto const full = pgl2(5);
    PermGroup const T(t.generators);
    Permutation outer = full.generators.front();
    for (auto const& g : full.generators) {
      if (!T.contains(g)) {
        outer = g;
        break;
      }
    }
    add_product_actions(cb, "PSL(2,5)", t.generators, outer, 60);
  }
  add_pairs(cb, 9);
  add_natural(cb, 36);

  // Degree 40.
  {
    FiniteField const& F = field(3);
    auto const s = symplectic43(F);
    auto const line = point_indices(s.points, [](Vec const& v) {
      return v[2] == 0 && v[3] == 0;
    });
    cb.add("PSp(4,3)@40/points", s.psp, 25920, true,
           "PSp(4,3) on the points of PG(3,3)");
    cb.add("PSp(4,3):2@40/points", s.psp_similar, 51840, true,
           "PSp(4,3) extended by a similitude of multiplier -1, on the points "
           "of PG(3,3)");
    cb.add("PSp(4,3)@40/lines", reduce_generators(action_on_set_orbit(s.psp, line)),
           25920, true, "PSp(4,3) on its totally isotropic lines");
    cb.add("PSp(4,3):2@40/lines",
           reduce_generators(action_on_set_orbit(s.psp_similar, line)), 51840,
           true,
           "PSp(4,3) extended by a similitude of multiplier -1, on the "
           "totally isotropic lines");
    cb.add("PSL(4,3)@40", projective_group(F, 4, false, false, s.points),
           6065280, true, "PSL(4,3) on the points of PG(3,3)");
    cb.add("PGL(4,3)@40", projective_group(F, 4, true, false, s.points),
           12130560, true, "PGL(4,3) on the points of PG(3,3)");
    add_natural(cb, 40);

    // Degree 45.
    auto const pair = point_indices(s.points, [](Vec const& v) {
      return (v[1] == 0 && v[3] == 0) || (v[0] == 0 && v[2] == 0);
    });
    cb.add("PSp(4,3)@45", reduce_generators(action_on_set_orbit(s.psp, pair)),
           25920, true,
           "PSp(4,3) on the unordered pairs {W, W-perp} of non-degenerate "
           "2-spaces");
    cb.add("PSp(4,3):2@45",
           reduce_generators(action_on_set_orbit(s.psp_similar, pair)), 51840,
           true,
           "PSp(4,3) extended by a similitude of multiplier -1, on the "
           "unordered pairs {W, W-perp} of non-degenerate 2-spaces");
  }
  cb.add("PGL(2,9)@45", on_cyclic_subgroups(pgl2(9), 8), 720, true,
         "PGL(2,9) on its cyclic subgroups of order 8");
  cb.add("M10@45", on_cyclic_subgroups(m10g, 8), 720, true,
         "M10 on its cyclic subgroups of order 8");
  cb.add("PGammaL(2,9)@45", on_cyclic_subgroups(pgammal2(9), 8), 1440, true,
         "PGammaL(2,9) on its cyclic subgroups of order 8");
  add_pairs(cb, 10);
  add_natural(cb, 45);

  // Degree 63 (only the group needed for the PSU(3,3) check).
  {
    PermGroup const PSU(u.psu);
    Permutation const x = find_element(
        PSU, [](Permutation const& p) { return p.order() == 2; });
    cb.add("PSU(3,3)@63", reduce_generators(action_on_conjugates(PSU, x)), 6048,
           true, "PSU(3,3) acting by conjugation on its 63 involutions");
  }
  return cb.records();
}

std::vector<CatalogRecord> quasiprimitive_catalog() {
  CatalogBuilder cb;
  // Primitive groups of the degrees not covered by the primitive catalog.
  add_line(cb, psl2(19), 19);
  add_line(cb, pgl2(19), 19);
  add_natural(cb, 20);
  add_line(cb, psl2(23), 23);
  add_line(cb, pgl2(23), 23);
  cb.add("M24@24", m24_generators(), 244823040, true, "Mathieu group M24");
  add_natural(cb, 24);
  add_line(cb, psl2(29), 29);
  add_line(cb, pgl2(29), 29);
  add_natural(cb, 30);

  std::vector<std::size_t> const degrees{12, 15, 20, 21, 24, 28, 30};
  std::vector<Ambient> ambients;
  ambients.push_back({"S5",
                      symmetric_generators(5),
                      {{"A5", named("A5", alternating_generators(5))},
                       {"S5", named("S5", symmetric_generators(5))}}});
  ambients.push_back({"PGL(2,7)",
                      pgl2(7).generators,
                      {{"PSL(2,7)", psl2(7)}, {"PGL(2,7)", pgl2(7)}}});
  ambients.push_back({"PGammaL(2,8)",
                      pgammal2(8).generators,
                      {{"PSL(2,8)", psl2(8)}, {"PGammaL(2,8)", pgammal2(8)}}});
  ambients.push_back({"PGammaL(2,9)",
                      pgammal2(9).generators,
                      {{"A6", psl2(9)},
                       {"S6", psigmal2(9)},
                       {"PGL(2,9)", pgl2(9)},
                       {"M10", m10()},
                       {"PGammaL(2,9)", pgammal2(9)}}});
  ambients.push_back({"PGL(2,11)",
                      pgl2(11).generators,
                      {{"PSL(2,11)", psl2(11)}, {"PGL(2,11)", pgl2(11)}}});
  ambients.push_back({"PGL(2,13)",
                      pgl2(13).generators,
                      {{"PSL(2,13)", psl2(13)}, {"PGL(2,13)", pgl2(13)}}});
  for (auto const& amb : ambients) {
    add_quasi_imprimitive(cb, amb, degrees);
  }
  return cb.records();
}

constexpr char const* primitive_header = R"(# Primitive permutation groups, up to conjugacy in the symmetric group.
#
# Complete lists for degrees 4, 10, 12, 15, 21, 28, 36, 40 and 45. Only
# degree 4 is a prime power; its two groups A4 and S4 are the affine ones.
# Degree 63 holds only PSU(3,3) acting on its involutions.
#
# Regenerate with the build_catalogs tool.

)";

constexpr char const* quasiprimitive_header = R"(# Quasiprimitive permutation groups of degrees 12, 15, 20, 21, 24, 28 and 30
# that are not in primitive.cat, up to conjugacy in the symmetric group.
#
# The primitive groups of degrees 20, 24 and 30 are listed in full. The
# imprimitive ones are the faithful quasiprimitive coset actions of the
# almost simple groups with socle A5, PSL(2,7), PSL(2,8), A6, PSL(2,11) or
# PSL(2,13), found by searching every subgroup class of the automorphism
# group of the socle. Below degree 31 an imprimitive quasiprimitive group is
# almost simple, and its socle has a subgroup of index equal to the degree;
# among the simple groups of minimal degree at most 30 only these socles have
# non-maximal subgroups of index 12, 15, 20, 21, 24, 28 or 30.
#
# Regenerate with the build_catalogs tool.

)";

void write(std::string const& path, char const* header,
           std::vector<CatalogRecord> const& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path + "'");
  }
  out << header << write_catalog(records);
  std::cerr << path << ": " << records.size() << " records, digest "
            << catalog_digest(records) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: build_catalogs <output-dir>\n";
    return 2;
  }
  try {
    std::string const dir = argv[1];
    std::filesystem::create_directories(dir);
    write(dir + "/primitive.cat", primitive_header, primitive_catalog());
    write(dir + "/quasiprimitive.cat", quasiprimitive_header,
          quasiprimitive_catalog());
  } catch (std::exception const& e) {
    std::cerr << "build_catalogs: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
