#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quandlekit/perm_group.hpp"

// Concrete permutation representations used to assemble the bundled group
// catalogs: symmetric and alternating groups, classical groups over small
// fields acting on geometric objects, and actions on conjugacy classes.
namespace quandlekit::builders {

std::vector<Permutation> symmetric_generators(std::size_t n);
std::vector<Permutation> alternating_generators(std::size_t n);

// The permutations induced by `step` on the closure of `seeds`. Objects are
// numbered in sorted order of their keys. step(key, i) is the image of key
// under generator i.
template <class Key>
std::vector<Permutation> orbit_action(
    std::vector<Key> const& seeds, std::size_t generator_count,
    std::function<Key(Key const&, std::size_t)> const& step) {
  std::map<Key, std::size_t> seen;
  std::vector<Key> queue;
  for (auto const& s : seeds) {
    if (seen.emplace(s, 0).second) {
      queue.push_back(s);
    }
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t i = 0; i < generator_count; ++i) {
      Key image = step(queue[k], i);
      if (seen.emplace(image, 0).second) {
        queue.push_back(std::move(image));
      }
    }
  }
  std::size_t index = 0;
  for (auto& [key, value] : seen) {
    value = index++;
  }
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < generator_count; ++i) {
    std::vector<Point> images(seen.size());
    for (auto const& [key, value] : seen) {
      images[value] = static_cast<Point>(seen.at(step(key, i)) + 1);
    }
    out.push_back(Permutation::from_images(images));
  }
  return out;
}

// Action on the orbit of a set of points (sets kept sorted).
std::vector<Permutation> action_on_set_orbit(
    std::vector<Permutation> const& gens, std::vector<Point> const& seed);

// Action on unordered pairs of points.
std::vector<Permutation> action_on_pairs(std::vector<Permutation> const& gens);

// Conjugation action of G on the class of x.
std::vector<Permutation> action_on_conjugates(PermGroup const& G,
                                              Permutation const& x);

// Conjugation action of G on the conjugates of the cyclic subgroup <x>.
std::vector<Permutation> action_on_cyclic_subgroups(PermGroup const& G,
                                                    Permutation const& x);

// A subset of gens generating the same group, chosen greedily in order.
std::vector<Permutation> reduce_generators(std::vector<Permutation> const& gens);

// First element of G (in index order) satisfying pred. Throws if none.
Permutation find_element(PermGroup const& G,
                         std::function<bool(Permutation const&)> const& pred);

// GF(q) for a prime power q. Elements are 0..q-1, read as base-p digit
// vectors of polynomial coefficients modulo a fixed irreducible polynomial.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t frobenius(std::uint32_t a) const;  // a^p
  std::uint32_t power(std::uint32_t a, std::uint64_t k) const;

  // A generator of the multiplicative group.
  std::uint32_t primitive_element() const noexcept { return primitive_; }

  // 1, w, w^2, ... , w^(e-1) for the polynomial generator w; a basis over
  // the prime field.
  std::vector<std::uint32_t> prime_field_basis() const;

 private:
  std::uint32_t q_, p_, e_;
  std::vector<std::uint32_t> add_, mul_, neg_;
  std::uint32_t primitive_ = 1;
};

// A process-wide instance per order. Maps built on a field keep a reference
// to it, so they can outlive the caller's scope.
FiniteField const& field(std::uint32_t q);

using Vec = std::vector<std::uint32_t>;
using VectorMap = std::function<Vec(Vec const&)>;

// Nonzero vectors scaled so the first nonzero coordinate is 1, sorted.
std::vector<Vec> projective_points(FiniteField const& F, std::size_t dim);

Vec normalize(FiniteField const& F, Vec v);

// Permutations of the given projective points induced by semilinear maps.
std::vector<Permutation> projective_action(FiniteField const& F,
                                           std::vector<Vec> const& points,
                                           std::vector<VectorMap> const& maps);

// v -> v M for a dim x dim matrix M.
VectorMap linear_map(FiniteField const& F, std::vector<Vec> const& M);

// Coordinatewise a -> a^p.
VectorMap frobenius_map(FiniteField const& F);

// Elementary matrices I + a E_ij, a over a prime-field basis: generators of
// SL(dim, q).
std::vector<VectorMap> sl_generators(FiniteField const& F, std::size_t dim);

// diag(w, 1, ..., 1) with w primitive.
VectorMap diagonal_primitive(FiniteField const& F, std::size_t dim);

// Symplectic form on F^(2m) pairing coordinate i with i + m.
std::uint32_t symplectic_form(FiniteField const& F, Vec const& x, Vec const& y);

// x -> x + B(x, v) v.
VectorMap symplectic_transvection(FiniteField const& F, Vec const& v);

// Named groups used by the catalogs and tests, as generators.
struct NamedGroup {
  std::string name;
  std::vector<Permutation> generators;
  Order order;
};

// Projective line actions (degree q + 1).
NamedGroup psl2(std::uint32_t q);
NamedGroup pgl2(std::uint32_t q);
NamedGroup psigmal2(std::uint32_t q);
NamedGroup pgammal2(std::uint32_t q);
// The non-split extension of PSL(2,9) on the 10 points of its line.
NamedGroup m10();

}  // namespace quandlekit::builders
