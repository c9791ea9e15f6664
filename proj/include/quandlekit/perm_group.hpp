#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "quandlekit/permutation.hpp"

namespace quandlekit {

using Order = boost::multiprecision::cpp_int;

// Default cap on element-wise work (element enumeration, class enumeration,
// centre search leaves, coset counts).
inline constexpr std::uint64_t default_enumeration_bound = 1'000'000;

// A permutation group with a stabilizer chain built by the deterministic
// Schreier-Sims algorithm. Base points are the smallest points moved by the
// generators as they are added, unless a base prefix is requested. Immutable
// after construction.
class PermGroup {
 public:
  // Throws InvalidArgument on an empty list or mixed degrees.
  explicit PermGroup(std::vector<Permutation> generators);

  // The chain starts with `prefix` (1-based points). When `known_order` is
  // given the construction stops as soon as the chain reaches it.
  static PermGroup with_base_prefix(std::vector<Permutation> generators,
                                    std::vector<Point> const& prefix,
                                    std::optional<Order> const& known_order
                                    = std::nullopt);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }

  // As supplied (never empty; the trivial group has one identity generator).
  std::vector<Permutation> const& generators() const noexcept {
    return generators_;
  }

  Order const& order() const noexcept { return order_; }

  // Throws BoundExceeded when the order does not fit in 64 bits.
  std::uint64_t order_u64() const;

  bool is_trivial() const noexcept { return order_ == 1; }

  // 1-based base points.
  std::vector<Point> base() const;

  std::vector<std::size_t> basic_orbit_sizes() const;

  // Strong generators of the i-th stabilizer in the chain (0-based level).
  std::vector<Permutation> const& strong_generators(std::size_t level) const;

  // Membership by sifting. Throws InvalidArgument on degree mismatch.
  bool contains(Permutation const& p) const;

  bool contains_all(std::vector<Permutation> const& ps) const;

  // Mixed-radix index of a member in [0, order). Throws InvalidArgument for
  // non-members.
  std::uint64_t element_index(Permutation const& g) const;

  Permutation element_at(std::uint64_t index) const;

  // Calls f on every element, in index order. Throws BoundExceeded when the
  // order exceeds `bound`.
  void for_each_element(std::function<void(Permutation const&)> const& f,
                        std::uint64_t bound = default_enumeration_bound) const;

  std::vector<Permutation> elements(
      std::uint64_t bound = default_enumeration_bound) const;

  // Same set of elements.
  friend bool operator==(PermGroup const& a, PermGroup const& b);

  struct Level;

  // The stabilizer chain, level 0 first.
  std::vector<Level> const& levels() const noexcept { return levels_; }

 private:
  friend class ChainBuilder;

  PermGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  Order order_ = 1;

  friend PermGroup stabilizer(PermGroup const& G, Point point);
};

struct PermGroup::Level {
  std::uint16_t base = 0;  // 0-based
  std::vector<Permutation> strong;
  std::vector<std::uint16_t> orbit;  // discovery order; orbit[0] == base
  std::vector<std::int32_t> position;  // point -> index in orbit, or -1
  std::vector<Permutation> transversal;  // base^transversal[k] == orbit[k]
  std::vector<Permutation> transversal_inv;
};

bool is_subgroup(PermGroup const& H, PermGroup const& G);

// H normal in G: H <= G and closed under conjugation by G's generators.
bool is_normal(PermGroup const& G, PermGroup const& H);

// Sorted orbit of `point`.
std::vector<Point> orbit(PermGroup const& G, Point point);

// All orbits, each sorted, ordered by smallest point.
std::vector<std::vector<Point>> orbits(PermGroup const& G);

// transversal[y - 1] maps `point` to y for y in the orbit of `point`, found by
// breadth-first search over the generators; empty entries elsewhere.
std::vector<std::optional<Permutation>> orbit_transversal(PermGroup const& G,
                                                          Point point);

PermGroup stabilizer(PermGroup const& G, Point point);

// Smallest normal subgroup of G containing the seeds. Seeds must lie in G.
PermGroup normal_closure(PermGroup const& G,
                         std::vector<Permutation> const& seeds);

PermGroup derived_subgroup(PermGroup const& G);

// Elements of Z(G), sorted. The search walks the stabilizer chain and only
// follows images allowed by maps commuting with G on each orbit; it throws
// BoundExceeded if more than `bound` search nodes are needed.
std::vector<Permutation> center_elements(
    PermGroup const& G, std::uint64_t bound = default_enumeration_bound);

PermGroup center(PermGroup const& G,
                 std::uint64_t bound = default_enumeration_bound);

// The G-conjugacy class of g, sorted. g must lie in G.
std::vector<Permutation> conjugacy_class(
    PermGroup const& G, Permutation const& g,
    std::uint64_t bound = default_enumeration_bound);

// Representatives of the orbits of G acting by conjugation on the elements
// of N (N normal in G), each the least element of its class; sorted.
// Requires |N| <= bound.
std::vector<Permutation> class_representatives(
    PermGroup const& N, PermGroup const& G,
    std::uint64_t bound = default_enumeration_bound);

inline std::vector<Permutation> conjugacy_class_representatives(
    PermGroup const& G, std::uint64_t bound = default_enumeration_bound) {
  return class_representatives(G, G, bound);
}

bool is_transitive(PermGroup const& G);

class BlockSystem {
 public:
  BlockSystem(std::size_t degree, std::vector<std::vector<Point>> classes);

  std::size_t degree() const noexcept { return degree_; }

  // Each class sorted; classes ordered by smallest point.
  std::vector<std::vector<Point>> const& classes() const noexcept {
    return classes_;
  }

  // 0-based class index of a point.
  std::size_t class_of(Point x) const { return class_index_.at(x - 1); }

  bool is_trivial() const noexcept {
    return classes_.size() == 1 || classes_.size() == degree_;
  }

  std::string to_string() const;

  friend bool operator==(BlockSystem const&, BlockSystem const&) = default;

 private:
  std::size_t degree_;
  std::vector<std::vector<Point>> classes_;
  std::vector<std::size_t> class_index_;
};

// Finest G-invariant partition in which a and b share a class. Throws
// InvalidArgument when a == b.
BlockSystem minimal_block_system(PermGroup const& G, Point a, Point b);

// Finest G-invariant partition with all of `seeds` in one class.
BlockSystem minimal_block_system(PermGroup const& G,
                                 std::vector<Point> const& seeds);

// Every G-invariant partition other than the two trivial ones (G transitive),
// ordered by block size.
std::vector<BlockSystem> block_systems(PermGroup const& G);

// Permutation group induced on the classes of an invariant partition.
PermGroup action_on_blocks(PermGroup const& G, BlockSystem const& blocks);

bool is_primitive(PermGroup const& G);

// Transitive, and no proper nontrivial block system has a nontrivial
// kernel. A nontrivial intransitive normal subgroup has its orbits as such a
// system and lies in its kernel; conversely a nontrivial kernel is an
// intransitive normal subgroup.
bool is_quasiprimitive(PermGroup const& G);

// A block system whose kernel is nontrivial, if any (G transitive).
std::optional<BlockSystem> quasiprimitivity_witness(PermGroup const& G);

struct CosetAction {
  PermGroup image;
  bool faithful;
  // representatives[i] lies in the coset labelled i + 1.
  std::vector<Permutation> representatives;
};

// Action of G by right multiplication on the right cosets of H <= G. The coset
// H is point 1; other cosets are numbered in breadth-first order.
CosetAction coset_action(PermGroup const& G, PermGroup const& H,
                         std::uint64_t bound = default_enumeration_bound);

// Least element of the right coset Hg in the base-image order of H's chain.
Permutation canonical_coset_representative(PermGroup const& H,
                                           Permutation const& g);

// Whether G/N is cyclic, by explicit coset enumeration. Throws
// InvalidArgument unless N is normal in G, BoundExceeded when [G:N] > 1024.
bool quotient_is_cyclic(PermGroup const& G, PermGroup const& N);

}  // namespace quandlekit
