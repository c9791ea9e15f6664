#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandlekit/perm_group.hpp"
#include "quandlekit/permutation.hpp"

namespace quandlekit {

// A finite quandle given by its multiplication table, table(x, y) = x ▷ y.
// Column y read as x -> x ▷ y is the right translation R_y.
class Quandle {
 public:
  // rows[x - 1][y - 1] = x ▷ y, 1-based. Checks shape, range and all three
  // axioms exhaustively; throws InvalidArgument for shape/range problems and
  // AxiomViolation with a witness otherwise.
  static Quandle from_table(std::vector<std::vector<Point>> const& rows);

  // Builds the table from the columns R_1..R_n and validates it.
  static Quandle from_columns(std::vector<Permutation> const& columns);

  std::size_t order() const noexcept { return n_; }

  // x ▷ y (1-based, range checked).
  Point operator()(Point x, Point y) const;

  // x ▷⁻¹ y, the unique z with z ▷ y = x.
  Point left_divide(Point x, Point y) const;

  // Unchecked 0-based access.
  std::uint16_t at0(std::size_t x, std::size_t y) const noexcept {
    return table_[x * n_ + y];
  }

  std::vector<std::vector<Point>> rows() const;

  Permutation right_translation(Point y) const;

  std::vector<Permutation> right_translations() const;

  friend bool operator==(Quandle const&, Quandle const&) = default;
  friend auto operator<=>(Quandle const& a, Quandle const& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) {
      return c;
    }
    return a.table_ <=> b.table_;
  }

 private:
  Quandle() = default;

  void validate() const;

  std::size_t n_ = 0;
  std::vector<std::uint16_t> table_;  // 0-based, row major
};

// x ▷ y = x.
Quandle trivial_quandle(std::size_t n);

// Z_n with x ▷ y = 2y - x, relabelled 0 -> 1, ..., n-1 -> n.
Quandle dihedral_quandle(std::size_t n);

// Relabel points: the result has f(x) ▷ f(y) = f(x ▷ y).
Quandle relabel(Quandle const& q, Permutation const& f);

PermGroup inner_group(Quandle const& q);

// Generated by R_1⁻¹R_y for y = 2..n, which generates the same group as all
// R_x⁻¹R_y.
PermGroup displacement_group(Quandle const& q);

bool is_connected(Quandle const& q);
bool is_faithful(Quandle const& q);
bool is_latin(Quandle const& q);

// An equivalence relation on the points, compatible with ▷ in both arguments.
// On a finite quandle this also gives compatibility with ▷⁻¹: each R_z maps
// classes onto classes, and a bijection of a finite set of classes induced
// this way has its inverse induced by R_z⁻¹.
class Congruence {
 public:
  // class_of[x - 1] is any class id; normalized so ids are numbered by
  // first occurrence.
  explicit Congruence(std::vector<std::size_t> class_of);

  std::size_t order() const noexcept { return class_of_.size(); }

  std::size_t class_of(Point x) const { return class_of_.at(x - 1); }

  std::size_t class_count() const noexcept { return count_; }

  // Sorted classes ordered by least point.
  std::vector<std::vector<Point>> classes() const;

  bool is_full() const noexcept { return count_ <= 1; }
  bool is_discrete() const noexcept { return count_ == class_of_.size(); }

  bool is_compatible_with(Quandle const& q) const;

  friend bool operator==(Congruence const&, Congruence const&) = default;

 private:
  std::vector<std::size_t> class_of_;
  std::size_t count_ = 0;
};

// Smallest congruence identifying every given pair.
Congruence congruence_closure(Quandle const& q,
                              std::vector<std::pair<Point, Point>> const& pairs);

// Literal definition: more than one point and only the trivial congruences.
// In particular the two-element trivial quandle is simple.
bool is_simple(Quandle const& q);

bool is_primitive_quandle(Quandle const& q);

// Inn(Q) quasiprimitive on the points and Q faithful.
bool is_quasiprimitive_quandle(Quandle const& q);

// Isomorphism invariants used to reject pairs quickly.
struct QuandleInvariants {
  std::size_t order = 0;
  Order inner_order;
  Order displacement_order;
  bool connected = false;
  // Sorted multiset of column cycle types.
  std::vector<std::vector<std::size_t>> column_types;

  friend bool operator==(QuandleInvariants const&,
                         QuandleInvariants const&) = default;
};

QuandleInvariants invariants(Quandle const& q);

// A bijection f with f(x ▷ y) = f(x) ▷ f(y), or nullopt.
std::optional<Permutation> are_isomorphic(Quandle const& a, Quandle const& b);

// Same, skipping the invariant comparison (callers that bucket by invariants
// already).
std::optional<Permutation> find_isomorphism(Quandle const& a, Quandle const& b);

// A small list of points whose closure under ▷ is the whole quandle, chosen
// greedily by least missing point.
std::vector<Point> quandle_generators(Quandle const& q);

}  // namespace quandlekit
