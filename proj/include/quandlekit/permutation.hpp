#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quandlekit {

// Points are 1-based at every public interface.
using Point = std::uint32_t;

// A bijection of {1..n}. Images are stored 0-based internally.
//
// Products are read left to right: (p * q)(x) = q(p(x)). The same convention
// is used by cycle notation I/O and by every group algorithm in the library.
class Permutation {
 public:
  using value_type = std::uint16_t;

  static constexpr std::size_t max_degree = 65535;

  Permutation() = default;

  // Identity of the given degree.
  explicit Permutation(std::size_t degree);

  // images[i] is the image of point i + 1 (1-based values).
  static Permutation from_images(std::vector<Point> const& images);

  // Parses "(1,2,3)(4,5)"; "()" is the identity. Spaces after commas and
  // between cycles are accepted.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  // No validation; raw[i] is the 0-based image of 0-based point i.
  static Permutation from_raw(std::vector<value_type> raw) {
    Permutation p;
    p.images_ = std::move(raw);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }

  Point operator()(Point x) const;

  value_type image0(std::size_t i) const noexcept { return images_[i]; }

  std::span<value_type const> raw() const noexcept { return images_; }

  bool is_identity() const noexcept;

  // 1-based images.
  std::vector<Point> images() const;

  std::string to_cycles() const;

  // Multiset of cycle lengths (fixed points included), sorted ascending.
  std::vector<std::size_t> cycle_type() const;

  // Multiplicative order; throws if it does not fit in 64 bits.
  std::uint64_t order() const;

  // Smallest moved point, or 0 for the identity.
  Point first_moved() const noexcept;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend std::strong_ordering operator<=>(Permutation const& a,
                                          Permutation const& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<value_type> images_;
};

// (compose(p, q))(x) = q(p(x)).
Permutation compose(Permutation const& p, Permutation const& q);

inline Permutation operator*(Permutation const& p, Permutation const& q) {
  return compose(p, q);
}

Permutation inverse(Permutation const& p);

// b^-1 * a * b, i.e. x -> b(a(b^-1(x))).
Permutation conjugate(Permutation const& a, Permutation const& b);

// a^-1 * b^-1 * a * b.
Permutation commutator(Permutation const& a, Permutation const& b);

Permutation power(Permutation const& p, std::int64_t k);

std::size_t hash_value(Permutation const& p) noexcept;

}  // namespace quandlekit

template <>
struct std::hash<quandlekit::Permutation> {
  std::size_t operator()(quandlekit::Permutation const& p) const noexcept {
    return quandlekit::hash_value(p);
  }
};
