#pragma once

#include <vector>

#include "quandlekit/quandle.hpp"

namespace quandlekit {

inline constexpr std::size_t brute_force_max_order = 6;

// Least table over all relabellings of the points (n! work).
Quandle canonical_form(Quandle const& q);

// Every quandle of order n up to isomorphism, found by backtracking over the
// right translations. Duplicates are removed by canonical_form for n <= 4 and
// by pairwise isomorphism tests above. Sorted by table. Throws BoundExceeded
// when n > max_order.
std::vector<Quandle> brute_force_enumerate(
    std::size_t n, std::size_t max_order = brute_force_max_order);

}  // namespace quandlekit
