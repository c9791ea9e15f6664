#pragma once

#include <cstdint>
#include <vector>

#include "quandlekit/perm_group.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

// A transitive group G with a point e and rho in the centre of G_e. When the
// conjugacy class of rho does not generate G this is only a folder; pq()
// refuses folders.
struct Envelope {
  PermGroup group;
  Point base_point;
  Permutation rho;
  bool class_generates;  // <rho^G> = G
};

// Checks transitivity, rho in G_e and rho central in G_e; throws
// InvalidArgument otherwise. class_generates is computed.
Envelope make_envelope(PermGroup group, Point base_point, Permutation rho);

// The quandle with R_y = a_y⁻¹ rho a_y, where a_y maps e to y. The a_y come
// from a stabilizer chain with base starting at e.
Quandle pq(Envelope const& env);

// Same with explicit transversal elements, transversal[y - 1] mapping e to y.
Quandle pq(Envelope const& env, std::vector<Permutation> const& transversal);

// (Inn(Q), e, R_e). Throws InvalidArgument unless Q is connected.
Envelope pe(Quandle const& q, Point e);

struct ConjQuandle {
  Quandle quandle;
  // elements[i] is point i + 1; sorted by image sequence.
  std::vector<Permutation> elements;
};

// The conjugacy class of g in G with a ▷ b = b⁻¹ a b, so that x -> R_x is a
// homomorphism into the conjugation quandle of Inn.
ConjQuandle conj_quandle(PermGroup const& G, Permutation const& g,
                         std::uint64_t bound = default_enumeration_bound);

// Right cosets of G_e with G_e g ▷ G_e h = G_e rho⁻¹ g h⁻¹ rho h, computed by
// enumerating G. Cosets are labelled in the order of their least elements.
// Throws BoundExceeded when |G| > bound.
Quandle coset_quandle(Envelope const& env,
                      std::uint64_t bound = default_enumeration_bound);

// Square matrix over Z_p, row major.
using Matrix = std::vector<std::vector<std::uint32_t>>;

// Z_p^k with x ▷ y = psi(x - y) + y. The vector (v_1..v_k) is point
// 1 + sum v_i p^(k-i), i.e. points follow lexicographic order. Throws
// InvalidArgument unless p is prime, psi is invertible and psi - 1 is
// invertible.
Quandle affine_quandle(std::uint32_t p, std::size_t k, Matrix const& psi);

// No nonzero proper psi-invariant subspace. Checks that every nonzero vector
// spans the whole space under psi. Throws BoundExceeded when k > 8 or
// p^k > 65536.
bool is_irreducible(std::uint32_t p, std::size_t k, Matrix const& psi);

// (phi G phi⁻¹, e, phi rho phi⁻¹) as maps. phi must fix e.
Envelope transport(Envelope const& env, Permutation const& phi);

}  // namespace quandlekit
