#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandlekit/catalog.hpp"
#include "quandlekit/construct.hpp"
#include "quandlekit/perm_group.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

enum class Mode { primitive, quasiprimitive };

std::string to_string(Mode mode);

// Throws InvalidArgument for anything but "primitive" or "quasiprimitive".
Mode parse_mode(std::string_view text);

// Non-identity elements of Z(G_e) whose conjugacy class generates G, sorted.
std::vector<Permutation> xi_set(PermGroup const& G, Point e,
                                std::uint64_t bound = default_enumeration_bound);

// Z(G) = 1, G/G' cyclic, G' != 1 and G' the unique minimal normal subgroup.
// With Z(G) = 1 every normal N meeting G' trivially centralizes G', and then
// [N, G] <= N ∩ G' = 1 puts N inside Z(G); so it suffices to check that each
// non-identity element of G' has normal closure containing G'. That walks
// the G-classes inside G', which needs |G'| <= bound.
bool check_inner_conditions(PermGroup const& G,
                            std::uint64_t bound = default_enumeration_bound);

struct AffineClassification {
  bool classified = false;  // false for non-simple input or order <= 2
  bool affine = false;
  std::uint32_t p = 0;
  std::size_t k = 0;
  // psi with Q isomorphic to affine_quandle(p, k, psi), when found.
  std::optional<Matrix> witness;
};

// For simple Q of order n > 2, affine iff n is a prime power. In that case a
// witness is searched among companion matrices of irreducible polynomials of
// degree k over F_p, for p^k <= 64.
AffineClassification classify_affine(Quandle const& q, bool simple);

// Indices of a maximal pairwise non-isomorphic subfamily, keeping the first
// member of each class.
std::vector<std::size_t> iso_class_representatives(
    std::vector<Quandle> const& quandles);

// Sorts by table, then keeps the least member of each isomorphism class.
std::vector<Quandle> filter_up_to_iso(std::vector<Quandle> const& quandles);

struct EnumerationEntry {
  Quandle quandle;
  std::string group_label;
  std::string rho;
  Order inner_order;
  Order displacement_order;
  bool simple = false;
  bool primitive = false;
  bool quasiprimitive = false;
  bool affine = false;
};

struct GroupSummary {
  std::string label;
  Order order;
  // Empty when the group was used; otherwise why it was skipped.
  std::string skipped;
  std::size_t xi = 0;
  std::size_t unfaithful = 0;
  std::size_t kept = 0;  // after filtering within the group
};

struct EnumerationResult {
  std::size_t degree = 0;
  Mode mode = Mode::primitive;
  std::string catalog_digest;
  std::vector<EnumerationEntry> entries;
  std::vector<GroupSummary> groups;
  // Sum of |xi| over the admitted groups.
  std::size_t raw = 0;
  // Number of entries: pairwise non-isomorphic survivors, without the
  // affine ones when those were omitted.
  std::size_t filtered = 0;
  std::size_t affine_omitted = 0;
  // Quasiprimitive mode: xi-members whose quandle is not faithful.
  std::size_t unfaithful = 0;
  // Same-group isomorphisms whose induced map fails to normalize the group
  // and carry one rho class to the other. Expected to stay empty.
  std::vector<std::string> cross_check_failures;
};

struct EnumerationOptions {
  bool verify_flags = true;
  bool non_affine_only = false;
  unsigned jobs = 1;
  std::uint64_t bound = default_enumeration_bound;
};

// Runs the envelope enumeration over the catalog records of degree n that
// carry the mode's flag: groups with non-cyclic G/G' and the symmetric and
// alternating groups of degree > 4 are skipped, every xi-member of Stab(1)
// gives a quandle, and results are merged up to isomorphism in the order
// (group label, rho). In quasiprimitive mode unfaithful quandles are dropped.
EnumerationResult enumerate_degree(std::size_t n,
                                   std::vector<CatalogRecord> const& catalog,
                                   Mode mode,
                                   EnumerationOptions const& options = {});

}  // namespace quandlekit
