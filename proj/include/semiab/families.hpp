#pragma once

#include <string_view>
#include <vector>

#include "semiab/group.hpp"

namespace semiab {

// Canonical element numbering (identity is always index 0):
//   cyclic n          k          <-> k mod n
//   dihedral n        i < n      <-> r^i,  n + i <-> r^i s   (order 2n)
//   symmetric n       permutations of {0..n-1} in lexicographic order of
//                     their image tuples; (στ)(x) = σ(τ(x))
//   alternating n     the even permutations, same order
//   quaternion8       1, -1, i, -i, j, -j, k, -k
//   direct product    (g, h) <-> g * |H| + h

FiniteGroup cyclic(std::size_t n);
FiniteGroup dihedral(std::size_t n);
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
FiniteGroup quaternion8();

struct DirectProduct {
  FiniteGroup group;
  GroupHom proj_left, proj_right;
  GroupHom incl_left, incl_right;
};
DirectProduct direct_product(FiniteGroup const& g, FiniteGroup const& h);

/// Parses names such as "Z6", "D4", "S3", "A4", "Q8", "Z2xZ3", "Z2^3",
/// "Z3xS3" or "1". Throws UnsupportedParameter.
FiniteGroup named_group(std::string_view name);

/// The built-in family list up to `max_order`: every cyclic group, every
/// dihedral group D_n (n >= 2), S3, S4, A4, Q8, Z2^3, Z3^2 and Z2xZ4.
/// Duplicates up to isomorphism are dropped, keeping the first name.
/// Throws BoundExceeded above kDefaultSearchBound.
std::vector<FiniteGroup> family_list(std::size_t max_order);

/// Permutation group generated by the given permutations of {0..degree-1},
/// numbered lexicographically by image tuple.
FiniteGroup permutation_group(std::size_t degree,
                              std::vector<std::vector<Elem>> const& gens,
                              std::string name = {});

}  // namespace semiab
