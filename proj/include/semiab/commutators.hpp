#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "semiab/free_product.hpp"
#include "semiab/group.hpp"

namespace semiab {

/// Subgroup generated by all x y x⁻¹ y⁻¹ with x ∈ X, y ∈ Y (the image of the
/// cross-effect (X|Y) under the fold). Not normally closed.
Subgroup binary_commutator(Subgroup const& x, Subgroup const& y);

/// Normal closure of binary_commutator in the ambient group.
Subgroup huq_commutator(Subgroup const& x, Subgroup const& y);

struct CommutatorRequest {
  FiniteGroup ambient;
  std::vector<Subgroup> parts;
  /// Longest cross-effect word length considered.
  std::size_t max_word_syllables = 16;
  /// Budget for the half-length word enumeration of a single round.
  std::size_t max_words = 1'000'000;
  /// For n >= 3, also compute the binary-commutator upper bound and stop
  /// as soon as the enumerated image reaches it.
  bool use_upper_bound = true;
};

enum class OracleFlag {
  /// Two consecutive rounds past the shortest n-fold commutator length
  /// added nothing. Heuristic, not a proof.
  Stabilized,
  /// The enumerated image met a proven upper bound.
  Exact,
  /// The length or word budget ran out first; result is a lower bound.
  BoundHit,
};
std::string_view to_string(OracleFlag f);

struct OracleResult {
  Subgroup result;
  OracleFlag flag = OracleFlag::BoundHit;
  std::size_t rounds = 0;
  /// Largest cross-effect word length covered by the last finished round.
  std::size_t covered_length = 0;
  std::size_t words_examined = 0;
  std::optional<Subgroup> upper_bound;
};

/// Length of the shortest left-normed n-fold commutator word
/// [[x_1,x_2],...,x_n]: 4, 10, 22, ...
std::size_t shortest_commutator_length(std::size_t n);

/// The n-fold commutator [X_1,...,X_n]: the subgroup generated by the folds
/// of all words in (X_1|...|X_n). Rounds cover word lengths L = 4, 6, 8, ...
/// Each round enumerates the words u of length <= L/2 and pairs those with
/// equal retractions, so every cross-effect word of length <= L is reached as
/// u·v⁻¹. Throws TooFewFactors or AmbientMismatch.
OracleResult higher_commutator_oracle(CommutatorRequest const& req);

/// Direct form for small L: enumerate all words up to `max_syllables`,
/// keep the members of the cross-effect, fold them into the ambient group.
Subgroup cross_effect_image_by_enumeration(std::vector<Subgroup> const& parts,
                                           std::size_t max_syllables,
                                           EnumerationBounds bounds = {});

/// The candidate generating set {[[x,y],z], [[y,z],x], [[z,x],y]}.
Subgroup ternary_generators(Subgroup const& x, Subgroup const& y,
                            Subgroup const& z);

enum class Agreement { Agree, Disagree, Unverified };
std::string_view to_string(Agreement a);

struct TernaryResult {
  Subgroup result;
  Agreement agreement = Agreement::Unverified;
  OracleResult oracle;
};

/// ternary_generators, cross-checked against the oracle on every call.
TernaryResult ternary_recipe(Subgroup const& x, Subgroup const& y,
                             Subgroup const& z, std::size_t max_words = 1'000'000);

}  // namespace semiab
