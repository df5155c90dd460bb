#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiab/actions.hpp"
#include "semiab/group.hpp"

namespace semiab {

/// An object (G, B) of the pairs category: a group with a chosen subgroup.
struct PairObject {
  FiniteGroup big;
  Subgroup small;
  /// Throws AmbientMismatch unless B is a subgroup of G.
  static PairObject make(FiniteGroup big, Subgroup small);
};

/// f: (G,B) → (H,C) with f(B) ⊆ C.
struct PairMorphism {
  PairObject source;
  PairObject target;
  GroupHom f;
  /// Throws SignatureMismatch or NotHomomorphism (f(B) ⊄ C).
  static PairMorphism make(PairObject source, PairObject target, GroupHom f);
};

/// (N, C) ⊆ (G, B) with C ⊆ N ∩ B. C is kept even though the cokernel
/// forgets it.
struct PairSubobject {
  PairObject ambient;
  Subgroup n;
  Subgroup c;
  /// Throws AmbientMismatch or NotSubgroup (C ⊄ N ∩ B).
  static PairSubobject make(PairObject ambient, Subgroup n, Subgroup c);
  friend bool operator==(PairSubobject const& x, PairSubobject const& y) {
    return x.n == y.n && x.c == y.c;
  }
};

/// (Ker f, Ker f ∩ B).
PairSubobject pair_kernel(PairMorphism const& m);

struct PairCokernel {
  PairObject object;  // (G/N, image of B)
  PairMorphism projection;
};
/// Throws NotNormal unless N is normal in G.
PairCokernel pair_cokernel(PairSubobject const& s);

struct ProperReport {
  bool proper = false;
  PairSubobject kernel_of_cokernel;
  bool intersection_form = false;  // the closed form C = N ∩ B
  bool union_form = false;         // the literal reading C = N ∪ B
  /// "intersection", "union", "both" or "neither": which closed form gives
  /// the same verdict as the computation.
  std::string matched;
};
/// Decides properness by computing the kernel of the cokernel.
/// Throws NotNormal.
ProperReport properness(PairSubobject const& s);
bool is_proper_pair_subobject(PairSubobject const& s);

/// N normal in G, C normal in B, C ⊆ N.
bool is_normal_pair_subobject(PairSubobject const& s);

struct PairActionReport {
  ActionData action;  // G on N by conjugation
  bool big_stable = false;    // φ(G × N) ⊆ N
  bool small_stable = false;  // φ(B × C) ⊆ C
};
/// Throws NotNormalSubobject.
PairActionReport pair_conjugation_action(PairSubobject const& s);

struct NonexactnessWitness {
  PairSubobject subobject;
  ProperReport proper;
  PairActionReport action;
};
/// (A3, {e}) ⊆ (S3, S3).
NonexactnessWitness pairs_nonexactness_demo();
/// The first normal, non-proper subobject of `ambient`, if any.
std::optional<NonexactnessWitness> find_nonexactness_witness(PairObject const& ambient);

struct PairsSweep {
  std::size_t max_order = 0;
  std::size_t ambients = 0;
  std::size_t subobjects = 0;
  std::size_t normal = 0;
  std::size_t proper = 0;
  std::size_t normal_not_proper = 0;
  std::size_t proper_not_normal = 0;
  std::size_t cokernel_formula_mismatches = 0;
  std::size_t cokernel_depends_on_c = 0;
  std::size_t conjugation_failures = 0;
  std::size_t intersection_form_disagreements = 0;
  std::size_t union_form_disagreements = 0;
  std::optional<std::string> first_witness;
  std::size_t violations() const {
    return proper_not_normal + cokernel_formula_mismatches + cokernel_depends_on_c +
           conjugation_failures + intersection_form_disagreements;
  }
};
/// Every subobject (N, C) of every pair (G, B) with G in the family list up
/// to `max_order`.
PairsSweep pairs_sweep(std::size_t max_order, std::size_t jobs = 1);

}  // namespace semiab
