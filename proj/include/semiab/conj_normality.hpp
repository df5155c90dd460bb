#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiab/actions.hpp"
#include "semiab/group.hpp"

namespace semiab {

/// φ(g,n) = g n g⁻¹ on N viewed as a group. Throws NotNormal.
ActionData conjugation_on_normal(FiniteGroup const& e, Subgroup const& n);

/// Y normalizes X: [X,Y] ⊆ X. Throws AmbientMismatch.
bool normalizes(Subgroup const& y, Subgroup const& x);
/// y x y⁻¹ ∈ X for all y ∈ Y, x ∈ X.
bool conjugation_stable(Subgroup const& y, Subgroup const& x);

struct ProperCritReport {
  bool cond1_normalizes = false;      // [X,Y] ⊆ X
  bool cond2_proper_in_join = false;  // X normal in X∨Y
  bool cond3_exact_sequence = false;  // the three parts below
  bool intersection_normal = false;   // X∩Y normal in Y
  bool order_equation = false;        // |X∨Y|·|X∩Y| = |X|·|Y|
  bool quotient_iso = false;          // (X∨Y)/X ≅ Y/(X∩Y)
  /// Explicit check that xy ↦ y(X∩Y) is a well-defined surjection
  /// X∨Y → Y/(X∩Y) with kernel X.
  bool sequence_map = false;
  std::vector<std::string> witnesses;

  bool agree() const {
    return cond1_normalizes == cond2_proper_in_join &&
           cond2_proper_in_join == cond3_exact_sequence;
  }
};

/// Throws AmbientMismatch.
ProperCritReport propercrit(Subgroup const& x, Subgroup const& y,
                            std::size_t bound = kDefaultSearchBound);

/// The conjugation action of Y on X when Y normalizes X.
std::optional<ActionData> stability_action(Subgroup const& x, Subgroup const& y);

struct PropertyPReport {
  std::string group;
  std::size_t order = 0;
  std::size_t subgroups = 0;
  std::size_t normal = 0;
  std::size_t agreements = 0;
  std::vector<std::string> violations;
};
/// is_normal(G,X) against [X,G] ⊆ X for every subgroup X. Throws
/// BoundExceeded.
PropertyPReport property_P_sweep(FiniteGroup const& g,
                                 std::size_t bound = kDefaultSearchBound);

struct ProperCritGroupRow {
  std::string group;
  std::size_t order = 0;
  std::size_t subgroups = 0;
  std::size_t pairs = 0;
  std::size_t all_true = 0;
  std::size_t all_false = 0;
  std::size_t sequence_map_mismatches = 0;
  std::vector<std::string> violations;
};
struct ProperCritSweep {
  std::size_t max_order = 0;
  std::vector<ProperCritGroupRow> rows;
  std::size_t pairs = 0;
  std::size_t violations = 0;
};
/// propercrit over every subgroup pair of every family group up to
/// `max_order`. Groups are spread over `jobs` threads; rows stay in family
/// order.
ProperCritSweep propercrit_sweep(std::size_t max_order, std::size_t jobs = 1);

struct PropertyPSweep {
  std::size_t max_order = 0;
  std::vector<PropertyPReport> rows;
  std::size_t subgroups = 0;
  std::size_t violations = 0;
};
PropertyPSweep property_P_family_sweep(std::size_t max_order, std::size_t jobs = 1);

}  // namespace semiab
