#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiab/actions.hpp"
#include "semiab/free_product.hpp"

namespace semiab {

inline constexpr std::size_t kDefaultDiagramLength = 5;
/// The shortest non-trivial words of ((A|G)|A|G) have 10 letters, so
/// shorter bounds test nothing.
inline constexpr std::size_t kDefaultThirdDiagramLength = 10;

/// ξ on a word of T_G(A) = Ker(A+G → G): ψ(commutator part) · a.
/// Throws NotInTG.
Elem xi_eval(ActionData const& phi, FreeWord const& w);

struct DiagramResult {
  bool ok = true;
  /// Whether `ok` equals the corresponding condition on the φ table.
  bool matches_table_condition = true;
  std::size_t words_checked = 0;
  std::vector<std::string> witnesses;
};

/// ψ(a·w·a⁻¹) = a·ψ(w)·a⁻¹ on every generator [g,a'] and every
/// cross-effect word of at most `max_syllables` syllables. Compared with the
/// endomorphism condition.
DiagramResult check_unit_diagram(ActionData const& phi,
                                 std::size_t max_syllables = kDefaultDiagramLength);

/// ψ([g,w]) = φ(g,ξ(w))·ξ(w)⁻¹ for every g and every w in T_G(A) of at most
/// `max_syllables` syllables. Compared with the associativity condition.
DiagramResult check_assoc_diagram(ActionData const& phi,
                                  std::size_t max_syllables = kDefaultDiagramLength);

struct WordCheck {
  bool ok = true;
  std::size_t words_checked = 0;
  std::optional<FreeWord> counterexample;
};

/// [g,w] lies in (A|G) for every g ∈ G and w ∈ T_G(A) up to the bound.
WordCheck check_mufact(FiniteGroup const& a, FiniteGroup const& g,
                       std::size_t max_syllables = kDefaultDiagramLength);

/// The two legs of the third diagram on every word of ((A|G)|A|G) with at
/// most `max_letters` letters, where (A|G) is the free group on the [g,a]
/// with g, a ≠ e. `matches_table_condition` is unused.
DiagramResult check_third_diagram(ActionData const& phi,
                                  std::size_t max_letters = kDefaultThirdDiagramLength);

/// ξ(w) = e iff w maps to the identity of A⋊G, on T_G(A) words up to the
/// bound. Requires a valid action.
WordCheck kerxi_consistency(ActionData const& phi,
                            std::size_t max_syllables = kDefaultDiagramLength);

struct TAlgebraCheckReport {
  bool unit_ok = false;
  bool endo_diagram_ok = false;
  bool assoc_diagram_ok = false;
  /// Empty when the first two diagrams fail and the third is not evaluated.
  std::optional<bool> third_diagram_ok;
  std::size_t third_words_tested = 0;
  std::vector<std::string> witnesses;
};

TAlgebraCheckReport talgebra_check(ActionData const& phi,
                                   std::size_t max_syllables = kDefaultDiagramLength,
                                   std::size_t third_letters = kDefaultThirdDiagramLength);

}  // namespace semiab
