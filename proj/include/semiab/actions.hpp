#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiab/free_product.hpp"
#include "semiab/group.hpp"

namespace semiab {

/// A table φ: G × A → A, row-major in g. Not necessarily an action; see
/// validate_action.
class ActionData {
 public:
  /// Checks only the table shape and value range (MalformedTable).
  ActionData(FiniteGroup acting, FiniteGroup acted, std::vector<Elem> phi);
  static ActionData trivial(FiniteGroup const& acting, FiniteGroup const& acted);

  FiniteGroup const& acting() const noexcept { return g_; }
  FiniteGroup const& acted() const noexcept { return a_; }
  Elem operator()(Elem g, Elem a) const noexcept {
    return phi_[static_cast<std::size_t>(g) * a_.order() + a];
  }
  std::vector<Elem> const& table() const noexcept { return phi_; }
  std::vector<std::vector<Elem>> rows() const;

  /// φ(g,a)·a⁻¹, the value of ψ on the generator [g,a] of (A|G).
  Elem psi_generator(Elem g, Elem a) const noexcept {
    return a_.mul((*this)(g, a), a_.inv(a));
  }

  friend bool operator==(ActionData const& x, ActionData const& y) {
    return x.phi_ == y.phi_ && x.g_ == y.g_ && x.a_ == y.a_;
  }

 private:
  FiniteGroup g_, a_;
  std::vector<Elem> phi_;
};

struct ValidationReport {
  bool unit_ok = true;           // φ(e,a) = a and φ(g,e) = e
  bool endomorphism_ok = true;   // φ(g,aa') = φ(g,a)φ(g,a')
  bool associativity_ok = true;  // φ(gg',a) = φ(g,φ(g',a))
  /// Each φ(g,−) is a bijection; implied when the three above hold.
  bool automorphism_ok = true;
  std::vector<std::string> witnesses;
  bool all() const { return unit_ok && endomorphism_ok && associativity_ok; }
};
ValidationReport validate_action(ActionData const& phi);

/// ψ on a word of (A|G) ⊆ A+G, through its commutator decomposition.
/// Throws NotInCrossEffect.
Elem psi_eval(ActionData const& phi, FreeWord const& w);
/// ψ on the product of decomposition terms (residuals ignored).
Elem psi_eval_terms(ActionData const& phi,
                    std::vector<CommutatorTerm> const& terms);

/// A ⋊ G on pairs (a,g) with index a·|G| + g and
/// (a,g)(a',g') = (a·φ(g,a'), gg').
struct SemidirectResult {
  FiniteGroup product;
  GroupHom l;  // a ↦ (a,e)
  GroupHom s;  // g ↦ (e,g)
  GroupHom p;  // (a,g) ↦ g
};
/// Throws InvalidAction naming the failed condition.
SemidirectResult semidirect(ActionData const& phi);
/// The pair multiplication table for any φ, group or not.
std::vector<Elem> pair_table(ActionData const& phi);

struct CoequalizerReport {
  bool ok = true;
  bool surjective = true;
  std::size_t words_checked = 0;
  std::optional<FreeWord> counterexample;
};
/// q: A+G → A⋊G (through the pair table) agrees with l∘ψ on every
/// cross-effect word of at most `max_syllables` syllables.
CoequalizerReport coequalizer_check(ActionData const& phi,
                                    std::size_t max_syllables);

/// A split extension over G: q∘s = id_G.
struct Point {
  FiniteGroup total;
  GroupHom q;  // total → G
  GroupHom s;  // G → total
};
/// Throws SectionNotSplitting if q∘s ≠ id or shapes disagree.
void require_splitting(Point const& pt);

struct PointAction {
  Subgroup kernel;
  SubgroupAsGroup kernel_group;
  ActionData action;  // φ(g,k) = s(g)·k·s(g)⁻¹
};
PointAction point_to_action(Point const& pt);

struct IsoReport {
  bool ok = false;
  std::optional<GroupHom> iso;
  std::string detail;
};
/// φ → A⋊G → point → action; ok iff the table comes back unchanged.
IsoReport action_point_roundtrip(ActionData const& phi);
/// pt → action → semidirect; exhibits θ(k,g) = k·s(g) as a point
/// isomorphism over id_G.
IsoReport point_action_roundtrip(Point const& pt);

/// The map h(a,g) = f_A(a)·f_G(g) out of A⋊G when
/// f_A(φ(g,a)) = f_G(g) f_A(a) f_G(g)⁻¹ for all g, a; nullopt otherwise.
std::optional<GroupHom> universal_property(ActionData const& phi,
                                           GroupHom const& f_a,
                                           GroupHom const& f_g);

/// The action of H on B when φ(H × B) ⊆ B.
std::optional<ActionData> restrict_action(ActionData const& phi,
                                          Subgroup const& b, Subgroup const& h);

struct KernelImageReport {
  Subgroup kernel;
  Subgroup image;
  bool kernel_matches = false;  // = Ker f ⋊ Ker g
  bool image_matches = false;   // = Im f ⋊ Im g
};
struct SemidirectMap {
  SemidirectResult source, target;
  GroupHom hom;
  KernelImageReport report;
};
/// (a,x) ↦ (f(a), g(x)) when f(φ(x,a)) = φ'(g(x), f(a)); nullopt otherwise.
std::optional<SemidirectMap> semidirect_map(ActionData const& phi,
                                            ActionData const& phi2,
                                            GroupHom const& f, GroupHom const& g);

struct SemidirectMapSample {
  std::size_t samples = 0;
  std::size_t attempts = 0;
  std::size_t kernel_matches = 0;
  std::size_t image_matches = 0;
  std::size_t nontrivial_f = 0;  // samples with f not the zero map
  std::vector<std::string> mismatches;
};
/// Draws (G,A,φ), (G',A',φ'), f, g uniformly from the family list up to
/// `max_order` until `count` compatible action maps are found, and checks
/// the kernel and image of each f⋊g. Deterministic for a given seed.
SemidirectMapSample sample_semidirect_maps(std::size_t count, std::uint64_t seed,
                                           std::size_t max_order = 4);

/// Every action of G on A, as homs G → Aut(A), deterministic order.
std::vector<ActionData> enumerate_actions(FiniteGroup const& g,
                                          FiniteGroup const& a,
                                          std::size_t bound = kDefaultSearchBound);

}  // namespace semiab
