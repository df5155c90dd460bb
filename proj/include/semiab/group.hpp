#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiab/error.hpp"

namespace semiab {

/// Dense element index into a group's Cayley table.
using Elem = std::uint32_t;

/// Default cap on group order for the exhaustive searches (isomorphism,
/// subgroup lattice, hom enumeration).
inline constexpr std::size_t kDefaultSearchBound = 64;

/// A finite group stored as a row-major Cayley table. Copies share the
/// immutable table, so passing by value is cheap and thread-safe.
class FiniteGroup {
 public:
  /// Validating constructor (make_group). Throws Error with one of
  /// MalformedTable, NoIdentity, NoInverse, NotAssociative, NotLatinSquare.
  static FiniteGroup from_table(std::vector<std::vector<Elem>> const& cayley,
                                std::string name = {});

  /// Builds from a flat row-major table already known to be a group.
  /// Only the identity and inverse tables are derived.
  static FiniteGroup from_flat_unchecked(std::size_t order,
                                         std::vector<Elem> table,
                                         std::string name = {});

  FiniteGroup();  // trivial group

  std::size_t order() const noexcept { return d_->order; }
  Elem identity() const noexcept { return d_->identity; }
  Elem mul(Elem a, Elem b) const noexcept {
    return d_->table[static_cast<std::size_t>(a) * d_->order + b];
  }
  Elem inv(Elem a) const noexcept { return d_->inverse[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  /// x y x^-1 y^-1
  Elem commutator(Elem x, Elem y) const noexcept {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }
  Elem power(Elem x, long long k) const;
  std::size_t element_order(Elem x) const;
  bool is_abelian() const;

  std::string const& name() const noexcept { return d_->name; }
  FiniteGroup renamed(std::string name) const;

  std::span<const Elem> table() const noexcept { return d_->table; }
  std::vector<std::vector<Elem>> cayley_rows() const;

  /// True when both handles share storage.
  bool same_storage(FiniteGroup const& other) const noexcept {
    return d_ == other.d_;
  }
  /// Structural equality: same order and same table.
  friend bool operator==(FiniteGroup const& a, FiniteGroup const& b);

 private:
  struct Data {
    std::size_t order = 1;
    Elem identity = 0;
    std::vector<Elem> table{0};
    std::vector<Elem> inverse{0};
    std::string name;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

inline FiniteGroup make_group(std::vector<std::vector<Elem>> const& cayley,
                              std::string name = {}) {
  return FiniteGroup::from_table(cayley, std::move(name));
}

/// A subgroup kept as a sorted member list of its ambient group.
class Subgroup {
 public:
  /// Validates closure; throws NotSubgroup otherwise.
  static Subgroup from_members(FiniteGroup ambient, std::vector<Elem> members);
  static Subgroup whole(FiniteGroup const& ambient);
  static Subgroup trivial(FiniteGroup const& ambient);

  FiniteGroup const& ambient() const noexcept { return ambient_; }
  std::vector<Elem> const& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem x) const noexcept { return x < mask_.size() && mask_[x]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == ambient_.order(); }
  bool is_subset_of(Subgroup const& other) const;

  friend bool operator==(Subgroup const& a, Subgroup const& b) {
    return a.members_ == b.members_ && a.ambient_ == b.ambient_;
  }
  friend bool operator<(Subgroup const& a, Subgroup const& b);

 private:
  friend Subgroup subgroup_generated(FiniteGroup const&, std::span<const Elem>);
  Subgroup(FiniteGroup ambient, std::vector<Elem> sorted_members);
  FiniteGroup ambient_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
};

/// A homomorphism between finite groups given by its value table.
class GroupHom {
 public:
  /// Validating constructor; throws NotHomomorphism with a witness pair.
  static GroupHom make(FiniteGroup domain, FiniteGroup codomain,
                       std::vector<Elem> map);
  static GroupHom unchecked(FiniteGroup domain, FiniteGroup codomain,
                            std::vector<Elem> map);
  static GroupHom identity(FiniteGroup const& g);
  static GroupHom zero(FiniteGroup const& domain, FiniteGroup const& codomain);

  FiniteGroup const& domain() const noexcept { return domain_; }
  FiniteGroup const& codomain() const noexcept { return codomain_; }
  std::vector<Elem> const& map() const noexcept { return map_; }
  Elem operator()(Elem x) const noexcept { return map_[x]; }

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(GroupHom const& a, GroupHom const& b) {
    return a.map_ == b.map_ && a.domain_ == b.domain_ &&
           a.codomain_ == b.codomain_;
  }

 private:
  GroupHom(FiniteGroup d, FiniteGroup c, std::vector<Elem> m)
      : domain_(std::move(d)), codomain_(std::move(c)), map_(std::move(m)) {}
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Elem> map_;
};

/// after ∘ before
GroupHom compose(GroupHom const& after, GroupHom const& before);

// -- subgroup lattice ------------------------------------------------------

Subgroup subgroup_generated(FiniteGroup const& g, std::span<const Elem> gens);
inline Subgroup subgroup_generated(FiniteGroup const& g,
                                   std::initializer_list<Elem> gens) {
  return subgroup_generated(g, std::span<const Elem>(gens.begin(), gens.size()));
}

/// ∀g∈G, h∈H: ghg⁻¹ ∈ H.
bool is_normal(FiniteGroup const& g, Subgroup const& h);
/// H normal inside the subgroup `in` of the same ambient group.
bool is_normal_in(Subgroup const& in, Subgroup const& h);
Subgroup normal_closure(FiniteGroup const& g, Subgroup const& h);

Subgroup join(Subgroup const& x, Subgroup const& y);
Subgroup intersection(Subgroup const& x, Subgroup const& y);

/// Throws AmbientMismatch unless both subgroups live in the same group.
void require_same_ambient(Subgroup const& x, Subgroup const& y);

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  /// Cosets in quotient-index order, each sorted.
  std::vector<std::vector<Elem>> cosets;
};
/// Cosets are numbered by increasing minimal member. Throws NotNormal.
Quotient quotient(FiniteGroup const& g, Subgroup const& n);

Subgroup kernel(GroupHom const& f);
Subgroup image(GroupHom const& f);
/// f(H) for a subgroup H of the domain.
Subgroup image_of(GroupHom const& f, Subgroup const& h);
Subgroup preimage(GroupHom const& f, Subgroup const& h);

/// The subgroup as a group in its own right. Index i corresponds to
/// members()[i]; `embedding` maps back into the ambient group.
struct SubgroupAsGroup {
  FiniteGroup group;
  GroupHom embedding;
  /// ambient index -> sub index, or npos for non-members.
  std::vector<Elem> index_of;
  static constexpr Elem npos = static_cast<Elem>(-1);
};
SubgroupAsGroup as_group(Subgroup const& h);

/// All subgroups, sorted by (size, members). Throws BoundExceeded.
std::vector<Subgroup> all_subgroups(FiniteGroup const& g,
                                    std::size_t bound = kDefaultSearchBound);

// -- homomorphism and isomorphism search ----------------------------------

/// Greedy generating set, preferring elements of large order.
std::vector<Elem> generating_set(FiniteGroup const& g);

std::vector<std::size_t> order_profile(FiniteGroup const& g);

std::optional<GroupHom> find_isomorphism(
    FiniteGroup const& g, FiniteGroup const& h,
    std::size_t bound = kDefaultSearchBound);
bool is_isomorphic(FiniteGroup const& g, FiniteGroup const& h,
                   std::size_t bound = kDefaultSearchBound);

/// Every homomorphism G → H, via generator-image backtracking. Throws
/// BoundExceeded if more than `limit` are found.
std::vector<GroupHom> all_homomorphisms(FiniteGroup const& g,
                                        FiniteGroup const& h,
                                        std::size_t limit = 1'000'000);

/// Automorphisms of A in a deterministic order (identity first).
std::vector<GroupHom> automorphisms(FiniteGroup const& a,
                                    std::size_t bound = kDefaultSearchBound);

}  // namespace semiab
