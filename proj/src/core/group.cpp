#include "semiab/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace semiab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::FactorMismatch: return "FactorMismatch";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::NotInCrossEffect: return "NotInCrossEffect";
    case ErrorKind::NotInTG: return "NotInTG";
    case ErrorKind::TooFewFactors: return "TooFewFactors";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::SectionNotSplitting: return "SectionNotSplitting";
    case ErrorKind::NotNormalSubobject: return "NotNormalSubobject";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

void raise(ErrorKind kind, std::string const& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

// -- FiniteGroup ------------------------------------------------------------

namespace {

std::vector<Elem> derive_inverses(std::size_t n, std::vector<Elem> const& t,
                                  Elem e) {
  std::vector<Elem> inv(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (t[x * n + y] == e) {
        inv[x] = static_cast<Elem>(y);
        break;
      }
  return inv;
}

}  // namespace

FiniteGroup::FiniteGroup() : d_(std::make_shared<const Data>()) {}

FiniteGroup FiniteGroup::from_table(
    std::vector<std::vector<Elem>> const& cayley, std::string name) {
  std::size_t const n = cayley.size();
  if (n == 0) raise(ErrorKind::MalformedTable, "empty Cayley table");
  std::vector<Elem> t;
  t.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (cayley[r].size() != n) {
      std::ostringstream os;
      os << "row " << r << " has " << cayley[r].size() << " entries, expected "
         << n;
      raise(ErrorKind::MalformedTable, os.str());
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (cayley[r][c] >= n) {
        std::ostringstream os;
        os << "entry (" << r << "," << c << ") = " << cayley[r][c]
           << " is outside 0.." << n - 1;
        raise(ErrorKind::MalformedTable, os.str());
      }
      t.push_back(cayley[r][c]);
    }
  }
  auto at = [&](std::size_t x, std::size_t y) { return t[x * n + y]; };

  std::optional<Elem> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = static_cast<Elem>(e);
  }
  if (!identity)
    raise(ErrorKind::NoIdentity, "no element e with e*x = x*e = x for all x");
  Elem const e = *identity;

  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      found = at(x, y) == e && at(y, x) == e;
    if (!found) {
      std::ostringstream os;
      os << "element " << x << " has no two-sided inverse (identity " << e
         << ")";
      raise(ErrorKind::NoInverse, os.str());
    }
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z))) {
          std::ostringstream os;
          os << "witness (x,y,z) = (" << x << "," << y << "," << z
             << "): (xy)z = " << at(at(x, y), z)
             << " but x(yz) = " << at(x, at(y, z));
          raise(ErrorKind::NotAssociative, os.str());
        }

  // Implied by the three checks above for finite tables; kept as a guard.
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (row[at(r, c)]++ || col[at(c, r)]++) {
        std::ostringstream os;
        os << "row/column " << r << " repeats a value";
        raise(ErrorKind::NotLatinSquare, os.str());
      }
    }
  }

  auto d = std::make_shared<Data>();
  d->order = n;
  d->identity = e;
  d->inverse = derive_inverses(n, t, e);
  d->table = std::move(t);
  d->name = std::move(name);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_flat_unchecked(std::size_t order,
                                             std::vector<Elem> table,
                                             std::string name) {
  auto d = std::make_shared<Data>();
  d->order = order;
  Elem e = 0;
  for (std::size_t c = 0; c < order; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < order && ok; ++x) ok = table[c * order + x] == x;
    if (ok) {
      e = static_cast<Elem>(c);
      break;
    }
  }
  d->identity = e;
  d->inverse = derive_inverses(order, table, e);
  d->table = std::move(table);
  d->name = std::move(name);
  return FiniteGroup(std::move(d));
}

Elem FiniteGroup::power(Elem x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Elem r = identity();
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::size_t FiniteGroup::element_order(Elem x) const {
  std::size_t k = 1;
  for (Elem y = x; y != identity(); y = mul(y, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order(); ++x)
    for (Elem y = x + 1; y < order(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return FiniteGroup(std::move(d));
}

std::vector<std::vector<Elem>> FiniteGroup::cayley_rows() const {
  std::vector<std::vector<Elem>> rows(order());
  for (std::size_t r = 0; r < order(); ++r)
    rows[r].assign(d_->table.begin() + static_cast<std::ptrdiff_t>(r * order()),
                   d_->table.begin() +
                       static_cast<std::ptrdiff_t>((r + 1) * order()));
  return rows;
}

bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->order == b.d_->order && a.d_->table == b.d_->table;
}

// -- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup ambient, std::vector<Elem> sorted_members)
    : ambient_(std::move(ambient)),
      members_(std::move(sorted_members)),
      mask_(ambient_.order(), 0) {
  for (Elem m : members_) mask_[m] = 1;
}

Subgroup Subgroup::from_members(FiniteGroup ambient,
                                std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Elem m : members)
    if (m >= ambient.order())
      raise(ErrorKind::NotSubgroup, "member index " + std::to_string(m) +
                                        " outside the ambient group");
  Subgroup s(std::move(ambient), std::move(members));
  auto const& g = s.ambient_;
  if (!s.contains(g.identity()))
    raise(ErrorKind::NotSubgroup, "identity missing");
  for (Elem x : s.members_) {
    if (!s.contains(g.inv(x)))
      raise(ErrorKind::NotSubgroup,
            "inverse of " + std::to_string(x) + " missing");
    for (Elem y : s.members_)
      if (!s.contains(g.mul(x, y)))
        raise(ErrorKind::NotSubgroup, "product " + std::to_string(x) + "*" +
                                          std::to_string(y) + " missing");
  }
  return s;
}

Subgroup Subgroup::whole(FiniteGroup const& ambient) {
  std::vector<Elem> all(ambient.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(ambient, std::move(all));
}

Subgroup Subgroup::trivial(FiniteGroup const& ambient) {
  return Subgroup(ambient, {ambient.identity()});
}

bool Subgroup::is_subset_of(Subgroup const& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Elem x) { return other.contains(x); });
}

bool operator<(Subgroup const& a, Subgroup const& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members_ < b.members_;
}

// -- GroupHom ---------------------------------------------------------------

GroupHom GroupHom::make(FiniteGroup domain, FiniteGroup codomain,
                        std::vector<Elem> map) {
  if (map.size() != domain.order())
    raise(ErrorKind::NotHomomorphism, "map length differs from domain order");
  for (Elem v : map)
    if (v >= codomain.order())
      raise(ErrorKind::NotHomomorphism, "value outside the codomain");
  for (Elem x = 0; x < domain.order(); ++x)
    for (Elem y = 0; y < domain.order(); ++y)
      if (map[domain.mul(x, y)] != codomain.mul(map[x], map[y]))
        raise(ErrorKind::NotHomomorphism,
              "f(xy) != f(x)f(y) at (x,y) = (" + std::to_string(x) + "," +
                  std::to_string(y) + ")");
  if (map[domain.identity()] != codomain.identity())
    raise(ErrorKind::NotHomomorphism, "identity not preserved");
  return GroupHom(std::move(domain), std::move(codomain), std::move(map));
}

GroupHom GroupHom::unchecked(FiniteGroup domain, FiniteGroup codomain,
                             std::vector<Elem> map) {
  return GroupHom(std::move(domain), std::move(codomain), std::move(map));
}

GroupHom GroupHom::identity(FiniteGroup const& g) {
  std::vector<Elem> m(g.order());
  std::iota(m.begin(), m.end(), Elem{0});
  return GroupHom(g, g, std::move(m));
}

GroupHom GroupHom::zero(FiniteGroup const& domain,
                        FiniteGroup const& codomain) {
  return GroupHom(domain, codomain,
                  std::vector<Elem>(domain.order(), codomain.identity()));
}

bool GroupHom::is_injective() const {
  std::vector<char> seen(codomain_.order(), 0);
  for (Elem v : map_)
    if (seen[v]++) return false;
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<char> seen(codomain_.order(), 0);
  for (Elem v : map_) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

GroupHom compose(GroupHom const& after, GroupHom const& before) {
  if (!(before.codomain() == after.domain()))
    raise(ErrorKind::SignatureMismatch, "cannot compose: codomain != domain");
  std::vector<Elem> m(before.domain().order());
  for (Elem x = 0; x < m.size(); ++x) m[x] = after(before(x));
  return GroupHom::unchecked(before.domain(), after.codomain(), std::move(m));
}

// -- lattice --------------------------------------------------------------

Subgroup subgroup_generated(FiniteGroup const& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> found{g.identity()};
  in[g.identity()] = 1;
  std::vector<Elem> uniq;
  for (Elem x : gens)
    if (x < g.order() && x != g.identity() &&
        std::find(uniq.begin(), uniq.end(), x) == uniq.end())
      uniq.push_back(x);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Elem s : uniq) {
      Elem y = g.mul(found[i], s);
      if (!in[y]) {
        in[y] = 1;
        found.push_back(y);
      }
    }
  std::sort(found.begin(), found.end());
  return Subgroup(g, std::move(found));
}

bool is_normal_in(Subgroup const& in, Subgroup const& h) {
  require_same_ambient(in, h);
  auto const& g = in.ambient();
  for (Elem x : in.members())
    for (Elem y : h.members())
      if (!h.contains(g.conj(x, y))) return false;
  return true;
}

bool is_normal(FiniteGroup const& g, Subgroup const& h) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : h.members())
      if (!h.contains(g.conj(x, y))) return false;
  return true;
}

Subgroup normal_closure(FiniteGroup const& g, Subgroup const& h) {
  std::vector<Elem> gens;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : h.members()) gens.push_back(g.conj(x, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_generated(g, gens);
}

void require_same_ambient(Subgroup const& x, Subgroup const& y) {
  if (!(x.ambient() == y.ambient()))
    raise(ErrorKind::AmbientMismatch, "subgroups live in different groups");
}

Subgroup join(Subgroup const& x, Subgroup const& y) {
  require_same_ambient(x, y);
  std::vector<Elem> gens = x.members();
  gens.insert(gens.end(), y.members().begin(), y.members().end());
  return subgroup_generated(x.ambient(), gens);
}

Subgroup intersection(Subgroup const& x, Subgroup const& y) {
  require_same_ambient(x, y);
  std::vector<Elem> common;
  for (Elem m : x.members())
    if (y.contains(m)) common.push_back(m);
  return Subgroup::from_members(x.ambient(), std::move(common));
}

Quotient quotient(FiniteGroup const& g, Subgroup const& n) {
  if (!(n.ambient() == g))
    raise(ErrorKind::AmbientMismatch, "subgroup not in this group");
  if (!is_normal(g, n))
    raise(ErrorKind::NotNormal, "quotient requires a normal subgroup");
  std::vector<Elem> coset_of(g.order(), SubgroupAsGroup::npos);
  std::vector<std::vector<Elem>> cosets;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != SubgroupAsGroup::npos) continue;
    std::vector<Elem> c;
    for (Elem m : n.members()) c.push_back(g.mul(x, m));
    std::sort(c.begin(), c.end());
    for (Elem y : c) coset_of[y] = static_cast<Elem>(cosets.size());
    cosets.push_back(std::move(c));
  }
  std::size_t const q = cosets.size();
  std::vector<Elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = coset_of[g.mul(cosets[i][0], cosets[j][0])];
  std::string name = g.name().empty() ? std::string{} : g.name() + "/N";
  auto qg = FiniteGroup::from_flat_unchecked(q, std::move(table), name);
  auto proj = GroupHom::unchecked(g, qg, coset_of);
  return Quotient{qg, proj, std::move(cosets)};
}

Subgroup kernel(GroupHom const& f) {
  std::vector<Elem> k;
  for (Elem x = 0; x < f.domain().order(); ++x)
    if (f(x) == f.codomain().identity()) k.push_back(x);
  return Subgroup::from_members(f.domain(), std::move(k));
}

Subgroup image(GroupHom const& f) {
  return image_of(f, Subgroup::whole(f.domain()));
}

Subgroup image_of(GroupHom const& f, Subgroup const& h) {
  std::vector<Elem> im;
  for (Elem x : h.members()) im.push_back(f(x));
  return Subgroup::from_members(f.codomain(), std::move(im));
}

Subgroup preimage(GroupHom const& f, Subgroup const& h) {
  std::vector<Elem> pre;
  for (Elem x = 0; x < f.domain().order(); ++x)
    if (h.contains(f(x))) pre.push_back(x);
  return Subgroup::from_members(f.domain(), std::move(pre));
}

SubgroupAsGroup as_group(Subgroup const& h) {
  auto const& g = h.ambient();
  std::size_t const k = h.size();
  std::vector<Elem> index_of(g.order(), SubgroupAsGroup::npos);
  for (std::size_t i = 0; i < k; ++i)
    index_of[h.members()[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = index_of[g.mul(h.members()[i], h.members()[j])];
  auto sg = FiniteGroup::from_flat_unchecked(k, std::move(table));
  auto emb = GroupHom::unchecked(sg, g, h.members());
  return SubgroupAsGroup{sg, emb, std::move(index_of)};
}

std::vector<Subgroup> all_subgroups(FiniteGroup const& g, std::size_t bound) {
  if (g.order() > bound)
    raise(ErrorKind::BoundExceeded, "order " + std::to_string(g.order()) +
                                        " exceeds bound " +
                                        std::to_string(bound));
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    auto c = subgroup_generated(g, {x});
    if (seen.insert(c.members()).second) cyclic.push_back(c);
  }
  std::vector<Subgroup> all = cyclic;
  // Every subgroup is a join of cyclic ones; close under joining one more.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto const& c : cyclic) {
      if (c.is_subset_of(all[i])) continue;
      auto j = join(all[i], c);
      if (seen.insert(j.members()).second) all.push_back(std::move(j));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

// -- hom search -------------------------------------------------------------

std::vector<Elem> generating_set(FiniteGroup const& g) {
  std::vector<Elem> elems(g.order());
  std::iota(elems.begin(), elems.end(), Elem{0});
  std::vector<std::size_t> ord(g.order());
  for (Elem x = 0; x < g.order(); ++x) ord[x] = g.element_order(x);
  std::stable_sort(elems.begin(), elems.end(),
                   [&](Elem a, Elem b) { return ord[a] > ord[b]; });
  std::vector<Elem> gens;
  Subgroup s = Subgroup::trivial(g);
  for (Elem x : elems) {
    if (s.is_whole()) break;
    if (s.contains(x)) continue;
    gens.push_back(x);
    s = subgroup_generated(g, gens);
  }
  return gens;
}

std::vector<std::size_t> order_profile(FiniteGroup const& g) {
  std::vector<std::size_t> p;
  for (Elem x = 0; x < g.order(); ++x) p.push_back(g.element_order(x));
  std::sort(p.begin(), p.end());
  return p;
}

namespace {

/// Backtracking over generator images. `visit` returns false to stop.
class HomSearch {
 public:
  HomSearch(FiniteGroup g, FiniteGroup h, bool injective)
      : g_(std::move(g)), h_(std::move(h)), injective_(injective) {
    gens_ = generating_set(g_);
    for (Elem x : gens_) {
      std::vector<Elem> cand;
      std::size_t ox = g_.element_order(x);
      for (Elem y = 0; y < h_.order(); ++y) {
        std::size_t oy = h_.element_order(y);
        if (injective_ ? oy == ox : ox % oy == 0) cand.push_back(y);
      }
      candidates_.push_back(std::move(cand));
    }
  }

  void run(std::function<bool(std::vector<Elem> const&)> const& visit) {
    std::vector<Elem> chosen;
    recurse(chosen, visit);
  }

 private:
  // Extends generator images to the subgroup they generate; nullopt on a
  // conflict (not a hom) or, in injective mode, a collision.
  std::optional<std::vector<Elem>> extend(std::vector<Elem> const& chosen) {
    constexpr Elem undef = static_cast<Elem>(-1);
    std::vector<Elem> map(g_.order(), undef);
    std::vector<char> used(h_.order(), 0);
    std::vector<Elem> queue{g_.identity()};
    map[g_.identity()] = h_.identity();
    used[h_.identity()] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Elem x = queue[qi];
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        Elem y = g_.mul(x, gens_[j]);
        Elem fy = h_.mul(map[x], chosen[j]);
        if (map[y] == undef) {
          if (injective_ && used[fy]) return std::nullopt;
          map[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return std::nullopt;
        }
      }
    }
    return map;
  }

  bool recurse(std::vector<Elem>& chosen,
               std::function<bool(std::vector<Elem> const&)> const& visit) {
    if (chosen.size() == gens_.size()) {
      auto m = extend(chosen);
      return !m || visit(*m);
    }
    for (Elem y : candidates_[chosen.size()]) {
      chosen.push_back(y);
      bool keep = true;
      if (chosen.size() == gens_.size() || extend(chosen))
        keep = recurse(chosen, visit);
      chosen.pop_back();
      if (!keep) return false;
    }
    return true;
  }

  FiniteGroup g_, h_;
  bool injective_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
};

}  // namespace

std::optional<GroupHom> find_isomorphism(FiniteGroup const& g,
                                         FiniteGroup const& h,
                                         std::size_t bound) {
  if (g.order() > bound || h.order() > bound)
    raise(ErrorKind::BoundExceeded,
          "isomorphism test limited to order " + std::to_string(bound));
  if (g.order() != h.order()) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (order_profile(g) != order_profile(h)) return std::nullopt;
  std::optional<GroupHom> found;
  HomSearch search(g, h, true);
  search.run([&](std::vector<Elem> const& m) {
    found = GroupHom::unchecked(g, h, m);
    return false;
  });
  return found;
}

bool is_isomorphic(FiniteGroup const& g, FiniteGroup const& h,
                   std::size_t bound) {
  return find_isomorphism(g, h, bound).has_value();
}

std::vector<GroupHom> all_homomorphisms(FiniteGroup const& g,
                                        FiniteGroup const& h,
                                        std::size_t limit) {
  std::vector<GroupHom> out;
  HomSearch search(g, h, false);
  search.run([&](std::vector<Elem> const& m) {
    if (out.size() >= limit)
      raise(ErrorKind::BoundExceeded,
            "more than " + std::to_string(limit) + " homomorphisms");
    out.push_back(GroupHom::unchecked(g, h, m));
    return true;
  });
  std::sort(out.begin(), out.end(), [](GroupHom const& a, GroupHom const& b) {
    return a.map() < b.map();
  });
  return out;
}

std::vector<GroupHom> automorphisms(FiniteGroup const& a, std::size_t bound) {
  if (a.order() > bound)
    raise(ErrorKind::BoundExceeded,
          "automorphism search limited to order " + std::to_string(bound));
  std::vector<GroupHom> out;
  HomSearch search(a, a, true);
  search.run([&](std::vector<Elem> const& m) {
    out.push_back(GroupHom::unchecked(a, a, m));
    return true;
  });
  std::sort(out.begin(), out.end(), [](GroupHom const& x, GroupHom const& y) {
    return x.map() < y.map();
  });
  return out;
}

}  // namespace semiab
