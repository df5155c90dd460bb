#include "semiab/conj_normality.hpp"

#include <algorithm>

#include "semiab/commutators.hpp"
#include "semiab/families.hpp"
#include "semiab/parallel.hpp"

namespace semiab {

namespace {

// T as a subgroup of the group structure carried by S ⊇ T.
Subgroup relative(SubgroupAsGroup const& s, Subgroup const& t) {
  std::vector<Elem> m;
  m.reserve(t.size());
  for (Elem x : t.members()) m.push_back(s.index_of[x]);
  std::sort(m.begin(), m.end());
  return Subgroup::from_members(s.group, std::move(m));
}

ActionData conjugation_table(Subgroup const& acting, Subgroup const& acted) {
  auto const& e = acting.ambient();
  auto g = as_group(acting);
  auto n = as_group(acted);
  std::vector<Elem> t;
  t.reserve(acting.size() * acted.size());
  for (Elem y : acting.members())
    for (Elem x : acted.members()) t.push_back(n.index_of[e.conj(y, x)]);
  return ActionData(g.group, n.group, std::move(t));
}

}  // namespace

ActionData conjugation_on_normal(FiniteGroup const& e, Subgroup const& n) {
  if (!(n.ambient() == e)) raise(ErrorKind::AmbientMismatch, "N must be a subgroup of E");
  if (!is_normal(e, n)) raise(ErrorKind::NotNormal, "N is not normal in E");
  return conjugation_table(Subgroup::whole(e), n);
}

bool normalizes(Subgroup const& y, Subgroup const& x) {
  require_same_ambient(x, y);
  return binary_commutator(x, y).is_subset_of(x);
}

bool conjugation_stable(Subgroup const& y, Subgroup const& x) {
  require_same_ambient(x, y);
  auto const& g = x.ambient();
  for (Elem b : y.members())
    for (Elem a : x.members())
      if (!x.contains(g.conj(b, a))) return false;
  return true;
}

ProperCritReport propercrit(Subgroup const& x, Subgroup const& y, std::size_t bound) {
  require_same_ambient(x, y);
  auto const& g = x.ambient();
  ProperCritReport r;
  Subgroup const j = join(x, y);
  Subgroup const meet = intersection(x, y);
  auto num = [](Elem e) { return std::to_string(e); };

  r.cond1_normalizes = normalizes(y, x);
  if (!r.cond1_normalizes) {
    for (Elem a : x.members())
      for (Elem b : y.members())
        if (!x.contains(g.commutator(a, b)) && r.witnesses.empty())
          r.witnesses.push_back("[" + num(a) + "," + num(b) + "] = " +
                                num(g.commutator(a, b)) + " not in X");
  }

  r.cond2_proper_in_join = is_normal_in(j, x);
  r.intersection_normal = is_normal_in(y, meet);
  r.order_equation = j.size() * meet.size() == x.size() * y.size();

  auto jg = as_group(j);
  auto yg = as_group(y);
  std::optional<Quotient> yq;
  if (r.intersection_normal) yq = quotient(yg.group, relative(yg, meet));
  if (r.cond2_proper_in_join && yq) {
    auto jq = quotient(jg.group, relative(jg, x));
    r.quotient_iso = is_isomorphic(jq.group, yq->group, bound);
  }
  r.cond3_exact_sequence = r.intersection_normal && r.order_equation && r.quotient_iso;

  if (yq) {
    // xy ↦ y(X∩Y), checked for well-definedness, totality, hom and kernel.
    constexpr Elem unset = SubgroupAsGroup::npos;
    std::vector<Elem> f(j.size(), unset);
    bool ok = true;
    for (Elem a : x.members()) {
      for (Elem b : y.members()) {
        Elem z = jg.index_of[g.mul(a, b)];
        Elem v = yq->projection(yg.index_of[b]);
        if (f[z] == unset) f[z] = v;
        else if (f[z] != v) ok = false;
      }
    }
    ok = ok && std::find(f.begin(), f.end(), unset) == f.end();
    auto const& q = yq->group;
    for (Elem z1 = 0; ok && z1 < j.size(); ++z1)
      for (Elem z2 = 0; ok && z2 < j.size(); ++z2)
        if (f[jg.group.mul(z1, z2)] != q.mul(f[z1], f[z2])) ok = false;
    for (Elem z = 0; ok && z < j.size(); ++z)
      if ((f[z] == q.identity()) != x.contains(jg.embedding(z))) ok = false;
    r.sequence_map = ok;
  }

  if (!r.cond2_proper_in_join) {
    bool found = false;
    for (Elem b : j.members())
      for (Elem a : x.members())
        if (!found && !x.contains(g.conj(b, a))) {
          found = true;
          r.witnesses.push_back(num(b) + " conjugates " + num(a) + " to " +
                                num(g.conj(b, a)) + " outside X");
        }
  }
  return r;
}

std::optional<ActionData> stability_action(Subgroup const& x, Subgroup const& y) {
  if (!normalizes(y, x)) return std::nullopt;
  return conjugation_table(y, x);
}

PropertyPReport property_P_sweep(FiniteGroup const& g, std::size_t bound) {
  PropertyPReport r;
  r.group = g.name();
  r.order = g.order();
  Subgroup const whole = Subgroup::whole(g);
  for (auto const& x : all_subgroups(g, bound)) {
    ++r.subgroups;
    bool const normal = is_normal(g, x);
    bool const stable = normalizes(whole, x);
    r.normal += normal;
    if (normal == stable) {
      ++r.agreements;
    } else {
      std::string m;
      for (Elem e : x.members()) m += (m.empty() ? "" : ",") + std::to_string(e);
      r.violations.push_back("{" + m + "}");
    }
  }
  return r;
}

ProperCritSweep propercrit_sweep(std::size_t max_order, std::size_t jobs) {
  auto groups = family_list(max_order);
  ProperCritSweep out;
  out.max_order = max_order;
  out.rows.resize(groups.size());
  parallel_for(groups.size(), jobs, [&](std::size_t i) {
    auto const& g = groups[i];
    auto& row = out.rows[i];
    row.group = g.name();
    row.order = g.order();
    auto subs = all_subgroups(g);
    row.subgroups = subs.size();
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = 0; b < subs.size(); ++b) {
        auto rep = propercrit(subs[a], subs[b]);
        ++row.pairs;
        if (rep.sequence_map != rep.cond3_exact_sequence) ++row.sequence_map_mismatches;
        if (!rep.agree()) {
          row.violations.push_back("X#" + std::to_string(a) + " Y#" + std::to_string(b));
        } else if (rep.cond1_normalizes) {
          ++row.all_true;
        } else {
          ++row.all_false;
        }
      }
  });
  for (auto const& row : out.rows) {
    out.pairs += row.pairs;
    out.violations += row.violations.size() + row.sequence_map_mismatches;
  }
  return out;
}

PropertyPSweep property_P_family_sweep(std::size_t max_order, std::size_t jobs) {
  auto groups = family_list(max_order);
  PropertyPSweep out;
  out.max_order = max_order;
  out.rows.resize(groups.size());
  parallel_for(groups.size(), jobs,
               [&](std::size_t i) { out.rows[i] = property_P_sweep(groups[i]); });
  for (auto const& row : out.rows) {
    out.subgroups += row.subgroups;
    out.violations += row.violations.size();
  }
  return out;
}

}  // namespace semiab
