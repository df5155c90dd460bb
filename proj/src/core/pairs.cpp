#include "semiab/pairs.hpp"

#include <algorithm>

#include "semiab/conj_normality.hpp"
#include "semiab/families.hpp"
#include "semiab/parallel.hpp"

namespace semiab {

PairObject PairObject::make(FiniteGroup big, Subgroup small) {
  if (!(small.ambient() == big))
    raise(ErrorKind::AmbientMismatch, "B must be a subgroup of G");
  return PairObject{std::move(big), std::move(small)};
}

PairMorphism PairMorphism::make(PairObject source, PairObject target, GroupHom f) {
  if (!(f.domain() == source.big) || !(f.codomain() == target.big))
    raise(ErrorKind::SignatureMismatch, "f must map G to H");
  for (Elem b : source.small.members())
    if (!target.small.contains(f(b)))
      raise(ErrorKind::NotHomomorphism,
            "f(" + std::to_string(b) + ") = " + std::to_string(f(b)) + " is not in C");
  return PairMorphism{std::move(source), std::move(target), std::move(f)};
}

PairSubobject PairSubobject::make(PairObject ambient, Subgroup n, Subgroup c) {
  if (!(n.ambient() == ambient.big) || !(c.ambient() == ambient.big))
    raise(ErrorKind::AmbientMismatch, "N and C must be subgroups of G");
  if (!c.is_subset_of(n) || !c.is_subset_of(ambient.small))
    raise(ErrorKind::NotSubgroup, "C must lie in N and in B");
  return PairSubobject{std::move(ambient), std::move(n), std::move(c)};
}

PairSubobject pair_kernel(PairMorphism const& m) {
  Subgroup k = kernel(m.f);
  Subgroup kb = intersection(k, m.source.small);
  return PairSubobject{m.source, std::move(k), std::move(kb)};
}

PairCokernel pair_cokernel(PairSubobject const& s) {
  auto const& g = s.ambient.big;
  if (!is_normal(g, s.n)) raise(ErrorKind::NotNormal, "N is not normal in G");
  auto q = quotient(g, s.n);
  auto obj = PairObject{q.group, image_of(q.projection, s.ambient.small)};
  auto proj = PairMorphism{s.ambient, obj, q.projection};
  return PairCokernel{std::move(obj), std::move(proj)};
}

ProperReport properness(PairSubobject const& s) {
  auto ker = pair_kernel(pair_cokernel(s).projection);
  bool const proper = ker == s;
  Subgroup const meet = intersection(s.n, s.ambient.small);
  bool const inter = s.c == meet;
  // N ∪ B as a set; C ⊆ N ∩ B so equality needs N = B = C.
  bool const uni = s.c == s.n && s.c == s.ambient.small;
  std::string matched = inter == proper ? (uni == proper ? "both" : "intersection")
                                        : (uni == proper ? "union" : "neither");
  return ProperReport{proper, std::move(ker), inter, uni, std::move(matched)};
}

bool is_proper_pair_subobject(PairSubobject const& s) { return properness(s).proper; }

bool is_normal_pair_subobject(PairSubobject const& s) {
  return is_normal(s.ambient.big, s.n) && is_normal_in(s.ambient.small, s.c) &&
         s.c.is_subset_of(s.n);
}

PairActionReport pair_conjugation_action(PairSubobject const& s) {
  if (!is_normal_pair_subobject(s))
    raise(ErrorKind::NotNormalSubobject, "(N, C) is not a normal pair subobject");
  auto const& g = s.ambient.big;
  PairActionReport r{conjugation_on_normal(g, s.n), true, true};
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : s.n.members())
      if (!s.n.contains(g.conj(x, y))) r.big_stable = false;
  for (Elem x : s.ambient.small.members())
    for (Elem y : s.c.members())
      if (!s.c.contains(g.conj(x, y))) r.small_stable = false;
  return r;
}

std::optional<NonexactnessWitness> find_nonexactness_witness(PairObject const& ambient) {
  auto subs = all_subgroups(ambient.big);
  for (auto const& n : subs) {
    if (!is_normal(ambient.big, n)) continue;
    Subgroup const meet = intersection(n, ambient.small);
    for (auto const& c : subs) {
      if (!c.is_subset_of(meet)) continue;
      auto s = PairSubobject::make(ambient, n, c);
      if (!is_normal_pair_subobject(s)) continue;
      auto p = properness(s);
      if (p.proper) continue;
      auto act = pair_conjugation_action(s);
      return NonexactnessWitness{std::move(s), std::move(p), std::move(act)};
    }
  }
  return std::nullopt;
}

NonexactnessWitness pairs_nonexactness_demo() {
  auto s3 = symmetric(3);
  auto amb = PairObject::make(s3, Subgroup::whole(s3));
  Subgroup a3 = Subgroup::trivial(s3);
  for (Elem x = 0; x < s3.order(); ++x)
    if (s3.element_order(x) == 3) a3 = join(a3, subgroup_generated(s3, {x}));
  auto s = PairSubobject::make(amb, a3, Subgroup::trivial(s3));
  auto p = properness(s);
  auto act = pair_conjugation_action(s);
  return NonexactnessWitness{std::move(s), std::move(p), std::move(act)};
}

namespace {

void sweep_group(FiniteGroup const& g, PairsSweep& out) {
  auto subs = all_subgroups(g);
  std::vector<char> normal(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) normal[i] = is_normal(g, subs[i]);
  for (auto const& b : subs) {
    ++out.ambients;
    auto amb = PairObject::make(g, b);
    for (std::size_t ni = 0; ni < subs.size(); ++ni) {
      auto const& n = subs[ni];
      Subgroup const meet = intersection(n, b);
      std::optional<PairCokernel> reference;
      if (normal[ni]) {
        reference = pair_cokernel(PairSubobject::make(amb, n, meet));
        // The image of B in G/N against B/(N∩B).
        auto bg = as_group(b);
        std::vector<Elem> rel;
        for (Elem x : meet.members()) rel.push_back(bg.index_of[x]);
        std::sort(rel.begin(), rel.end());
        auto bq = quotient(bg.group, Subgroup::from_members(bg.group, rel));
        auto const& img = reference->object.small;
        if (img.size() != bq.group.order() ||
            !is_isomorphic(as_group(img).group, bq.group))
          ++out.cokernel_formula_mismatches;
      }
      for (auto const& c : subs) {
        if (!c.is_subset_of(meet)) continue;
        auto s = PairSubobject::make(amb, n, c);
        ++out.subobjects;
        bool const is_norm = is_normal_pair_subobject(s);
        out.normal += is_norm;
        if (!normal[ni]) continue;  // kernels always have normal big part
        auto cok = pair_cokernel(s);
        if (!(cok.object.big == reference->object.big) ||
            !(cok.object.small == reference->object.small))
          ++out.cokernel_depends_on_c;
        auto p = properness(s);
        out.proper += p.proper;
        if (p.proper && !is_norm) ++out.proper_not_normal;
        if (p.intersection_form != p.proper) ++out.intersection_form_disagreements;
        if (p.union_form != p.proper) ++out.union_form_disagreements;
        if (is_norm) {
          auto act = pair_conjugation_action(s);
          if (!act.big_stable || !act.small_stable || !validate_action(act.action).all())
            ++out.conjugation_failures;
          if (!p.proper) {
            ++out.normal_not_proper;
            if (!out.first_witness)
              out.first_witness = g.name() + ": |B|=" + std::to_string(b.size()) +
                                  " |N|=" + std::to_string(n.size()) +
                                  " |C|=" + std::to_string(c.size());
          }
        }
      }
    }
  }
}

}  // namespace

PairsSweep pairs_sweep(std::size_t max_order, std::size_t jobs) {
  auto groups = family_list(max_order);
  std::vector<PairsSweep> parts(groups.size());
  parallel_for(groups.size(), jobs, [&](std::size_t i) { sweep_group(groups[i], parts[i]); });
  PairsSweep out;
  out.max_order = max_order;
  for (auto const& p : parts) {
    out.ambients += p.ambients;
    out.subobjects += p.subobjects;
    out.normal += p.normal;
    out.proper += p.proper;
    out.normal_not_proper += p.normal_not_proper;
    out.proper_not_normal += p.proper_not_normal;
    out.cokernel_formula_mismatches += p.cokernel_formula_mismatches;
    out.cokernel_depends_on_c += p.cokernel_depends_on_c;
    out.conjugation_failures += p.conjugation_failures;
    out.intersection_form_disagreements += p.intersection_form_disagreements;
    out.union_form_disagreements += p.union_form_disagreements;
    if (!out.first_witness) out.first_witness = p.first_witness;
  }
  return out;
}

}  // namespace semiab
