#include "semiab/actions.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "semiab/families.hpp"

namespace semiab {

ActionData::ActionData(FiniteGroup acting, FiniteGroup acted, std::vector<Elem> phi)
    : g_(std::move(acting)), a_(std::move(acted)), phi_(std::move(phi)) {
  if (phi_.size() != g_.order() * a_.order())
    raise(ErrorKind::MalformedTable,
          "action table has " + std::to_string(phi_.size()) + " entries, expected " +
              std::to_string(g_.order() * a_.order()));
  for (Elem v : phi_)
    if (v >= a_.order())
      raise(ErrorKind::MalformedTable,
            "action table entry " + std::to_string(v) + " out of range");
}

ActionData ActionData::trivial(FiniteGroup const& acting, FiniteGroup const& acted) {
  std::vector<Elem> t;
  t.reserve(acting.order() * acted.order());
  for (std::size_t g = 0; g < acting.order(); ++g)
    for (Elem a = 0; a < acted.order(); ++a) t.push_back(a);
  return ActionData(acting, acted, std::move(t));
}

std::vector<std::vector<Elem>> ActionData::rows() const {
  std::vector<std::vector<Elem>> out(g_.order());
  for (std::size_t g = 0; g < g_.order(); ++g)
    out[g].assign(phi_.begin() + static_cast<std::ptrdiff_t>(g * a_.order()),
                  phi_.begin() + static_cast<std::ptrdiff_t>((g + 1) * a_.order()));
  return out;
}

ValidationReport validate_action(ActionData const& phi) {
  auto const& g = phi.acting();
  auto const& a = phi.acted();
  auto const ng = static_cast<Elem>(g.order());
  auto const na = static_cast<Elem>(a.order());
  ValidationReport r;
  auto note = [&](std::string s) {
    if (r.witnesses.size() < 8) r.witnesses.push_back(std::move(s));
  };
  auto num = [](Elem x) { return std::to_string(x); };

  for (Elem x = 0; x < na; ++x)
    if (phi(g.identity(), x) != x) {
      r.unit_ok = false;
      note("unit: phi(e," + num(x) + ") = " + num(phi(g.identity(), x)));
      break;
    }
  for (Elem h = 0; h < ng; ++h)
    if (phi(h, a.identity()) != a.identity()) {
      r.unit_ok = false;
      note("unit: phi(" + num(h) + ",e) = " + num(phi(h, a.identity())));
      break;
    }

  for (Elem h = 0; h < ng && r.endomorphism_ok; ++h)
    for (Elem x = 0; x < na && r.endomorphism_ok; ++x)
      for (Elem y = 0; y < na; ++y)
        if (phi(h, a.mul(x, y)) != a.mul(phi(h, x), phi(h, y))) {
          r.endomorphism_ok = false;
          note("endomorphism: phi(" + num(h) + "," + num(x) + "*" + num(y) +
               ") != phi(" + num(h) + "," + num(x) + ")*phi(" + num(h) + "," +
               num(y) + ")");
          break;
        }

  for (Elem h = 0; h < ng && r.associativity_ok; ++h)
    for (Elem k = 0; k < ng && r.associativity_ok; ++k)
      for (Elem x = 0; x < na; ++x)
        if (phi(g.mul(h, k), x) != phi(h, phi(k, x))) {
          r.associativity_ok = false;
          note("associativity: phi(" + num(h) + "*" + num(k) + "," + num(x) +
               ") = " + num(phi(g.mul(h, k), x)) + " but phi(" + num(h) +
               ",phi(" + num(k) + "," + num(x) + ")) = " + num(phi(h, phi(k, x))));
          break;
        }

  for (Elem h = 0; h < ng; ++h) {
    std::vector<char> hit(na, 0);
    for (Elem x = 0; x < na; ++x) hit[phi(h, x)] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      r.automorphism_ok = false;
      note("automorphism: phi(" + num(h) + ",-) is not a bijection");
      break;
    }
  }
  return r;
}

namespace {

void require_action_signature(ActionData const& phi, FreeProduct const& fp) {
  if (fp.size() != 2 || fp.factor(0).is_free() || fp.factor(1).is_free() ||
      !(fp.factor(0).group() == phi.acted()) ||
      !(fp.factor(1).group() == phi.acting()))
    raise(ErrorKind::SignatureMismatch,
          "word does not live in A+G for this action");
}

}  // namespace

Elem psi_eval_terms(ActionData const& phi,
                    std::vector<CommutatorTerm> const& terms) {
  auto const& a = phi.acted();
  Elem acc = a.identity();
  for (auto const& t : terms) {
    Elem v = phi.psi_generator(t.g, t.a);
    acc = a.mul(acc, t.z > 0 ? v : a.inv(v));
  }
  return acc;
}

Elem psi_eval(ActionData const& phi, FreeWord const& w) {
  require_action_signature(phi, w.product());
  if (!in_cross_effect(w))
    raise(ErrorKind::NotInCrossEffect, to_string(w) + " is not in (A|G)");
  return psi_eval_terms(phi, commutator_decomposition(w).terms);
}

std::vector<Elem> pair_table(ActionData const& phi) {
  auto const& g = phi.acting();
  auto const& a = phi.acted();
  std::size_t const ng = g.order(), n = a.order() * ng;
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto const ai = static_cast<Elem>(i / ng), gi = static_cast<Elem>(i % ng);
    for (std::size_t j = 0; j < n; ++j) {
      auto const aj = static_cast<Elem>(j / ng), gj = static_cast<Elem>(j % ng);
      t[i * n + j] = static_cast<Elem>(a.mul(ai, phi(gi, aj)) * ng + g.mul(gi, gj));
    }
  }
  return t;
}

SemidirectResult semidirect(ActionData const& phi) {
  auto rep = validate_action(phi);
  if (!rep.all()) {
    std::string failed;
    if (!rep.unit_ok) failed += " unit";
    if (!rep.endomorphism_ok) failed += " endomorphism";
    if (!rep.associativity_ok) failed += " associativity";
    raise(ErrorKind::InvalidAction, "failed condition(s):" + failed);
  }
  auto const& g = phi.acting();
  auto const& a = phi.acted();
  std::size_t const ng = g.order(), n = a.order() * ng;
  std::string name;
  if (!a.name().empty() && !g.name().empty()) name = a.name() + ":" + g.name();
  auto prod = FiniteGroup::from_flat_unchecked(n, pair_table(phi), std::move(name));

  std::vector<Elem> l(a.order()), s(ng), p(n);
  for (Elem x = 0; x < a.order(); ++x) l[x] = static_cast<Elem>(x * ng + g.identity());
  for (Elem h = 0; h < ng; ++h) s[h] = static_cast<Elem>(a.identity() * ng + h);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Elem>(i % ng);
  return SemidirectResult{prod, GroupHom::unchecked(a, prod, std::move(l)),
                          GroupHom::unchecked(g, prod, std::move(s)),
                          GroupHom::unchecked(prod, g, std::move(p))};
}

CoequalizerReport coequalizer_check(ActionData const& phi, std::size_t max_syllables) {
  auto const& g = phi.acting();
  auto const& a = phi.acted();
  std::size_t const ng = g.order(), n = a.order() * ng;
  auto const table = pair_table(phi);
  auto fp = FreeProduct::of({a, g});
  auto pair_of = [&](Syllable s) -> Elem {
    return s.factor == 0 ? static_cast<Elem>(s.elem * ng + g.identity())
                         : static_cast<Elem>(a.identity() * ng + s.elem);
  };
  Elem const unit = static_cast<Elem>(a.identity() * ng + g.identity());

  CoequalizerReport r;
  std::vector<char> reached(n, 0);
  reached[unit] = 1;
  WordEnumerator en(fp, max_syllables, EnumerationBounds{max_syllables, 1'000'000});
  while (auto w = en.next()) {
    Elem q = unit;
    for (auto const& s : w->syllables()) q = table[q * n + pair_of(s)];
    reached[q] = 1;
    if (!in_cross_effect(*w)) continue;
    ++r.words_checked;
    Elem expect = static_cast<Elem>(psi_eval(phi, *w) * ng + g.identity());
    if (q != expect && r.ok) {
      r.ok = false;
      r.counterexample = *w;
    }
  }
  r.surjective = std::find(reached.begin(), reached.end(), 0) == reached.end();
  r.ok = r.ok && r.surjective;
  return r;
}

void require_splitting(Point const& pt) {
  auto const& gq = pt.q.codomain();
  if (!(pt.q.domain() == pt.total) || !(pt.s.codomain() == pt.total) ||
      !(pt.s.domain() == gq))
    raise(ErrorKind::SectionNotSplitting, "q and s do not form a point over G");
  for (Elem h = 0; h < gq.order(); ++h)
    if (pt.q(pt.s(h)) != h)
      raise(ErrorKind::SectionNotSplitting,
            "q(s(" + std::to_string(h) + ")) = " + std::to_string(pt.q(pt.s(h))));
}

PointAction point_to_action(Point const& pt) {
  require_splitting(pt);
  auto const& e = pt.total;
  auto const& g = pt.q.codomain();
  Subgroup k = kernel(pt.q);
  auto kg = as_group(k);
  std::vector<Elem> table;
  table.reserve(g.order() * k.size());
  for (Elem h = 0; h < g.order(); ++h)
    for (Elem i = 0; i < k.size(); ++i)
      table.push_back(kg.index_of[e.conj(pt.s(h), kg.embedding(i))]);
  ActionData act(g, kg.group, std::move(table));
  return PointAction{std::move(k), std::move(kg), std::move(act)};
}

IsoReport action_point_roundtrip(ActionData const& phi) {
  IsoReport r;
  auto sd = semidirect(phi);
  auto back = point_to_action(Point{sd.product, sd.p, sd.s});
  if (!(back.action.acted() == phi.acted())) {
    r.detail = "kernel of p does not reproduce the table of A";
    return r;
  }
  if (back.action.table() != phi.table()) {
    r.detail = "conjugation table differs from phi";
    return r;
  }
  r.ok = true;
  r.iso = GroupHom::identity(phi.acted());
  r.detail = "table identical under a -> (a,e)";
  return r;
}

IsoReport point_action_roundtrip(Point const& pt) {
  IsoReport r;
  auto pa = point_to_action(pt);
  auto sd = semidirect(pa.action);
  std::size_t const ng = pt.q.codomain().order();
  std::vector<Elem> theta(sd.product.order());
  for (std::size_t i = 0; i < theta.size(); ++i)
    theta[i] = pt.total.mul(pa.kernel_group.embedding(static_cast<Elem>(i / ng)),
                            pt.s(static_cast<Elem>(i % ng)));
  std::optional<GroupHom> h;
  try {
    h = GroupHom::make(sd.product, pt.total, std::move(theta));
  } catch (Error const& err) {
    r.detail = std::string("theta is not a homomorphism: ") + err.what();
    return r;
  }
  if (!h->is_injective() || !h->is_surjective()) {
    r.detail = "theta is not bijective";
    return r;
  }
  if (!(compose(pt.q, *h) == sd.p)) {
    r.detail = "q . theta != p";
    return r;
  }
  if (!(compose(*h, sd.s) == pt.s)) {
    r.detail = "theta . s' != s";
    return r;
  }
  r.ok = true;
  r.iso = std::move(h);
  r.detail = "theta(k,g) = k*s(g) is an isomorphism of points over G";
  return r;
}

std::optional<GroupHom> universal_property(ActionData const& phi,
                                           GroupHom const& f_a,
                                           GroupHom const& f_g) {
  if (!(f_a.domain() == phi.acted()) || !(f_g.domain() == phi.acting()) ||
      !(f_a.codomain() == f_g.codomain()))
    raise(ErrorKind::SignatureMismatch, "f_A and f_G need domains A, G and a common codomain");
  auto const& x = f_a.codomain();
  auto const& g = phi.acting();
  auto const& a = phi.acted();
  for (Elem h = 0; h < g.order(); ++h)
    for (Elem y = 0; y < a.order(); ++y)
      if (f_a(phi(h, y)) != x.conj(f_g(h), f_a(y))) return std::nullopt;
  auto sd = semidirect(phi);
  std::size_t const ng = g.order();
  std::vector<Elem> m(sd.product.order());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = x.mul(f_a(static_cast<Elem>(i / ng)), f_g(static_cast<Elem>(i % ng)));
  return GroupHom::make(sd.product, x, std::move(m));
}

std::optional<ActionData> restrict_action(ActionData const& phi, Subgroup const& b,
                                          Subgroup const& h) {
  if (!(b.ambient() == phi.acted()) || !(h.ambient() == phi.acting()))
    raise(ErrorKind::AmbientMismatch, "B must lie in A and H in G");
  auto bg = as_group(b);
  auto hg = as_group(h);
  std::vector<Elem> t;
  t.reserve(h.size() * b.size());
  for (Elem hx : h.members())
    for (Elem bx : b.members()) {
      Elem v = phi(hx, bx);
      if (!b.contains(v)) return std::nullopt;
      t.push_back(bg.index_of[v]);
    }
  return ActionData(hg.group, bg.group, std::move(t));
}

std::optional<SemidirectMap> semidirect_map(ActionData const& phi,
                                            ActionData const& phi2,
                                            GroupHom const& f, GroupHom const& g) {
  if (!(f.domain() == phi.acted()) || !(f.codomain() == phi2.acted()) ||
      !(g.domain() == phi.acting()) || !(g.codomain() == phi2.acting()))
    raise(ErrorKind::SignatureMismatch, "f: A -> A' and g: G -> G' expected");
  auto const& gs = phi.acting();
  auto const& as = phi.acted();
  for (Elem x = 0; x < gs.order(); ++x)
    for (Elem y = 0; y < as.order(); ++y)
      if (f(phi(x, y)) != phi2(g(x), f(y))) return std::nullopt;

  auto src = semidirect(phi);
  auto dst = semidirect(phi2);
  std::size_t const ng = gs.order(), ng2 = phi2.acting().order();
  std::vector<Elem> m(src.product.order());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = static_cast<Elem>(f(static_cast<Elem>(i / ng)) * ng2 +
                             g(static_cast<Elem>(i % ng)));
  auto hom = GroupHom::make(src.product, dst.product, std::move(m));

  auto pairs = [](Subgroup const& left, Subgroup const& right, std::size_t width) {
    std::vector<Elem> out;
    for (Elem x : left.members())
      for (Elem y : right.members()) out.push_back(static_cast<Elem>(x * width + y));
    std::sort(out.begin(), out.end());
    return out;
  };
  Subgroup k = kernel(hom);
  Subgroup im = image(hom);
  bool const km = k.members() == pairs(kernel(f), kernel(g), ng);
  bool const imm = im.members() == pairs(image(f), image(g), ng2);
  return SemidirectMap{std::move(src), std::move(dst), std::move(hom),
                       KernelImageReport{std::move(k), std::move(im), km, imm}};
}

std::vector<ActionData> enumerate_actions(FiniteGroup const& g, FiniteGroup const& a,
                                          std::size_t bound) {
  if (g.order() > bound || a.order() > bound)
    raise(ErrorKind::BoundExceeded, "action enumeration limited to order " +
                                        std::to_string(bound));
  auto auts = automorphisms(a, bound);
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < auts.size(); ++i)
    index.emplace(auts[i].map(), static_cast<Elem>(i));
  std::size_t const n = auts.size();
  std::vector<Elem> table(n * n);
  std::vector<Elem> tmp(a.order());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (Elem x = 0; x < a.order(); ++x) tmp[x] = auts[i](auts[j](x));
      table[i * n + j] = index.at(tmp);
    }
  auto aut = FiniteGroup::from_flat_unchecked(n, std::move(table), "Aut(" + a.name() + ")");

  std::vector<ActionData> out;
  for (auto const& rho : all_homomorphisms(g, aut)) {
    std::vector<Elem> t;
    t.reserve(g.order() * a.order());
    for (Elem h = 0; h < g.order(); ++h)
      for (Elem x = 0; x < a.order(); ++x) t.push_back(auts[rho(h)](x));
    out.emplace_back(g, a, std::move(t));
  }
  return out;
}

SemidirectMapSample sample_semidirect_maps(std::size_t count, std::uint64_t seed,
                                           std::size_t max_order) {
  auto groups = family_list(max_order);
  std::size_t const n = groups.size();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ActionData>> actions;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<GroupHom>> homs;
  auto acts = [&](std::size_t g, std::size_t a) -> std::vector<ActionData> const& {
    auto it = actions.find({g, a});
    if (it == actions.end())
      it = actions.emplace(std::pair{g, a}, enumerate_actions(groups[g], groups[a])).first;
    return it->second;
  };
  auto hom_list = [&](std::size_t x, std::size_t y) -> std::vector<GroupHom> const& {
    auto it = homs.find({x, y});
    if (it == homs.end())
      it = homs.emplace(std::pair{x, y}, all_homomorphisms(groups[x], groups[y])).first;
    return it->second;
  };

  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  SemidirectMapSample out;
  std::size_t const max_attempts = 1000 * count + 1000;
  while (out.samples < count && out.attempts < max_attempts) {
    ++out.attempts;
    std::size_t const g = pick(n), a = pick(n), g2 = pick(n), a2 = pick(n);
    auto const& phis = acts(g, a);
    auto const& phis2 = acts(g2, a2);
    auto const& fs = hom_list(a, a2);
    auto const& gs = hom_list(g, g2);
    auto const& phi = phis[pick(phis.size())];
    auto const& phi2 = phis2[pick(phis2.size())];
    auto const& f = fs[pick(fs.size())];
    auto const& gh = gs[pick(gs.size())];
    auto m = semidirect_map(phi, phi2, f, gh);
    if (!m) continue;
    ++out.samples;
    out.kernel_matches += m->report.kernel_matches;
    out.image_matches += m->report.image_matches;
    out.nontrivial_f += !kernel(f).is_whole();
    if (!m->report.kernel_matches || !m->report.image_matches)
      out.mismatches.push_back(groups[a].name() + ":" + groups[g].name() + " -> " +
                               groups[a2].name() + ":" + groups[g2].name());
  }
  return out;
}

}  // namespace semiab
