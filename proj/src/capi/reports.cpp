#include <algorithm>

#include "internal.hpp"
#include "semiab/actions.hpp"
#include "semiab/commutators.hpp"
#include "semiab/conj_normality.hpp"
#include "semiab/families.hpp"
#include "semiab/free_product.hpp"
#include "semiab/io.hpp"
#include "semiab/pairs.hpp"
#include "semiab/semiab.h"
#include "semiab/talgebra.hpp"

namespace semiab::capi {

namespace {

constexpr std::size_t kCoequalizerLength = 6;
constexpr std::size_t kOracleLength = 16;
constexpr std::size_t kMaxTables = 20'000;
constexpr std::size_t kMaxListedTables = 100;
constexpr std::size_t kSampleOrder = 6;

json header(std::string const& command, json parameters) {
  return json{{"tool", "semiab"},
              {"version", semiab_version()},
              {"command", command},
              {"parameters", std::move(parameters)}};
}

json name_or_null(std::optional<std::string> const& s) {
  return s ? json(*s) : json(nullptr);
}

json subgroup_json(Subgroup const& h) {
  return json{{"size", h.size()}, {"members", h.members()}};
}

json group_summary(FiniteGroup const& g) {
  return json{{"name", g.name()}, {"order", g.order()}, {"abelian", g.is_abelian()}};
}

json validation_json(ValidationReport const& v) {
  return json{{"unit", v.unit_ok},
              {"endomorphism", v.endomorphism_ok},
              {"associativity", v.associativity_ok},
              {"automorphism", v.automorphism_ok},
              {"witnesses", v.witnesses}};
}

std::vector<ActionData> actions_for(FiniteGroup const& g, FiniteGroup const& a,
                                    std::optional<std::string> const& phi) {
  if (phi) return {action_from_json(*phi, g, a)};
  return enumerate_actions(g, a);
}

std::size_t fixer_size(ActionData const& phi) {
  std::size_t n = 0;
  for (Elem h = 0; h < phi.acting().order(); ++h) {
    bool fixes = true;
    for (Elem x = 0; x < phi.acted().order(); ++x) fixes = fixes && phi(h, x) == x;
    n += fixes;
  }
  return n;
}

}  // namespace

json report_group(FiniteGroup const& g) {
  json r = header("groups ingest", json::object());
  auto subs = all_subgroups(g);
  std::size_t normal = 0;
  for (auto const& s : subs) normal += is_normal(g, s);
  Subgroup const whole = Subgroup::whole(g);
  std::vector<std::size_t> orders;
  for (Elem x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
  r["group"] = group_summary(g);
  r["identity"] = g.identity();
  r["element_orders"] = orders;
  r["subgroups"] = subs.size();
  r["normal_subgroups"] = normal;
  r["derived_subgroup"] = subgroup_json(binary_commutator(whole, whole));
  r["isomorphic_to"] = name_or_null(identify(g));
  r["canonical"] = json::parse(group_to_json(g));
  r["violations"] = 0;
  return r;
}

json report_actions_enumerate(FiniteGroup const& g, FiniteGroup const& a, Options const&) {
  json r = header("actions enumerate", json{{"G", g.name()}, {"A", a.name()}});
  auto acts = enumerate_actions(g, a);
  json list = json::array();
  std::size_t bad = 0;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    auto v = validate_action(acts[i]);
    bad += !v.all();
    auto sd = semidirect(acts[i]);
    list.push_back(json{{"index", i},
                        {"phi", acts[i].rows()},
                        {"trivial", fixer_size(acts[i]) == g.order()},
                        {"acting_kernel_size", fixer_size(acts[i])},
                        {"semidirect_order", sd.product.order()},
                        {"semidirect_isomorphic_to", name_or_null(identify(sd.product))}});
  }
  r["G"] = group_summary(g);
  r["A"] = group_summary(a);
  r["count"] = acts.size();
  r["actions"] = std::move(list);
  r["violations"] = bad;
  return r;
}

json report_actions_roundtrip(FiniteGroup const& g, FiniteGroup const& a, Options const& o) {
  std::size_t const len = o.syllables_or(kCoequalizerLength);
  json r = header("actions roundtrip",
                  json{{"G", g.name()}, {"A", a.name()}, {"max_syllables", len}});
  auto acts = enumerate_actions(g, a);
  json list = json::array();
  std::size_t bad = 0;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    auto there = action_point_roundtrip(acts[i]);
    auto sd = semidirect(acts[i]);
    auto back = point_action_roundtrip(Point{sd.product, sd.p, sd.s});
    auto coeq = coequalizer_check(acts[i], len);
    bool const ok = there.ok && back.ok && coeq.ok;
    bad += !ok;
    list.push_back(json{{"index", i},
                        {"action_to_point_to_action", there.ok},
                        {"point_to_action_to_point", back.ok},
                        {"detail", json::array({there.detail, back.detail})},
                        {"coequalizer", coeq.ok},
                        {"coequalizer_words", coeq.words_checked}});
  }
  r["count"] = acts.size();
  r["actions"] = std::move(list);
  r["violations"] = bad;
  return r;
}

json report_semidirect(FiniteGroup const& g, FiniteGroup const& a,
                       std::optional<std::string> const& phi, Options const& o) {
  std::size_t const len = o.syllables_or(kCoequalizerLength);
  json r = header("semidirect build", json{{"G", g.name()},
                                           {"A", a.name()},
                                           {"phi", phi ? json::parse(*phi) : json(nullptr)},
                                           {"max_syllables", len}});
  auto acts = actions_for(g, a, phi);
  json list = json::array();
  std::size_t bad = 0;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    auto const& act = acts[i];
    auto v = validate_action(act);
    auto coeq = coequalizer_check(act, len);
    json item{{"index", i},
              {"phi", act.rows()},
              {"validation", validation_json(v)},
              {"coequalizer",
               json{{"ok", coeq.ok},
                    {"surjective", coeq.surjective},
                    {"words_checked", coeq.words_checked},
                    {"counterexample", coeq.counterexample
                                           ? json(to_string(*coeq.counterexample))
                                           : json(nullptr)}}}};
    if (!v.all()) {
      item["product"] = nullptr;
      item["error"] = "InvalidAction: phi is not an action";
      ++bad;
      list.push_back(std::move(item));
      continue;
    }
    auto sd = semidirect(act);
    bool const ps = compose(sd.p, sd.s) == GroupHom::identity(g);
    bool const pl = compose(sd.p, sd.l) == GroupHom::zero(a, g);
    bool const exact = kernel(sd.p) == image(sd.l);
    bool const mono = sd.l.is_injective();
    bad += !(ps && pl && exact && mono && coeq.ok);
    item["product"] = json{{"name", sd.product.name()},
                           {"order", sd.product.order()},
                           {"isomorphic_to", name_or_null(identify(sd.product))}};
    item["invariants"] = json{{"p_s_identity", ps},
                              {"p_l_zero", pl},
                              {"kernel_p_equals_image_l", exact},
                              {"l_injective", mono}};
    if (phi) {
      item["product"]["cayley"] = sd.product.cayley_rows();
      item["maps"] = json{{"l", sd.l.map()}, {"s", sd.s.map()}, {"p", sd.p.map()}};
    }
    list.push_back(std::move(item));
  }
  r["count"] = acts.size();
  r["actions"] = std::move(list);
  r["violations"] = bad;
  return r;
}

json report_semidirect_maps(Options const& o) {
  std::size_t const order = std::min(o.max_order, kSampleOrder);
  json r = header("semidirect maps",
                  json{{"samples", o.samples}, {"seed", o.seed}, {"max_order", order}});
  auto s = sample_semidirect_maps(o.samples, o.seed, order);
  r["samples"] = s.samples;
  r["attempts"] = s.attempts;
  r["kernel_matches"] = s.kernel_matches;
  r["image_matches"] = s.image_matches;
  r["nontrivial_f"] = s.nontrivial_f;
  r["mismatches"] = s.mismatches;
  r["violations"] = s.mismatches.size() + (s.samples < o.samples ? 1 : 0);
  return r;
}

json report_commutator(FiniteGroup const& ambient, std::string const& parts_text,
                       Options const& o) {
  json const parts_doc = json::parse(parts_text);
  if (!parts_doc.is_array()) raise(ErrorKind::ParseError, "parts must be a JSON array");
  std::vector<Subgroup> parts;
  for (auto const& p : parts_doc) {
    if (p.is_string() && p.get<std::string>() == "all") {
      parts.push_back(Subgroup::whole(ambient));
      continue;
    }
    if (!p.is_array()) raise(ErrorKind::ParseError, "each part is \"all\" or an index array");
    std::vector<Elem> gens;
    for (auto const& x : p) {
      auto v = x.get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= ambient.order())
        raise(ErrorKind::ParseError, "generator index " + std::to_string(v) + " out of range");
      gens.push_back(static_cast<Elem>(v));
    }
    parts.push_back(subgroup_generated(ambient, gens));
  }
  std::size_t const len = o.syllables_or(kOracleLength);
  json r = header("commutator", json{{"group", ambient.name()},
                                     {"parts", parts_doc},
                                     {"max_syllables", len}});
  CommutatorRequest req{ambient, parts};
  req.max_word_syllables = len;
  auto res = higher_commutator_oracle(req);
  std::size_t bad = 0;
  r["n"] = parts.size();
  json parts_out = json::array();
  for (auto const& p : parts) parts_out.push_back(subgroup_json(p));
  r["part_subgroups"] = std::move(parts_out);
  r["result"] = subgroup_json(res.result);
  r["flag"] = std::string(to_string(res.flag));
  r["rounds"] = res.rounds;
  r["covered_length"] = res.covered_length;
  r["words_examined"] = res.words_examined;
  r["upper_bound"] = res.upper_bound ? subgroup_json(*res.upper_bound) : json(nullptr);
  if (parts.size() == 2) {
    auto bin = binary_commutator(parts[0], parts[1]);
    r["binary_commutator"] = subgroup_json(bin);
    r["huq_commutator"] = subgroup_json(huq_commutator(parts[0], parts[1]));
    if (res.flag != OracleFlag::BoundHit && !(res.result == bin)) ++bad;
  }
  if (parts.size() == 3) {
    auto t = ternary_recipe(parts[0], parts[1], parts[2]);
    r["ternary_recipe"] = json{{"result", subgroup_json(t.result)},
                               {"agreement", std::string(to_string(t.agreement))}};
    if (t.agreement == Agreement::Disagree) ++bad;
  }
  if (ambient.is_abelian() && !res.result.is_trivial()) ++bad;
  r["violations"] = bad;
  return r;
}

namespace {

json talgebra_item(ActionData const& phi, std::size_t len, std::size_t third_len,
                   std::size_t& bad) {
  auto v = validate_action(phi);
  auto unit = check_unit_diagram(phi, len);
  auto assoc = check_assoc_diagram(phi, len);
  json item{{"phi", phi.rows()},
            {"validation", validation_json(v)},
            {"unit_diagram", json{{"ok", unit.ok},
                                  {"matches_endomorphism", unit.matches_table_condition},
                                  {"words_checked", unit.words_checked},
                                  {"witnesses", unit.witnesses}}},
            {"assoc_diagram", json{{"ok", assoc.ok},
                                   {"matches_associativity", assoc.matches_table_condition},
                                   {"words_checked", assoc.words_checked},
                                   {"witnesses", assoc.witnesses}}}};
  bad += !unit.matches_table_condition + !assoc.matches_table_condition;
  if (v.all()) {
    auto rep = talgebra_check(phi, len, third_len);
    auto kx = kerxi_consistency(phi, len);
    item["report"] = json{{"unit_ok", rep.unit_ok},
                          {"endo_diagram_ok", rep.endo_diagram_ok},
                          {"assoc_diagram_ok", rep.assoc_diagram_ok},
                          {"third_diagram_ok", rep.third_diagram_ok
                                                   ? json(*rep.third_diagram_ok)
                                                   : json(nullptr)},
                          {"third_words_tested", rep.third_words_tested},
                          {"witnesses", rep.witnesses}};
    item["kerxi_consistency"] = json{{"ok", kx.ok}, {"words_checked", kx.words_checked}};
    bool const all = rep.unit_ok && rep.endo_diagram_ok && rep.assoc_diagram_ok &&
                     rep.third_diagram_ok.value_or(false) && kx.ok;
    bad += !all;
  }
  return item;
}

// Every table with φ(e,a) = a and φ(g,e) = e.
std::vector<ActionData> unit_tables(FiniteGroup const& g, FiniteGroup const& a) {
  std::vector<std::pair<Elem, Elem>> free_cells;
  for (Elem h = 0; h < g.order(); ++h)
    for (Elem x = 0; x < a.order(); ++x)
      if (h != g.identity() && x != a.identity()) free_cells.emplace_back(h, x);
  double total = 1;
  for (std::size_t i = 0; i < free_cells.size(); ++i) total *= static_cast<double>(a.order());
  if (total > static_cast<double>(kMaxTables))
    raise(ErrorKind::BoundExceeded, "more than " + std::to_string(kMaxTables) + " tables");
  std::vector<Elem> base(g.order() * a.order());
  for (Elem h = 0; h < g.order(); ++h)
    for (Elem x = 0; x < a.order(); ++x) base[h * a.order() + x] = x;
  std::vector<ActionData> out;
  std::vector<Elem> digits(free_cells.size(), 0);
  while (true) {
    auto t = base;
    for (std::size_t i = 0; i < free_cells.size(); ++i)
      t[free_cells[i].first * a.order() + free_cells[i].second] = digits[i];
    out.emplace_back(g, a, std::move(t));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == a.order()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

}  // namespace

json report_talgebra(FiniteGroup const& g, FiniteGroup const& a,
                     std::optional<std::string> const& phi, Options const& o) {
  std::size_t const len = o.syllables_or(kDefaultDiagramLength);
  std::size_t const third_len = std::max(len, kDefaultThirdDiagramLength);
  bool const all_tables = phi && *phi == "all-tables";
  json r = header("talgebra check",
                  json{{"G", g.name()},
                       {"A", a.name()},
                       {"phi", all_tables ? json("all-tables")
                                          : phi ? json::parse(*phi) : json(nullptr)},
                       {"max_syllables", len},
                       {"third_diagram_letters", third_len}});
  std::vector<ActionData> tables =
      all_tables ? unit_tables(g, a) : actions_for(g, a, phi);
  std::size_t bad = 0, valid = 0;
  json list = json::array();
  for (auto const& t : tables) {
    valid += validate_action(t).all();
    json item = talgebra_item(t, len, third_len, bad);
    if (tables.size() <= kMaxListedTables) list.push_back(std::move(item));
  }
  r["tables"] = tables.size();
  r["valid_actions"] = valid;
  r["items"] = std::move(list);
  r["violations"] = bad;
  return r;
}

json report_propercrit_sweep(Options const& o) {
  json r = header("propercrit sweep", json{{"max_order", o.max_order}, {"jobs", o.jobs}});
  auto sw = propercrit_sweep(o.max_order, o.jobs);
  json rows = json::array();
  for (auto const& row : sw.rows)
    rows.push_back(json{{"group", row.group},
                        {"order", row.order},
                        {"subgroups", row.subgroups},
                        {"pairs", row.pairs},
                        {"all_true", row.all_true},
                        {"all_false", row.all_false},
                        {"sequence_map_mismatches", row.sequence_map_mismatches},
                        {"violations", row.violations}});
  r["groups"] = std::move(rows);
  r["pairs"] = sw.pairs;
  r["violations"] = sw.violations;
  return r;
}

json report_property_p(std::optional<FiniteGroup> const& g, Options const& o) {
  auto row_json = [](PropertyPReport const& p) {
    return json{{"group", p.group},         {"order", p.order},
                {"subgroups", p.subgroups}, {"normal", p.normal},
                {"agreements", p.agreements}, {"violations", p.violations}};
  };
  if (g) {
    json r = header("property-p", json{{"group", g->name()}});
    auto p = property_P_sweep(*g);
    r["groups"] = json::array({row_json(p)});
    r["subgroups"] = p.subgroups;
    r["violations"] = p.violations.size();
    return r;
  }
  json r = header("property-p", json{{"max_order", o.max_order}, {"jobs", o.jobs}});
  auto sw = property_P_family_sweep(o.max_order, o.jobs);
  json rows = json::array();
  for (auto const& p : sw.rows) rows.push_back(row_json(p));
  r["groups"] = std::move(rows);
  r["subgroups"] = sw.subgroups;
  r["violations"] = sw.violations;
  return r;
}

namespace {

json subobject_json(PairSubobject const& s) {
  return json{{"G", s.ambient.big.name()},
              {"B", subgroup_json(s.ambient.small)},
              {"N", subgroup_json(s.n)},
              {"C", subgroup_json(s.c)}};
}

json witness_json(PairSubobject const& s) {
  auto p = properness(s);
  json w{{"subobject", subobject_json(s)},
         {"normal", is_normal_pair_subobject(s)},
         {"proper", p.proper},
         {"kernel_of_cokernel",
          json{{"N", subgroup_json(p.kernel_of_cokernel.n)},
               {"C", subgroup_json(p.kernel_of_cokernel.c)}}},
         {"closed_form_intersection", p.intersection_form},
         {"closed_form_union", p.union_form},
         {"matched", p.matched}};
  if (is_normal_pair_subobject(s)) {
    auto act = pair_conjugation_action(s);
    w["conjugation"] = json{{"big_stable", act.big_stable},
                            {"small_stable", act.small_stable},
                            {"valid_action", validate_action(act.action).all()},
                            {"phi", act.action.rows()}};
  }
  return w;
}

}  // namespace

json report_pairs_demo() {
  json r = header("pairs demo", json::object());
  auto demo = pairs_nonexactness_demo();
  auto z4 = cyclic(4);
  auto two = subgroup_generated(z4, {2});
  auto second = PairSubobject::make(PairObject::make(z4, two), two, Subgroup::trivial(z4));
  json witnesses = json::array({witness_json(demo.subobject), witness_json(second)});
  std::size_t bad = 0;
  for (auto const& w : witnesses) {
    bool const ok = w["normal"].get<bool>() && !w["proper"].get<bool>() &&
                    w["conjugation"]["big_stable"].get<bool>() &&
                    w["conjugation"]["small_stable"].get<bool>();
    bad += !ok;
  }
  r["witnesses"] = std::move(witnesses);
  r["conclusion"] =
      "normal subobjects carry a conjugation action but need not be proper, so "
      "normality does not imply properness in the pairs category";
  r["violations"] = bad;
  return r;
}

json report_pairs_sweep(Options const& o) {
  json r = header("pairs sweep", json{{"max_order", o.max_order}, {"jobs", o.jobs}});
  auto s = pairs_sweep(o.max_order, o.jobs);
  r["ambients"] = s.ambients;
  r["subobjects"] = s.subobjects;
  r["normal"] = s.normal;
  r["proper"] = s.proper;
  r["normal_not_proper"] = s.normal_not_proper;
  r["proper_not_normal"] = s.proper_not_normal;
  r["cokernel_formula_mismatches"] = s.cokernel_formula_mismatches;
  r["cokernel_depends_on_c"] = s.cokernel_depends_on_c;
  r["conjugation_failures"] = s.conjugation_failures;
  r["intersection_form_disagreements"] = s.intersection_form_disagreements;
  r["union_form_disagreements"] = s.union_form_disagreements;
  std::string matched = "neither";
  if (s.intersection_form_disagreements == 0)
    matched = s.union_form_disagreements == 0 ? "both" : "C = N meet B";
  else if (s.union_form_disagreements == 0)
    matched = "C = N union B";
  r["closed_form_matching_computation"] = matched;
  r["first_witness"] = name_or_null(s.first_witness);
  r["violations"] = s.violations() + (s.normal_not_proper == 0 ? 1 : 0);
  return r;
}

json report_word(FiniteGroup const& a, FiniteGroup const& g, std::string const& text) {
  json r = header("words", json{{"A", a.name()}, {"G", g.name()}, {"input", text}});
  auto fp = FreeProduct::of({a, g});
  auto w = parse_word(text, fp);
  json syl = json::array();
  for (auto const& s : w.syllables())
    syl.push_back(json{{"factor", fp.factor(s.factor).tag()}, {"elem", s.elem}});
  auto [ba, bg] = b_map(w);
  r["normal_form"] = to_string(w);
  r["length"] = w.length();
  r["syllables"] = std::move(syl);
  r["b_map"] = json::array({ba, bg});
  r["in_TG"] = in_TG(w);
  r["in_cross_effect"] = in_cross_effect(w);
  auto d = commutator_decomposition(w);
  json terms = json::array();
  for (auto const& t : d.terms) terms.push_back(json{{"g", t.g}, {"a", t.a}, {"z", t.z}});
  r["decomposition"] = json{{"terms", std::move(terms)},
                            {"residual_a", d.residual_a},
                            {"residual_g", d.residual_g}};
  r["roundtrip_exact"] = to_string(parse_word(to_string(w), fp)) == to_string(w) &&
                         reassemble(d, fp) == w;
  r["violations"] = r["roundtrip_exact"].get<bool>() ? 0 : 1;
  return r;
}

}  // namespace semiab::capi
