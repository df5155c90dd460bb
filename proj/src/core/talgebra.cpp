#include "semiab/talgebra.hpp"

namespace semiab {

namespace {

constexpr std::size_t kMaxWitnesses = 4;

void add_witness(DiagramResult& r, std::string s) {
  r.ok = false;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(s));
}

FreeProduct sum_of(ActionData const& phi) {
  return FreeProduct::of({phi.acted(), phi.acting()});
}

}  // namespace

Elem xi_eval(ActionData const& phi, FreeWord const& w) {
  if (!in_TG(w)) raise(ErrorKind::NotInTG, to_string(w) + " is not in T_G(A)");
  auto d = commutator_decomposition(w);
  return phi.acted().mul(psi_eval_terms(phi, d.terms), d.residual_a);
}

DiagramResult check_unit_diagram(ActionData const& phi, std::size_t max_syllables) {
  auto const& a = phi.acted();
  auto const& g = phi.acting();
  auto fp = sum_of(phi);
  DiagramResult r;
  auto check = [&](FreeWord const& w) {
    Elem const pw = psi_eval(phi, w);
    for (Elem x = 0; x < a.order(); ++x) {
      if (x == a.identity()) continue;
      ++r.words_checked;
      auto conj = FreeWord::letter(fp, 0, x) * w * FreeWord::letter(fp, 0, a.inv(x));
      if (psi_eval(phi, conj) != a.conj(x, pw))
        add_witness(r, "a=" + std::to_string(x) + " w=" + to_string(w));
    }
  };
  for (Elem h = 0; h < g.order(); ++h)
    for (Elem y = 0; y < a.order(); ++y)
      if (h != g.identity() && y != a.identity()) check(generator_word(fp, h, y));
  WordEnumerator en(fp, max_syllables, EnumerationBounds{max_syllables, 1'000'000});
  while (auto w = en.next())
    if (in_cross_effect(*w)) check(*w);
  r.matches_table_condition = r.ok == validate_action(phi).endomorphism_ok;
  return r;
}

DiagramResult check_assoc_diagram(ActionData const& phi, std::size_t max_syllables) {
  auto const& g = phi.acting();
  auto fp = sum_of(phi);
  DiagramResult r;
  WordEnumerator en(fp, max_syllables, EnumerationBounds{max_syllables, 1'000'000});
  while (auto w = en.next()) {
    if (!in_TG(*w)) continue;
    Elem const xw = xi_eval(phi, *w);
    for (Elem h = 0; h < g.order(); ++h) {
      if (h == g.identity()) continue;
      ++r.words_checked;
      auto c = commutator_word(FreeWord::letter(fp, 1, h), *w);
      if (psi_eval(phi, c) != phi.psi_generator(h, xw))
        add_witness(r, "g=" + std::to_string(h) + " w=" + to_string(*w));
    }
  }
  r.matches_table_condition = r.ok == validate_action(phi).associativity_ok;
  return r;
}

WordCheck check_mufact(FiniteGroup const& a, FiniteGroup const& g,
                       std::size_t max_syllables) {
  auto fp = FreeProduct::of({a, g});
  WordCheck r;
  WordEnumerator en(fp, max_syllables, EnumerationBounds{max_syllables, 1'000'000});
  while (auto w = en.next()) {
    if (!in_TG(*w)) continue;
    for (Elem h = 0; h < g.order(); ++h) {
      ++r.words_checked;
      auto c = commutator_word(FreeWord::letter(fp, 1, h), *w);
      if (!in_cross_effect(c) && r.ok) {
        r.ok = false;
        r.counterexample = c;
      }
    }
  }
  return r;
}

namespace {

// Normal form of one retraction of a growing word, with undo.
class ProjectionStack {
 public:
  ProjectionStack(FreeProduct const& fp, FactorMask keep) : fp_(fp), keep_(keep) {}

  void push(Syllable s) {
    if (!(keep_ >> s.factor & 1)) {
      log_.push_back({Op::None, {}});
      return;
    }
    if (!s_.empty() && s_.back().factor == s.factor) {
      auto const& f = fp_.factor(s.factor);
      Syllable top = s_.back();
      if (f.is_free()) {
        if ((top.elem ^ 1u) == s.elem) {
          s_.pop_back();
          log_.push_back({Op::Popped, top});
          return;
        }
      } else {
        Elem m = f.group().mul(top.elem, s.elem);
        if (m == f.group().identity()) {
          s_.pop_back();
          log_.push_back({Op::Popped, top});
        } else {
          s_.back().elem = m;
          log_.push_back({Op::Replaced, top});
        }
        return;
      }
    }
    s_.push_back(s);
    log_.push_back({Op::Pushed, {}});
  }

  void undo() {
    auto [op, old] = log_.back();
    log_.pop_back();
    switch (op) {
      case Op::None: break;
      case Op::Pushed: s_.pop_back(); break;
      case Op::Popped: s_.push_back(old); break;
      case Op::Replaced: s_.back() = old; break;
    }
  }

  std::size_t size() const noexcept { return s_.size(); }

 private:
  enum class Op { None, Pushed, Popped, Replaced };
  struct Entry {
    Op op;
    Syllable old;
  };
  FreeProduct fp_;
  FactorMask keep_;
  std::vector<Syllable> s_;
  std::vector<Entry> log_;
};

struct ThirdDiagramSearch {
  ActionData const& phi;
  std::size_t max_letters;
  FreeProduct sum;     // A + G
  FreeProduct triple;  // K + A + G with K free on the [g,a]
  std::vector<std::pair<Elem, Elem>> gens;
  std::vector<Syllable> alphabet;
  std::vector<ProjectionStack> stacks;
  std::vector<Syllable> word;
  DiagramResult result;

  explicit ThirdDiagramSearch(ActionData const& p, std::size_t l)
      : phi(p), max_letters(l), sum(FreeProduct::of({p.acted(), p.acting()})),
        triple(FreeProduct::of({})) {
    auto const& a = phi.acted();
    auto const& g = phi.acting();
    for (Elem h = 0; h < g.order(); ++h)
      for (Elem x = 0; x < a.order(); ++x)
        if (h != g.identity() && x != a.identity()) gens.emplace_back(h, x);
    triple = FreeProduct::with_factors({Factor::free(gens.size(), "K"),
                                        Factor::finite(a, "A"), Factor::finite(g, "G")});
    for (Elem k = 0; k < 2 * gens.size(); ++k) alphabet.push_back({0, k});
    for (Elem x = 0; x < a.order(); ++x)
      if (x != a.identity()) alphabet.push_back({1, x});
    for (Elem h = 0; h < g.order(); ++h)
      if (h != g.identity()) alphabet.push_back({2, h});
    for (FactorMask m : cross_effect_retractions(3)) stacks.emplace_back(triple, m);
  }

  bool compatible(Syllable s) const {
    if (word.empty()) return true;
    auto const& prev = word.back();
    if (prev.factor != s.factor) return true;
    return s.factor == 0 && (prev.elem ^ 1u) != s.elem;
  }

  void evaluate() {
    ++result.words_checked;
    FreeWord right(sum), left(sum);
    auto const& a = phi.acted();
    for (auto const& s : word) {
      if (s.factor == 0) {
        auto [h, x] = gens[s.elem / 2];
        bool const inverse = s.elem & 1;
        FreeWord c = generator_word(sum, h, x);
        if (inverse) c = c.inverse();
        for (auto const& t : c.syllables()) right.push_back(t);
        Elem v = phi.psi_generator(h, x);
        if (inverse) v = a.inv(v);
        if (v != a.identity()) left.push_back({0, v});
      } else {
        Syllable t{static_cast<std::uint16_t>(s.factor - 1), s.elem};
        right.push_back(t);
        left.push_back(t);
      }
    }
    auto describe = [&] {
      return to_string(FreeWord::from_syllables(triple, word));
    };
    if (!in_cross_effect(right) || !in_cross_effect(left)) {
      add_witness(result, "leg leaves (A|G): " + describe());
      return;
    }
    if (psi_eval(phi, right) != psi_eval(phi, left)) add_witness(result, describe());
  }

  void dfs() {
    std::size_t const remaining = max_letters - word.size();
    if (!word.empty()) {
      bool trivial = true;
      for (auto const& st : stacks) {
        if (st.size() > remaining) return;
        trivial = trivial && st.size() == 0;
      }
      if (trivial) evaluate();
    }
    if (remaining == 0) return;
    for (auto const& s : alphabet) {
      if (!compatible(s)) continue;
      word.push_back(s);
      for (auto& st : stacks) st.push(s);
      dfs();
      for (auto& st : stacks) st.undo();
      word.pop_back();
    }
  }
};

}  // namespace

DiagramResult check_third_diagram(ActionData const& phi, std::size_t max_letters) {
  ThirdDiagramSearch search(phi, max_letters);
  if (!search.gens.empty()) search.dfs();
  return search.result;
}

WordCheck kerxi_consistency(ActionData const& phi, std::size_t max_syllables) {
  auto sd = semidirect(phi);
  auto fp = sum_of(phi);
  std::vector<GroupHom> homs{sd.l, sd.s};
  auto const& a = phi.acted();
  WordCheck r;
  WordEnumerator en(fp, max_syllables, EnumerationBounds{max_syllables, 1'000'000});
  while (auto w = en.next()) {
    if (!in_TG(*w)) continue;
    ++r.words_checked;
    bool const xi_trivial = xi_eval(phi, *w) == a.identity();
    bool const q_trivial = eval_word(*w, homs) == sd.product.identity();
    if (xi_trivial != q_trivial && r.ok) {
      r.ok = false;
      r.counterexample = *w;
    }
  }
  return r;
}

TAlgebraCheckReport talgebra_check(ActionData const& phi, std::size_t max_syllables,
                                   std::size_t third_letters) {
  TAlgebraCheckReport rep;
  auto const& a = phi.acted();
  auto fp = sum_of(phi);
  rep.unit_ok = validate_action(phi).unit_ok;
  for (Elem x = 0; x < a.order() && rep.unit_ok; ++x)
    if (x != a.identity() && xi_eval(phi, FreeWord::letter(fp, 0, x)) != x)
      rep.unit_ok = false;
  if (!rep.unit_ok) rep.witnesses.push_back("unit: table lacks unit row or column");

  auto merge = [&](std::string const& tag, DiagramResult const& d) {
    for (auto const& w : d.witnesses) rep.witnesses.push_back(tag + ": " + w);
    return d.ok;
  };
  rep.endo_diagram_ok = merge("endomorphism", check_unit_diagram(phi, max_syllables));
  rep.assoc_diagram_ok = merge("associativity", check_assoc_diagram(phi, max_syllables));
  if (rep.unit_ok && rep.endo_diagram_ok && rep.assoc_diagram_ok) {
    auto third = check_third_diagram(phi, third_letters);
    rep.third_words_tested = third.words_checked;
    rep.third_diagram_ok = merge("third", third);
  }
  return rep;
}

}  // namespace semiab
