#include "semiab/commutators.hpp"

#include <algorithm>
#include <unordered_map>

namespace semiab {

std::string_view to_string(OracleFlag f) {
  switch (f) {
    case OracleFlag::Stabilized: return "stabilized";
    case OracleFlag::Exact: return "exact";
    case OracleFlag::BoundHit: return "bound-hit";
  }
  return "unknown";
}

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::Disagree: return "disagree";
    case Agreement::Unverified: return "unverified";
  }
  return "unknown";
}

namespace {

Subgroup generated_by_mask(FiniteGroup const& g, std::vector<char> const& mask) {
  std::vector<Elem> gens;
  for (Elem x = 0; x < mask.size(); ++x)
    if (mask[x]) gens.push_back(x);
  return subgroup_generated(g, gens);
}

struct Summands {
  FreeProduct fp;
  std::vector<GroupHom> folds;  // part-as-group -> ambient
};

Summands summands_of(std::vector<Subgroup> const& parts) {
  std::vector<FiniteGroup> groups;
  std::vector<GroupHom> folds;
  for (auto const& p : parts) {
    auto sg = as_group(p);
    groups.push_back(sg.group);
    folds.push_back(sg.embedding);
  }
  return Summands{FreeProduct::of(std::move(groups)), std::move(folds)};
}

void check_parts(std::vector<Subgroup> const& parts) {
  if (parts.size() < 2)
    raise(ErrorKind::TooFewFactors, "commutators need at least 2 parts");
  for (auto const& p : parts) require_same_ambient(parts.front(), p);
}

}  // namespace

Subgroup binary_commutator(Subgroup const& x, Subgroup const& y) {
  require_same_ambient(x, y);
  auto const& g = x.ambient();
  std::vector<char> mask(g.order(), 0);
  for (Elem a : x.members())
    for (Elem b : y.members()) mask[g.commutator(a, b)] = 1;
  return generated_by_mask(g, mask);
}

Subgroup huq_commutator(Subgroup const& x, Subgroup const& y) {
  return normal_closure(x.ambient(), binary_commutator(x, y));
}

std::size_t shortest_commutator_length(std::size_t n) {
  std::size_t len = 1;
  for (std::size_t k = 2; k <= n; ++k) len = 2 * (len + 1);
  return len;
}

Subgroup cross_effect_image_by_enumeration(std::vector<Subgroup> const& parts,
                                           std::size_t max_syllables,
                                           EnumerationBounds bounds) {
  check_parts(parts);
  auto const& g = parts.front().ambient();
  auto s = summands_of(parts);
  std::vector<char> mask(g.order(), 0);
  WordEnumerator en(s.fp, max_syllables, bounds);
  while (auto w = en.next())
    if (in_multi_cross_effect(*w)) mask[eval_word(*w, s.folds)] = 1;
  return generated_by_mask(g, mask);
}

OracleResult higher_commutator_oracle(CommutatorRequest const& req) {
  check_parts(req.parts);
  if (!(req.parts.front().ambient() == req.ambient))
    raise(ErrorKind::AmbientMismatch, "parts do not live in the ambient group");
  std::size_t const n = req.parts.size();
  auto const& g = req.ambient;
  auto s = summands_of(req.parts);
  auto const retractions = cross_effect_retractions(n);

  OracleResult out{Subgroup::trivial(g), OracleFlag::BoundHit, 0, 0, 0, std::nullopt};
  if (req.use_upper_bound && n >= 3) {
    // (X_1|...|X_n) lies in (sum of the others | X_k) for every k.
    Subgroup upper = Subgroup::whole(g);
    for (std::size_t k = 0; k < n; ++k) {
      Subgroup rest = Subgroup::trivial(g);
      for (std::size_t i = 0; i < n; ++i)
        if (i != k) rest = join(rest, req.parts[i]);
      upper = intersection(upper, binary_commutator(rest, req.parts[k]));
    }
    out.upper_bound = upper;
  }

  std::size_t const min_len = shortest_commutator_length(n);
  std::size_t silent = 0;
  std::vector<char> found(g.order(), 0);
  found[g.identity()] = 1;
  for (std::size_t len = 4;; len += 2) {
    if (out.upper_bound && out.result == *out.upper_bound) {
      out.flag = OracleFlag::Exact;
      return out;
    }
    if (len > req.max_word_syllables) {
      out.flag = OracleFlag::BoundHit;
      return out;
    }
    std::size_t const half = len / 2;
    std::optional<WordEnumerator> en;
    try {
      en.emplace(s.fp, half,
                 EnumerationBounds{req.max_word_syllables, req.max_words});
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::BoundExceeded) throw;
      out.flag = OracleFlag::BoundHit;
      return out;
    }
    // Words u, v with equal retractions give a cross-effect element u·v⁻¹.
    std::unordered_map<std::string, Elem> first_fold;
    std::string key;
    std::size_t before = out.result.size();
    while (auto w = en->next()) {
      ++out.words_examined;
      key.clear();
      for (FactorMask m : retractions) {
        FreeWord const part = project(*w, m);
        for (auto const& syl : part.syllables()) {
          key.push_back(static_cast<char>(syl.factor));
          key.push_back(static_cast<char>(syl.elem & 0xFF));
          key.push_back(static_cast<char>(syl.elem >> 8));
        }
        key.push_back('\xFF');
      }
      Elem fold = eval_word(*w, s.folds);
      auto [it, inserted] = first_fold.emplace(key, fold);
      if (!inserted) found[g.mul(fold, g.inv(it->second))] = 1;
    }
    out.result = generated_by_mask(g, found);
    ++out.rounds;
    out.covered_length = len;
    bool const grew = out.result.size() != before;
    if (len >= min_len) silent = grew ? 0 : silent + 1;
    if (!(out.upper_bound && out.result == *out.upper_bound) && silent >= 2) {
      out.flag = OracleFlag::Stabilized;
      return out;
    }
  }
}

Subgroup ternary_generators(Subgroup const& x, Subgroup const& y,
                            Subgroup const& z) {
  require_same_ambient(x, y);
  require_same_ambient(x, z);
  auto const& g = x.ambient();
  std::vector<char> mask(g.order(), 0);
  for (Elem a : x.members())
    for (Elem b : y.members())
      for (Elem c : z.members()) {
        mask[g.commutator(g.commutator(a, b), c)] = 1;
        mask[g.commutator(g.commutator(b, c), a)] = 1;
        mask[g.commutator(g.commutator(c, a), b)] = 1;
      }
  return generated_by_mask(g, mask);
}

TernaryResult ternary_recipe(Subgroup const& x, Subgroup const& y,
                             Subgroup const& z, std::size_t max_words) {
  Subgroup gens = ternary_generators(x, y, z);
  CommutatorRequest req{x.ambient(), {x, y, z}};
  req.max_words = max_words;
  OracleResult oracle = higher_commutator_oracle(req);
  Agreement agreement;
  if (oracle.flag == OracleFlag::BoundHit) {
    // The oracle's partial result is still a set of genuine elements.
    agreement = oracle.result.is_subset_of(gens) ? Agreement::Unverified
                                                 : Agreement::Disagree;
  } else {
    agreement = oracle.result == gens ? Agreement::Agree : Agreement::Disagree;
  }
  return TernaryResult{std::move(gens), agreement, std::move(oracle)};
}

}  // namespace semiab
