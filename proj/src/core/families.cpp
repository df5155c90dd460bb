#include "semiab/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <string>

namespace semiab {

namespace {

constexpr std::size_t kMaxCyclic = 4096;
constexpr std::size_t kMaxDihedral = 2048;

FiniteGroup from_rule(std::size_t n, auto&& mul, std::string name) {
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = static_cast<Elem>(mul(a, b));
  return FiniteGroup::from_flat_unchecked(n, std::move(t), std::move(name));
}

using Perm = std::vector<Elem>;

Perm compose_perm(Perm const& s, Perm const& t) {
  Perm r(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) r[x] = s[t[x]];
  return r;
}

bool is_even(Perm const& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

FiniteGroup from_perms(std::vector<Perm> perms, std::string name) {
  std::sort(perms.begin(), perms.end());
  std::map<Perm, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index[perms[i]] = static_cast<Elem>(i);
  std::size_t const n = perms.size();
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = index.at(compose_perm(perms[a], perms[b]));
  return FiniteGroup::from_flat_unchecked(n, std::move(t), std::move(name));
}

std::vector<Perm> all_perms(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 0 || n > kMaxCyclic)
    raise(ErrorKind::UnsupportedParameter,
          "cyclic order must be in 1.." + std::to_string(kMaxCyclic));
  return from_rule(
      n, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      n == 1 ? "1" : "Z" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0 || n > kMaxDihedral)
    raise(ErrorKind::UnsupportedParameter,
          "dihedral parameter must be in 1.." + std::to_string(kMaxDihedral));
  // r^i s^a * r^j s^b = r^(i + (-1)^a j) s^(a+b)
  return from_rule(
      2 * n,
      [n](std::size_t x, std::size_t y) {
        std::size_t i = x % n, a = x / n, j = y % n, b = y / n;
        std::size_t k = a ? (i + n - j) % n : (i + j) % n;
        return ((a + b) % 2) * n + k;
      },
      "D" + std::to_string(n));
}

FiniteGroup symmetric(std::size_t n) {
  if (n == 0 || n > 5)
    raise(ErrorKind::UnsupportedParameter, "symmetric degree must be 1..5");
  return from_perms(all_perms(n), "S" + std::to_string(n));
}

FiniteGroup alternating(std::size_t n) {
  if (n == 0 || n > 5)
    raise(ErrorKind::UnsupportedParameter, "alternating degree must be 1..5");
  auto perms = all_perms(n);
  std::erase_if(perms, [](Perm const& p) { return !is_even(p); });
  return from_perms(std::move(perms), "A" + std::to_string(n));
}

FiniteGroup quaternion8() {
  // Index 2u + s encodes (-1)^s * unit u, units 1, i, j, k.
  static constexpr int unit_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return from_rule(
      8,
      [](std::size_t x, std::size_t y) {
        std::size_t u = x / 2, v = y / 2;
        std::size_t s = (x % 2 + y % 2 + sign_mul[u][v]) % 2;
        return 2 * unit_mul[u][v] + s;
      },
      "Q8");
}

DirectProduct direct_product(FiniteGroup const& g, FiniteGroup const& h) {
  std::size_t const m = h.order();
  std::string name = g.name() + "x" + h.name();
  auto gh = from_rule(
      g.order() * m,
      [&](std::size_t x, std::size_t y) {
        return g.mul(static_cast<Elem>(x / m), static_cast<Elem>(y / m)) * m +
               h.mul(static_cast<Elem>(x % m), static_cast<Elem>(y % m));
      },
      std::move(name));
  std::vector<Elem> pl(gh.order()), pr(gh.order()), il(g.order()), ir(m);
  for (Elem x = 0; x < gh.order(); ++x) {
    pl[x] = static_cast<Elem>(x / m);
    pr[x] = static_cast<Elem>(x % m);
  }
  for (Elem a = 0; a < g.order(); ++a)
    il[a] = static_cast<Elem>(a * m + h.identity());
  for (Elem b = 0; b < m; ++b)
    ir[b] = static_cast<Elem>(g.identity() * m + b);
  return DirectProduct{gh, GroupHom::unchecked(gh, g, pl),
                       GroupHom::unchecked(gh, h, pr),
                       GroupHom::unchecked(g, gh, il),
                       GroupHom::unchecked(h, gh, ir)};
}

namespace {

FiniteGroup parse_factor(std::string_view tok, std::string_view full) {
  auto bad = [&] {
    raise(ErrorKind::UnsupportedParameter,
          "cannot parse group name '" + std::string(full) + "'");
  };
  std::size_t power = 1;
  if (auto caret = tok.find('^'); caret != std::string_view::npos) {
    auto p = tok.substr(caret + 1);
    auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), power);
    if (ec != std::errc() || ptr != p.data() + p.size() || power == 0 ||
        power > 8)
      bad();
    tok = tok.substr(0, caret);
  }
  FiniteGroup base;
  if (tok == "1" || tok == "trivial") {
    base = cyclic(1);
  } else if (tok == "Q8") {
    base = quaternion8();
  } else if (tok == "V4") {
    base = direct_product(cyclic(2), cyclic(2)).group.renamed("V4");
  } else if (tok.size() >= 2) {
    std::size_t n = 0;
    auto digits = tok.substr(1);
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) bad();
    switch (tok[0]) {
      case 'Z':
      case 'C': base = cyclic(n); break;
      case 'D': base = dihedral(n); break;
      case 'S': base = symmetric(n); break;
      case 'A': base = alternating(n); break;
      default: bad();
    }
  } else {
    bad();
  }
  FiniteGroup out = base;
  for (std::size_t i = 1; i < power; ++i)
    out = direct_product(out, base).group;
  if (power > 1)
    out = out.renamed(base.name() + "^" + std::to_string(power));
  return out;
}

}  // namespace

FiniteGroup named_group(std::string_view name) {
  if (name.empty())
    raise(ErrorKind::UnsupportedParameter, "empty group name");
  std::vector<FiniteGroup> factors;
  std::size_t start = 0;
  while (start <= name.size()) {
    auto end = name.find('x', start);
    if (end == std::string_view::npos) end = name.size();
    factors.push_back(parse_factor(name.substr(start, end - start), name));
    start = end + 1;
  }
  FiniteGroup out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = direct_product(out, factors[i]).group;
  return out.renamed(std::string(name));
}

std::vector<FiniteGroup> family_list(std::size_t max_order) {
  if (max_order > kDefaultSearchBound)
    raise(ErrorKind::BoundExceeded, "family list order " + std::to_string(max_order) +
                                        " exceeds " + std::to_string(kDefaultSearchBound));
  std::vector<FiniteGroup> candidates;
  for (std::size_t n = 1; n <= max_order; ++n) candidates.push_back(cyclic(n));
  for (char const* special : {"S3", "S4", "A4", "Q8", "Z2^3", "Z3^2", "Z2xZ4"})
    candidates.push_back(named_group(special));
  for (std::size_t n = 2; 2 * n <= max_order; ++n)
    candidates.push_back(dihedral(n));
  std::erase_if(candidates,
                [&](FiniteGroup const& g) { return g.order() > max_order; });
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](FiniteGroup const& a, FiniteGroup const& b) {
                     return a.order() < b.order();
                   });
  std::vector<FiniteGroup> out;
  for (auto const& g : candidates) {
    bool dup = std::any_of(out.begin(), out.end(), [&](FiniteGroup const& h) {
      return h.order() == g.order() &&
             is_isomorphic(g, h, std::max<std::size_t>(g.order(), 64));
    });
    if (!dup) out.push_back(g);
  }
  return out;
}

FiniteGroup permutation_group(std::size_t degree,
                              std::vector<std::vector<Elem>> const& gens,
                              std::string name) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), Elem{0});
  for (auto const& g : gens) {
    if (g.size() != degree)
      raise(ErrorKind::ParseError, "generator length differs from degree");
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != id)
      raise(ErrorKind::ParseError, "generator is not a permutation");
  }
  std::map<Perm, bool> seen{{id, true}};
  std::vector<Perm> found{id};
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found.size() > 2048)
      raise(ErrorKind::BoundExceeded, "permutation group larger than 2048 elements");
    for (auto const& g : gens) {
      auto p = compose_perm(found[i], g);
      if (seen.emplace(p, true).second) found.push_back(std::move(p));
    }
  }
  return from_perms(std::move(found), std::move(name));
}

}  // namespace semiab
