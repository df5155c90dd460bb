#include "semiab/free_product.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace semiab {

// -- Factor / FreeProduct ---------------------------------------------------

Factor Factor::finite(FiniteGroup g, std::string tag) {
  Factor f;
  f.group_ = std::move(g);
  f.tag_ = std::move(tag);
  return f;
}

Factor Factor::free(std::size_t rank, std::string tag) {
  Factor f;
  f.rank_ = rank;
  f.tag_ = std::move(tag);
  return f;
}

FiniteGroup const& Factor::group() const {
  if (!group_) raise(ErrorKind::SignatureMismatch, "factor " + tag_ + " is free");
  return *group_;
}

std::size_t Factor::letter_count() const noexcept {
  return group_ ? group_->order() - 1 : 2 * rank_;
}

bool operator==(Factor const& a, Factor const& b) {
  if (a.is_free() != b.is_free()) return false;
  if (a.is_free()) return a.rank_ == b.rank_;
  return *a.group_ == *b.group_;
}

FreeProduct FreeProduct::of(std::vector<FiniteGroup> factors,
                            std::vector<std::string> tags) {
  if (tags.empty()) {
    if (factors.size() == 2) {
      tags = {"A", "G"};
    } else {
      for (std::size_t i = 0; i < factors.size(); ++i)
        tags.push_back("X" + std::to_string(i + 1));
    }
  }
  if (tags.size() != factors.size())
    raise(ErrorKind::FactorMismatch, "one tag per factor required");
  std::vector<Factor> fs;
  for (std::size_t i = 0; i < factors.size(); ++i)
    fs.push_back(Factor::finite(std::move(factors[i]), tags[i]));
  return with_factors(std::move(fs));
}

FreeProduct FreeProduct::with_factors(std::vector<Factor> factors) {
  if (factors.size() > 32)
    raise(ErrorKind::BoundExceeded, "at most 32 factors supported");
  FreeProduct fp;
  fp.f_ = std::make_shared<const std::vector<Factor>>(std::move(factors));
  return fp;
}

std::optional<std::size_t> FreeProduct::find_tag(std::string_view tag) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (factor(i).tag() == tag) return i;
  return std::nullopt;
}

bool operator==(FreeProduct const& a, FreeProduct const& b) {
  return a.f_ == b.f_ || *a.f_ == *b.f_;
}

// -- FreeWord ---------------------------------------------------------------

FreeWord FreeWord::letter(FreeProduct fp, std::size_t factor, Elem elem) {
  FreeWord w(std::move(fp));
  w.push_back(Syllable{static_cast<std::uint16_t>(factor), elem});
  return w;
}

FreeWord FreeWord::from_syllables(FreeProduct fp,
                                  std::vector<Syllable> const& syllables) {
  FreeWord w(std::move(fp));
  for (auto s : syllables) w.push_back(s);
  return w;
}

void FreeWord::push_back(Syllable s) {
  if (s.factor >= fp_.size())
    raise(ErrorKind::FactorMismatch,
          "factor index " + std::to_string(s.factor) + " out of range");
  Factor const& f = fp_.factor(s.factor);
  if (f.is_free()) {
    if (s.elem >= 2 * f.rank())
      raise(ErrorKind::FactorMismatch, "letter outside free factor " + f.tag());
    if (!s_.empty() && s_.back().factor == s.factor &&
        s_.back().elem == (s.elem ^ 1u)) {
      s_.pop_back();
    } else {
      s_.push_back(s);
    }
    return;
  }
  FiniteGroup const& g = f.group();
  if (s.elem >= g.order())
    raise(ErrorKind::FactorMismatch, "element outside factor " + f.tag());
  if (s.elem == g.identity()) return;
  if (!s_.empty() && s_.back().factor == s.factor) {
    Elem m = g.mul(s_.back().elem, s.elem);
    if (m == g.identity())
      s_.pop_back();
    else
      s_.back().elem = m;
  } else {
    s_.push_back(s);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord w(fp_);
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) {
    Factor const& f = fp_.factor(it->factor);
    Elem inv = f.is_free() ? (it->elem ^ 1u) : f.group().inv(it->elem);
    w.s_.push_back(Syllable{it->factor, inv});
  }
  return w;
}

bool operator<(FreeWord const& a, FreeWord const& b) {
  if (a.s_.size() != b.s_.size()) return a.s_.size() < b.s_.size();
  return a.s_ < b.s_;
}

FreeWord word_concat(FreeWord const& u, FreeWord const& v) {
  if (!(u.product() == v.product()))
    raise(ErrorKind::FactorMismatch, "words live in different free products");
  FreeWord w = u;
  for (auto s : v.syllables()) w.push_back(s);
  return w;
}

FreeWord operator*(FreeWord const& u, FreeWord const& v) {
  return word_concat(u, v);
}

FreeWord commutator_word(FreeWord const& x, FreeWord const& y) {
  return word_concat(word_concat(x, y), word_concat(x.inverse(), y.inverse()));
}

Elem eval_word(FreeWord const& w, std::span<const GroupHom> homs) {
  auto const& fp = w.product();
  if (homs.size() != fp.size())
    raise(ErrorKind::SignatureMismatch, "need one hom per factor");
  for (std::size_t k = 0; k < homs.size(); ++k) {
    if (!(homs[k].domain() == fp.factor(k).group()))
      raise(ErrorKind::SignatureMismatch,
            "hom " + std::to_string(k) + " has the wrong domain");
    if (!(homs[k].codomain() == homs[0].codomain()))
      raise(ErrorKind::SignatureMismatch, "homs must share a codomain");
  }
  FiniteGroup const& c =
      homs.empty() ? FiniteGroup{} : homs[0].codomain();
  Elem r = c.identity();
  for (auto s : w.syllables()) r = c.mul(r, homs[s.factor](s.elem));
  return r;
}

Elem eval_word(FreeWord const& w, FiniteGroup const& codomain,
               std::function<Elem(Syllable)> const& letter_value) {
  Elem r = codomain.identity();
  for (auto s : w.syllables()) r = codomain.mul(r, letter_value(s));
  return r;
}

FreeWord project(FreeWord const& w, FactorMask keep) {
  FreeWord out(w.product());
  for (auto s : w.syllables())
    if (keep & (FactorMask{1} << s.factor)) out.push_back(s);
  return out;
}

namespace {

void require_two_finite(FreeWord const& w) {
  auto const& fp = w.product();
  if (fp.size() != 2 || fp.factor(0).is_free() || fp.factor(1).is_free())
    raise(ErrorKind::SignatureMismatch,
          "expected a word of A+G with two finite factors");
}

}  // namespace

std::pair<Elem, Elem> b_map(FreeWord const& w) {
  require_two_finite(w);
  auto const& a = w.product().factor(0).group();
  auto const& g = w.product().factor(1).group();
  Elem ea = a.identity(), eg = g.identity();
  for (auto s : w.syllables()) {
    if (s.factor == 0)
      ea = a.mul(ea, s.elem);
    else
      eg = g.mul(eg, s.elem);
  }
  return {ea, eg};
}

bool in_TG(FreeWord const& w) {
  auto [a, g] = b_map(w);
  (void)a;
  return g == w.product().factor(1).group().identity();
}

bool in_cross_effect(FreeWord const& w) {
  auto [a, g] = b_map(w);
  return a == w.product().factor(0).group().identity() &&
         g == w.product().factor(1).group().identity();
}

namespace {

FactorMask union_of(std::vector<FactorMask> const& blocks) {
  FactorMask m = 0;
  for (auto b : blocks) m |= b;
  return m;
}

// (B_1 | ... | B_m) where each block is itself a sub-coproduct.
bool in_cross_blocks(FreeWord const& w, std::vector<FactorMask> const& blocks) {
  if (blocks.size() == 2)
    return project(w, blocks[0]).empty() && project(w, blocks[1]).empty();
  std::vector<FactorMask> merged{blocks[0] | blocks[1]};
  merged.insert(merged.end(), blocks.begin() + 2, blocks.end());
  FactorMask const all = union_of(blocks);
  return in_cross_blocks(w, merged) && project(w, all & ~blocks[1]).empty() &&
         project(w, all & ~blocks[0]).empty();
}

void collect_retractions(std::vector<FactorMask> const& blocks,
                         std::vector<FactorMask>& out) {
  if (blocks.size() == 2) {
    out.push_back(blocks[0]);
    out.push_back(blocks[1]);
    return;
  }
  std::vector<FactorMask> merged{blocks[0] | blocks[1]};
  merged.insert(merged.end(), blocks.begin() + 2, blocks.end());
  collect_retractions(merged, out);
  FactorMask const all = union_of(blocks);
  out.push_back(all & ~blocks[1]);
  out.push_back(all & ~blocks[0]);
}

std::vector<FactorMask> singleton_blocks(std::size_t n) {
  std::vector<FactorMask> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(FactorMask{1} << i);
  return blocks;
}

}  // namespace

bool in_multi_cross_effect(FreeWord const& w) {
  std::size_t const n = w.product().size();
  if (n < 2)
    raise(ErrorKind::TooFewFactors, "cross-effects need at least 2 factors");
  return in_cross_blocks(w, singleton_blocks(n));
}

FreeWord restrict_to(FreeWord const& w,
                     std::vector<std::size_t> const& factors) {
  std::vector<Factor> fs;
  std::vector<int> new_index(w.product().size(), -1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] >= w.product().size())
      raise(ErrorKind::FactorMismatch, "factor index out of range");
    fs.push_back(w.product().factor(factors[i]));
    new_index[factors[i]] = static_cast<int>(i);
  }
  FreeWord out(FreeProduct::with_factors(std::move(fs)));
  for (auto s : w.syllables())
    if (new_index[s.factor] >= 0)
      out.push_back(
          Syllable{static_cast<std::uint16_t>(new_index[s.factor]), s.elem});
  return out;
}

bool in_multi_cross_effect(FreeWord const& w,
                           std::vector<std::size_t> const& factors) {
  return in_multi_cross_effect(restrict_to(w, factors));
}

std::vector<FactorMask> cross_effect_retractions(std::size_t n) {
  if (n < 2)
    raise(ErrorKind::TooFewFactors, "cross-effects need at least 2 factors");
  std::vector<FactorMask> all;
  collect_retractions(singleton_blocks(n), all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<FactorMask> maximal;
  for (auto m : all) {
    bool dominated = std::any_of(all.begin(), all.end(), [&](FactorMask o) {
      return o != m && (m & o) == m;
    });
    if (!dominated) maximal.push_back(m);
  }
  return maximal;
}

// -- commutator normal form ------------------------------------------------

namespace {

void push_term(std::vector<CommutatorTerm>& terms, CommutatorTerm t) {
  if (!terms.empty() && terms.back().g == t.g && terms.back().a == t.a &&
      terms.back().z == -t.z) {
    terms.pop_back();
  } else {
    terms.push_back(t);
  }
}

}  // namespace

CommutatorDecomposition commutator_decomposition(FreeWord const& w) {
  require_two_finite(w);
  auto const& A = w.product().factor(0).group();
  auto const& G = w.product().factor(1).group();
  CommutatorDecomposition d;
  d.residual_a = A.identity();
  d.residual_g = G.identity();
  // Invariant: prefix = terms · residual_a · residual_g.
  for (auto s : w.syllables()) {
    if (s.factor == 1) {
      d.residual_g = G.mul(d.residual_g, s.elem);
      continue;
    }
    Elem const g = d.residual_g;
    Elem const a = d.residual_a;
    Elem const aa = A.mul(a, s.elem);
    // a·g·a' = a·[g,a']·a'·g  and  a·[g,a']·a⁻¹ = [g,a]⁻¹·[g,aa'].
    if (g != G.identity()) {
      if (a != A.identity()) push_term(d.terms, CommutatorTerm{g, a, -1});
      if (aa != A.identity()) push_term(d.terms, CommutatorTerm{g, aa, +1});
    }
    d.residual_a = aa;
  }
  return d;
}

FreeWord generator_word(FreeProduct const& fp, Elem g, Elem a) {
  return commutator_word(FreeWord::letter(fp, 1, g), FreeWord::letter(fp, 0, a));
}

FreeWord reassemble(CommutatorDecomposition const& d, FreeProduct const& fp) {
  FreeWord w(fp);
  for (auto const& t : d.terms) {
    auto c = generator_word(fp, t.g, t.a);
    w = word_concat(w, t.z > 0 ? c : c.inverse());
  }
  w.push_back(Syllable{0, d.residual_a});
  w.push_back(Syllable{1, d.residual_g});
  return w;
}

// -- enumeration -----------------------------------------------------------

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > std::numeric_limits<std::uint64_t>::max() / b
             ? std::numeric_limits<std::uint64_t>::max()
             : a * b;
}

}  // namespace

std::uint64_t count_words(FreeProduct const& fp, std::size_t length) {
  if (length == 0) return 1;
  std::size_t const n = fp.size();
  std::vector<std::uint64_t> ending(n);
  for (std::size_t f = 0; f < n; ++f) ending[f] = fp.factor(f).letter_count();
  for (std::size_t l = 1; l < length; ++l) {
    std::uint64_t total = 0;
    for (auto c : ending) total = sat_add(total, c);
    std::vector<std::uint64_t> next(n);
    for (std::size_t f = 0; f < n; ++f) {
      auto const& fac = fp.factor(f);
      std::uint64_t others = total - std::min(total, ending[f]);
      if (total == std::numeric_limits<std::uint64_t>::max()) others = total;
      next[f] = sat_mul(fac.letter_count(), others);
      if (fac.is_free())
        next[f] = sat_add(next[f], sat_mul(fac.letter_count() - 1, ending[f]));
    }
    ending = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto c : ending) total = sat_add(total, c);
  return total;
}

WordEnumerator::WordEnumerator(FreeProduct fp, std::size_t max_syllables,
                               EnumerationBounds bounds)
    : fp_(std::move(fp)), max_len_(max_syllables) {
  if (max_syllables > bounds.max_syllables)
    raise(ErrorKind::BoundExceeded,
          "max_syllables " + std::to_string(max_syllables) + " exceeds " +
              std::to_string(bounds.max_syllables));
  for (std::size_t l = 0; l <= max_syllables; ++l)
    total_ = sat_add(total_, count_words(fp_, l));
  if (total_ > bounds.max_words)
    raise(ErrorKind::BoundExceeded, std::to_string(total_) +
                                        " words exceed the budget of " +
                                        std::to_string(bounds.max_words));
  for (std::size_t f = 0; f < fp_.size(); ++f) {
    auto const& fac = fp_.factor(f);
    if (fac.is_free()) {
      for (Elem e = 0; e < 2 * fac.rank(); ++e)
        alphabet_.push_back(Syllable{static_cast<std::uint16_t>(f), e});
    } else {
      for (Elem e = 0; e < fac.group().order(); ++e)
        if (e != fac.group().identity())
          alphabet_.push_back(Syllable{static_cast<std::uint16_t>(f), e});
    }
  }
}

bool WordEnumerator::compatible(std::size_t prev, std::size_t cur) const {
  auto const& p = alphabet_[prev];
  auto const& c = alphabet_[cur];
  if (p.factor != c.factor) return true;
  return fp_.factor(p.factor).is_free() && c.elem != (p.elem ^ 1u);
}

std::optional<std::size_t> WordEnumerator::first_from(std::size_t pos,
                                                      std::size_t start) const {
  for (std::size_t c = start; c < alphabet_.size(); ++c)
    if (pos == 0 || compatible(idx_[pos - 1], c)) return c;
  return std::nullopt;
}

bool WordEnumerator::start_length(std::size_t len) {
  len_ = len;
  idx_.assign(len, 0);
  for (std::size_t p = 0; p < len; ++p) {
    auto c = first_from(p, 0);
    if (!c) return false;
    idx_[p] = *c;
  }
  return true;
}

bool WordEnumerator::advance() {
  for (std::size_t i = len_; i-- > 0;) {
    auto c = first_from(i, idx_[i] + 1);
    if (!c) continue;
    idx_[i] = *c;
    bool filled = true;
    for (std::size_t p = i + 1; p < len_ && filled; ++p) {
      auto d = first_from(p, 0);
      if (d)
        idx_[p] = *d;
      else
        filled = false;
    }
    if (filled) return true;
  }
  return false;
}

std::optional<FreeWord> WordEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    start_length(0);
  } else if (!advance()) {
    bool found = false;
    for (std::size_t l = len_ + 1; l <= max_len_ && !found; ++l)
      found = count_words(fp_, l) > 0 && start_length(l);
    if (!found) {
      done_ = true;
      return std::nullopt;
    }
  }
  FreeWord w(fp_);
  for (auto i : idx_) w.push_back(alphabet_[i]);
  return w;
}

std::vector<FreeWord> enumerate_words(FreeProduct const& fp,
                                      std::size_t max_syllables,
                                      EnumerationBounds bounds) {
  WordEnumerator en(fp, max_syllables, bounds);
  std::vector<FreeWord> out;
  out.reserve(static_cast<std::size_t>(en.total()));
  while (auto w = en.next()) out.push_back(std::move(*w));
  return out;
}

// -- text syntax -------------------------------------------------------------

std::string to_string(FreeWord const& w) {
  if (w.empty()) return "e";
  std::string out;
  for (auto const& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += w.product().factor(s.factor).tag();
    out += ':';
    out += std::to_string(s.elem);
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, FreeProduct const& fp)
      : text_(text), fp_(fp) {}

  FreeWord parse() {
    FreeWord w = sequence();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const {
    std::ostringstream os;
    os << "column " << pos_ + 1 << ": " << what;
    raise(ErrorKind::ParseError, os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  FreeWord sequence() {
    FreeWord w(fp_);
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ',' || text_[pos_] == ']')
        return w;
      w = word_concat(w, item());
    }
  }

  FreeWord item() {
    if (text_[pos_] == '[') {
      ++pos_;
      FreeWord x = sequence();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ','");
      ++pos_;
      FreeWord y = sequence();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return commutator_word(x, y);
    }
    std::size_t const start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a syllable");
    std::string_view tag = text_.substr(start, pos_ - start);
    if (pos_ >= text_.size() || text_[pos_] != ':') {
      if (tag == "e") return FreeWord(fp_);
      fail("expected ':' after tag");
    }
    auto factor = fp_.find_tag(tag);
    if (!factor) {
      pos_ = start;
      fail("unknown factor tag '" + std::string(tag) + "'");
    }
    ++pos_;
    std::size_t const num_start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > 1'000'000) fail("element index too large");
      ++pos_;
    }
    if (pos_ == num_start) fail("expected an element index");
    auto const& fac = fp_.factor(*factor);
    std::uint64_t limit = fac.is_free() ? 2 * fac.rank() : fac.group().order();
    if (value >= limit) {
      pos_ = num_start;
      fail("element index out of range for factor " + fac.tag());
    }
    return FreeWord::letter(fp_, *factor, static_cast<Elem>(value));
  }

  std::string_view text_;
  FreeProduct const& fp_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeWord parse_word(std::string_view text, FreeProduct const& fp) {
  return WordParser(text, fp).parse();
}

}  // namespace semiab
