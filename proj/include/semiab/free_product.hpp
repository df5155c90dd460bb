#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semiab/group.hpp"

namespace semiab {

/// One summand of a free product: either a finite group or a free group of
/// finite rank. Letters of a free factor encode generator k as 2k and its
/// inverse as 2k + 1.
class Factor {
 public:
  static Factor finite(FiniteGroup g, std::string tag);
  static Factor free(std::size_t rank, std::string tag);

  bool is_free() const noexcept { return !group_.has_value(); }
  FiniteGroup const& group() const;  // throws SignatureMismatch if free
  std::size_t rank() const noexcept { return rank_; }
  std::string const& tag() const noexcept { return tag_; }
  /// Number of distinct non-identity letters.
  std::size_t letter_count() const noexcept;

  friend bool operator==(Factor const& a, Factor const& b);

 private:
  std::optional<FiniteGroup> group_;
  std::size_t rank_ = 0;
  std::string tag_;
};

using FactorMask = std::uint32_t;

/// The coproduct X_1 + ... + X_n. Cheap to copy (shared factor list).
class FreeProduct {
 public:
  /// Finite factors with tags "A","G" for two factors, "X1".."Xn" otherwise.
  static FreeProduct of(std::vector<FiniteGroup> factors,
                        std::vector<std::string> tags = {});
  static FreeProduct with_factors(std::vector<Factor> factors);

  std::size_t size() const noexcept { return f_->size(); }
  Factor const& factor(std::size_t i) const { return (*f_)[i]; }
  FactorMask all_mask() const noexcept {
    return static_cast<FactorMask>((std::uint64_t{1} << size()) - 1);
  }
  std::optional<std::size_t> find_tag(std::string_view tag) const;

  bool same_as(FreeProduct const& o) const noexcept { return f_ == o.f_; }
  friend bool operator==(FreeProduct const& a, FreeProduct const& b);

 private:
  std::shared_ptr<const std::vector<Factor>> f_;
};

struct Syllable {
  std::uint16_t factor = 0;
  Elem elem = 0;
  friend auto operator<=>(Syllable const&, Syllable const&) = default;
};

/// A word of a free product in normal form: no identity syllables, adjacent
/// syllables from distinct finite factors, and no adjacent inverse letters
/// in a free factor. The empty word is the identity.
class FreeWord {
 public:
  explicit FreeWord(FreeProduct fp) : fp_(std::move(fp)) {}
  static FreeWord letter(FreeProduct fp, std::size_t factor, Elem elem);
  static FreeWord from_syllables(FreeProduct fp,
                                 std::vector<Syllable> const& syllables);

  FreeProduct const& product() const noexcept { return fp_; }
  std::vector<Syllable> const& syllables() const noexcept { return s_; }
  std::size_t length() const noexcept { return s_.size(); }
  bool empty() const noexcept { return s_.empty(); }

  /// Right-multiplies by one letter, merging or cancelling at the boundary.
  void push_back(Syllable s);
  FreeWord inverse() const;

  friend bool operator==(FreeWord const& a, FreeWord const& b) {
    return a.s_ == b.s_ && a.fp_ == b.fp_;
  }
  friend bool operator<(FreeWord const& a, FreeWord const& b);

 private:
  FreeProduct fp_;
  std::vector<Syllable> s_;
};

/// Throws FactorMismatch.
FreeWord word_concat(FreeWord const& u, FreeWord const& v);
FreeWord operator*(FreeWord const& u, FreeWord const& v);
/// x y x^-1 y^-1
FreeWord commutator_word(FreeWord const& x, FreeWord const& y);

/// Evaluates in a common codomain with one hom per (finite) factor.
/// Throws SignatureMismatch on free factors or mismatched domains.
Elem eval_word(FreeWord const& w, std::span<const GroupHom> homs);
/// Left-to-right product with a caller-supplied letter interpretation.
Elem eval_word(FreeWord const& w, FiniteGroup const& codomain,
               std::function<Elem(Syllable)> const& letter_value);

/// Deletes the letters of every factor outside `keep` and renormalizes.
/// This is the retraction onto the sub-coproduct on `keep`.
FreeWord project(FreeWord const& w, FactorMask keep);

/// The canonical map A+G → A×G for a two-factor word (A = factor 0).
std::pair<Elem, Elem> b_map(FreeWord const& w);
/// Kernel of the retraction A+G → G.
bool in_TG(FreeWord const& w);
/// Kernel of A+G → A×G, i.e. the cross-effect (A|G).
bool in_cross_effect(FreeWord const& w);

/// Membership in the n-fold cross-effect (X_1|...|X_n), decided by the
/// recursion cr_n = cr_2(cr_{n-1}) with X_1 + X_2 merged at each level.
/// Throws TooFewFactors for n < 2.
bool in_multi_cross_effect(FreeWord const& w);
/// The same test applied to the retraction of `w` onto the listed factors,
/// viewed in the coproduct of those factors alone.
bool in_multi_cross_effect(FreeWord const& w,
                           std::vector<std::size_t> const& factors);

/// The factor subsets whose retractions the recursion above requires to be
/// trivial, reduced to the inclusion-maximal ones.
std::vector<FactorMask> cross_effect_retractions(std::size_t n);

/// Re-expresses `w` in the coproduct of the listed factors (other letters
/// dropped).
FreeWord restrict_to(FreeWord const& w, std::vector<std::size_t> const& factors);

// -- commutator normal form ------------------------------------------------

/// One generator [g, a]^z of (A|G), z = ±1.
struct CommutatorTerm {
  Elem g = 0;
  Elem a = 0;
  int z = 1;
  friend bool operator==(CommutatorTerm const&, CommutatorTerm const&) = default;
};

/// w = (∏ [g_i, a_i]^{z_i}) · a · g, with the product freely reduced.
struct CommutatorDecomposition {
  std::vector<CommutatorTerm> terms;
  Elem residual_a = 0;
  Elem residual_g = 0;
  friend bool operator==(CommutatorDecomposition const&,
                         CommutatorDecomposition const&) = default;
};

/// Decomposes a word of A+G (factor 0 = A, factor 1 = G, both finite).
CommutatorDecomposition commutator_decomposition(FreeWord const& w);
/// Multiplies the decomposition back out inside `fp`.
FreeWord reassemble(CommutatorDecomposition const& d, FreeProduct const& fp);
/// The word [g, a] = g a g⁻¹ a⁻¹ in A+G.
FreeWord generator_word(FreeProduct const& fp, Elem g, Elem a);

// -- enumeration -----------------------------------------------------------

struct EnumerationBounds {
  std::size_t max_syllables = 8;
  std::size_t max_words = 1'000'000;
};

/// Number of normal-form words with exactly `length` syllables.
std::uint64_t count_words(FreeProduct const& fp, std::size_t length);

/// Streams every normal-form word with at most `max_syllables` syllables,
/// each once, in length-lexicographic order. Single consumer.
class WordEnumerator {
 public:
  /// Throws BoundExceeded if `max_syllables` or the total word count
  /// exceeds `bounds`.
  WordEnumerator(FreeProduct fp, std::size_t max_syllables,
                 EnumerationBounds bounds = {});

  std::optional<FreeWord> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  bool compatible(std::size_t prev, std::size_t cur) const;
  std::optional<std::size_t> first_from(std::size_t pos, std::size_t start) const;
  bool start_length(std::size_t len);
  bool advance();

  FreeProduct fp_;
  std::size_t max_len_;
  std::uint64_t total_ = 0;
  std::vector<Syllable> alphabet_;
  std::size_t len_ = 0;
  std::vector<std::size_t> idx_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<FreeWord> enumerate_words(FreeProduct const& fp,
                                      std::size_t max_syllables,
                                      EnumerationBounds bounds = {});

// -- text syntax -----------------------------------------------------------

/// `A:3 G:1 A:2`; identity prints as `e`.
std::string to_string(FreeWord const& w);
/// Accepts syllables `TAG:index`, `e`, and commutator sugar `[x,y]` with
/// nested sub-words. Throws ParseError naming the offending column.
FreeWord parse_word(std::string_view text, FreeProduct const& fp);

}  // namespace semiab
