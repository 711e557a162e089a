#pragma once

#include <atomic>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidlab/errors.hpp"

namespace braidlab {

// Permutation on {0, ..., n-1}, stored as an image table.
// Composition is diagrammatic: (a.then(b))[x] = b[a[x]].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);

  // Swaps slots `slot` and `slot+1` (0-based).
  static Permutation transposition(int n, int slot);
  // The order-reversing permutation x -> n-1-x.
  static Permutation half_twist(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& table() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  int num_inversions() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// One crossing: generator index is 1-based, sign is +1 or -1.
struct Letter {
  int index;
  int sign;
  bool operator==(const Letter&) const = default;
};

class BraidWord;

// Garside classical form: half_twist^inf followed by a left-weighted
// sequence of permutation-braid factors, none trivial, none the half twist.
class GarsideNormalForm {
 public:
  GarsideNormalForm(int strands, int inf, std::vector<Permutation> factors);

  int strands() const { return strands_; }
  int inf() const { return inf_; }
  int sup() const { return inf_ + static_cast<int>(factors_.size()); }
  const std::vector<Permutation>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  bool operator==(const GarsideNormalForm&) const = default;

  // Unique readable key, e.g. "D^-1[3,1,2]". Safe for use as a map key.
  std::string render() const;

  // Canonical word spelling this element.
  BraidWord to_word() const;

 private:
  int strands_;
  int inf_;
  std::vector<Permutation> factors_;
};

// A word in the braid group on `strands` strands. Words multiply left to
// right: in compose(a, b) the letters of `a` come first.
class BraidWord {
 public:
  BraidWord() : strands_(2) {}
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);

  BraidWord(const BraidWord& other);
  BraidWord(BraidWord&& other) noexcept;
  BraidWord& operator=(const BraidWord& other);
  BraidWord& operator=(BraidWord&& other) noexcept;
  ~BraidWord();

  static BraidWord generator(int strands, int index, int sign = +1);

  // Whitespace-separated signed generator indices, e.g. "1 2 -1".
  static BraidWord from_text(int strands, std::string_view text);
  std::string text() const;

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }

 private:
  void validate() const;

  int strands_;
  std::vector<Letter> letters_;
  // Filled once on demand; compare-and-swap keeps concurrent fills safe.
  mutable std::atomic<const GarsideNormalForm*> nf_{nullptr};

  friend const GarsideNormalForm& normal_form(const BraidWord& w);
};

// Letter-by-letter equality, no group theory involved.
bool same_letters(const BraidWord& a, const BraidWord& b);

BraidWord compose(const BraidWord& a, const BraidWord& b);

template <typename... Rest>
BraidWord compose(const BraidWord& a, const BraidWord& b, const BraidWord& c,
                  const Rest&... rest) {
  return compose(compose(a, b), c, rest...);
}

BraidWord invert(const BraidWord& w);
BraidWord power(const BraidWord& w, int exponent);

// The automorphism flipping every crossing's sign in place.
BraidWord mirror(const BraidWord& w);

// Positive word spelling the Garside half twist.
BraidWord half_twist_word(int strands);

// Generator of the center: (s_1 ... s_{n-1})^n, equal to half_twist^2.
BraidWord center_generator(int strands);

// Standard pure-braid generator: strand j loops once around strand i (i < j).
BraidWord pure_generator(int strands, int i, int j);

bool is_pure(const BraidWord& w);

// Underlying permutation of a word: image table of strand start slots.
Permutation word_permutation(const BraidWord& w);
int exponent_sum(const BraidWord& w);
std::pair<Permutation, int> permutation_and_exponent(const BraidWord& w);

// How a word moves puncture positions: the set of punctures enclosed by a
// curve transforms by this permutation (inverse of word_permutation).
Permutation puncture_action(const BraidWord& w);

// Cached; the returned reference lives as long as `w`.
const GarsideNormalForm& normal_form(const BraidWord& w);

// Group equality. Throws StrandMismatchError when strand counts differ.
bool equals(const BraidWord& a, const BraidWord& b);

}  // namespace braidlab
