#include "braidlab/braid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace braidlab {

Permutation::Permutation(int n) : images_(n) {
  for (int x = 0; x < n; ++x) images_[x] = x;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v]) throw UsageError("not a permutation table");
    seen[v] = 1;
  }
}

Permutation Permutation::transposition(int n, int slot) {
  if (slot < 0 || slot + 1 >= n) throw UsageError("transposition slot out of range");
  Permutation p(n);
  std::swap(p.images_[slot], p.images_[slot + 1]);
  return p;
}

Permutation Permutation::half_twist(int n) {
  Permutation p(n);
  std::reverse(p.images_.begin(), p.images_.end());
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (int x = 0; x < size(); ++x) out.images_[x] = next.images_[images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (int x = 0; x < size(); ++x) out.images_[images_[x]] = x;
  return out;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

int Permutation::num_inversions() const {
  int count = 0;
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (images_[x] > images_[y]) ++count;
  return count;
}

namespace {

// Raw tables used inside the normal form computation.
using Table = std::vector<int>;

Table identity_table(int n) {
  Table t(n);
  for (int x = 0; x < n; ++x) t[x] = x;
  return t;
}

Table reversal_table(int n) {
  Table t(n);
  for (int x = 0; x < n; ++x) t[x] = n - 1 - x;
  return t;
}

bool is_identity_table(const Table& t) {
  for (int x = 0; x < static_cast<int>(t.size()); ++x)
    if (t[x] != x) return false;
  return true;
}

Table inverse_table(const Table& t) {
  Table inv(t.size());
  for (int x = 0; x < static_cast<int>(t.size()); ++x) inv[t[x]] = x;
  return inv;
}

// Conjugation by the half twist: tau(p) = w0 . p . w0.
Table tau_table(const Table& t) {
  const int n = static_cast<int>(t.size());
  Table out(n);
  for (int x = 0; x < n; ++x) out[x] = n - 1 - t[n - 1 - x];
  return out;
}

// Moves crossings left until start(b) is contained in finish(a).
// Slot i is in start(b) iff b[i] > b[i+1]; in finish(a) iff the values
// i and i+1 appear inverted in a.
bool make_left_weighted(Table& a, Table& b) {
  const int n = static_cast<int>(a.size());
  Table a_inv = inverse_table(a);
  bool modified = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (b[i] > b[i + 1] && a_inv[i] < a_inv[i + 1]) {
        std::swap(a[a_inv[i]], a[a_inv[i + 1]]);
        std::swap(a_inv[i], a_inv[i + 1]);
        std::swap(b[i], b[i + 1]);
        moved = modified = true;
      }
    }
  }
  return modified;
}

GarsideNormalForm compute_normal_form(int strands, const std::vector<Letter>& letters) {
  const int n = strands;
  if (n < 2 || letters.empty()) return GarsideNormalForm(n, 0, {});

  const Table w0 = reversal_table(n);

  // Each negative letter contributes one leading negative half twist; the
  // factors it jumps over on its way to the front get conjugated by tau.
  std::vector<int> suffix_negatives(letters.size() + 1, 0);
  for (int j = static_cast<int>(letters.size()) - 1; j >= 0; --j) {
    suffix_negatives[j] = suffix_negatives[j + 1] + (letters[j].sign < 0 ? 1 : 0);
  }
  int inf = -suffix_negatives[0];

  std::vector<Table> factors;
  factors.reserve(letters.size());
  for (size_t j = 0; j < letters.size(); ++j) {
    const int slot = letters[j].index - 1;
    Table t;
    if (letters[j].sign > 0) {
      t = identity_table(n);
      std::swap(t[slot], t[slot + 1]);
    } else {
      // half_twist * s_slot^{-1}, as a permutation braid.
      t.resize(n);
      for (int x = 0; x < n; ++x) {
        int v = w0[x];
        if (v == slot) v = slot + 1;
        else if (v == slot + 1) v = slot;
        t[x] = v;
      }
    }
    if (suffix_negatives[j + 1] % 2 == 1) t = tau_table(t);
    factors.push_back(std::move(t));
  }

  // Sweep until globally left-weighted, dropping factors that empty out.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
      if (make_left_weighted(factors[i], factors[i + 1])) changed = true;
    }
    size_t kept = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (!is_identity_table(factors[i])) {
        if (kept != i) factors[kept] = std::move(factors[i]);
        ++kept;
      }
    }
    factors.resize(kept);
  }

  size_t first = 0;
  while (first < factors.size() && factors[first] == w0) {
    ++inf;
    ++first;
  }

  std::vector<Permutation> out;
  out.reserve(factors.size() - first);
  for (size_t i = first; i < factors.size(); ++i) {
    out.emplace_back(std::move(factors[i]));
  }
  return GarsideNormalForm(n, inf, std::move(out));
}

}  // namespace

GarsideNormalForm::GarsideNormalForm(int strands, int inf, std::vector<Permutation> factors)
    : strands_(strands), inf_(inf), factors_(std::move(factors)) {
  for (const Permutation& f : factors_) {
    if (f.size() != strands_) throw UsageError("factor size does not match strand count");
  }
}

std::string GarsideNormalForm::render() const {
  std::ostringstream os;
  os << "D^" << inf_;
  for (const Permutation& f : factors_) {
    os << '[';
    for (int x = 0; x < f.size(); ++x) {
      if (x) os << ',';
      os << f[x] + 1;
    }
    os << ']';
  }
  return os.str();
}

BraidWord GarsideNormalForm::to_word() const {
  std::vector<Letter> letters;
  const BraidWord delta = half_twist_word(strands_);
  if (inf_ >= 0) {
    for (int k = 0; k < inf_; ++k)
      for (const Letter& l : delta.letters()) letters.push_back(l);
  } else {
    const BraidWord delta_inv = invert(delta);
    for (int k = 0; k < -inf_; ++k)
      for (const Letter& l : delta_inv.letters()) letters.push_back(l);
  }
  for (const Permutation& f : factors_) {
    // Peel the smallest descent each time; gives one canonical spelling.
    std::vector<int> t = f.table();
    const int n = static_cast<int>(t.size());
    while (true) {
      int i = 0;
      while (i + 1 < n && t[i] < t[i + 1]) ++i;
      if (i + 1 >= n) break;
      letters.push_back(Letter{i + 1, +1});
      std::swap(t[i], t[i + 1]);
    }
  }
  return BraidWord(strands_, std::move(letters));
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands_ < 1) throw UsageError("strand count must be at least 1");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw UsageError("strand count must be at least 1");
  validate();
}

void BraidWord::validate() const {
  for (const Letter& l : letters_) {
    if (l.index < 1 || l.index >= strands_)
      throw UsageError("generator index out of range");
    if (l.sign != 1 && l.sign != -1) throw UsageError("letter sign must be +1 or -1");
  }
}

BraidWord::BraidWord(const BraidWord& other)
    : strands_(other.strands_), letters_(other.letters_) {}

BraidWord::BraidWord(BraidWord&& other) noexcept
    : strands_(other.strands_), letters_(std::move(other.letters_)) {
  nf_.store(other.nf_.exchange(nullptr, std::memory_order_acq_rel),
            std::memory_order_release);
}

BraidWord& BraidWord::operator=(const BraidWord& other) {
  if (this != &other) {
    strands_ = other.strands_;
    letters_ = other.letters_;
    delete nf_.exchange(nullptr, std::memory_order_acq_rel);
  }
  return *this;
}

BraidWord& BraidWord::operator=(BraidWord&& other) noexcept {
  if (this != &other) {
    strands_ = other.strands_;
    letters_ = std::move(other.letters_);
    delete nf_.exchange(other.nf_.exchange(nullptr, std::memory_order_acq_rel),
                        std::memory_order_acq_rel);
  }
  return *this;
}

BraidWord::~BraidWord() { delete nf_.load(std::memory_order_acquire); }

BraidWord BraidWord::generator(int strands, int index, int sign) {
  return BraidWord(strands, {Letter{index, sign}});
}

BraidWord BraidWord::from_text(int strands, std::string_view text) {
  std::vector<Letter> letters;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end || value == 0)
      throw ParseError("bad word token: " + std::string(text.substr(pos, end - pos)));
    if (std::abs(value) >= strands)
      throw ParseError("generator index out of range: " + std::to_string(value));
    letters.push_back(Letter{std::abs(value), value > 0 ? +1 : -1});
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

std::string BraidWord::text() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

bool same_letters(const BraidWord& a, const BraidWord& b) {
  return a.strands() == b.strands() && a.letters() == b.letters();
}

namespace {

void push_letter(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw StrandMismatchError("compose: strand counts differ");
  std::vector<Letter> out;
  out.reserve(a.letters().size() + b.letters().size());
  for (const Letter& l : a.letters()) push_letter(out, l);
  for (const Letter& l : b.letters()) push_letter(out, l);
  return BraidWord(a.strands(), std::move(out));
}

BraidWord invert(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(Letter{it->index, -it->sign});
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord power(const BraidWord& w, int exponent) {
  if (exponent < 0) return power(invert(w), -exponent);
  BraidWord out(w.strands());
  for (int k = 0; k < exponent; ++k) out = compose(out, w);
  return out;
}

BraidWord mirror(const BraidWord& w) {
  std::vector<Letter> out = w.letters();
  for (Letter& l : out) l.sign = -l.sign;
  return BraidWord(w.strands(), std::move(out));
}

BraidWord half_twist_word(int strands) {
  std::vector<Letter> letters;
  for (int run = 1; run < strands; ++run)
    for (int i = run; i >= 1; --i) letters.push_back(Letter{i, +1});
  return BraidWord(strands, std::move(letters));
}

BraidWord center_generator(int strands) {
  std::vector<Letter> letters;
  for (int k = 0; k < strands; ++k)
    for (int i = 1; i < strands; ++i) letters.push_back(Letter{i, +1});
  return BraidWord(strands, std::move(letters));
}

BraidWord pure_generator(int strands, int i, int j) {
  if (i < 1 || j <= i || j > strands)
    throw UsageError("pure generator needs 1 <= i < j <= strands");
  std::vector<Letter> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(Letter{k, +1});
  letters.push_back(Letter{i, +1});
  letters.push_back(Letter{i, +1});
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(Letter{k, -1});
  return BraidWord(strands, std::move(letters));
}

bool is_pure(const BraidWord& w) { return word_permutation(w).is_identity(); }

Permutation word_permutation(const BraidWord& w) {
  std::vector<int> t(w.strands());
  for (int x = 0; x < w.strands(); ++x) t[x] = x;
  for (const Letter& l : w.letters()) {
    // Post-composing with a transposition swaps the two values.
    for (int x = 0; x < w.strands(); ++x) {
      if (t[x] == l.index - 1) t[x] = l.index;
      else if (t[x] == l.index) t[x] = l.index - 1;
    }
  }
  return Permutation(std::move(t));
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (const Letter& l : w.letters()) sum += l.sign;
  return sum;
}

std::pair<Permutation, int> permutation_and_exponent(const BraidWord& w) {
  return {word_permutation(w), exponent_sum(w)};
}

Permutation puncture_action(const BraidWord& w) {
  return word_permutation(w).inverse();
}

const GarsideNormalForm& normal_form(const BraidWord& w) {
  const GarsideNormalForm* current = w.nf_.load(std::memory_order_acquire);
  if (current) return *current;
  auto* fresh = new GarsideNormalForm(compute_normal_form(w.strands_, w.letters_));
  const GarsideNormalForm* expected = nullptr;
  if (w.nf_.compare_exchange_strong(expected, fresh, std::memory_order_acq_rel,
                                    std::memory_order_acquire)) {
    return *fresh;
  }
  delete fresh;
  return *expected;
}

bool equals(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw StrandMismatchError("equals: strand counts differ");
  if (exponent_sum(a) != exponent_sum(b)) return false;
  if (word_permutation(a) != word_permutation(b)) return false;
  return normal_form(a) == normal_form(b);
}

}  // namespace braidlab
