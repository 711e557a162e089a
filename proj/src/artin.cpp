#include "braidlab/artin.hpp"

#include <cstdlib>

namespace braidlab {

void push_reduced(std::vector<int>& word, int letter) {
  if (!word.empty() && word.back() == -letter) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
  FreeGroupEndo e;
  e.images_.resize(rank);
  for (int g = 1; g <= rank; ++g) e.images_[g - 1] = {g};
  return e;
}

FreeGroupEndo FreeGroupEndo::from_images(std::vector<std::vector<int>> images) {
  FreeGroupEndo e;
  e.images_ = std::move(images);
  for (const std::vector<int>& im : e.images_) {
    for (int v : im) {
      if (v == 0 || std::abs(v) > e.rank())
        throw UsageError("image letter out of range");
    }
  }
  return e;
}

std::vector<int> FreeGroupEndo::apply(const std::vector<int>& word) const {
  std::vector<int> out;
  for (int letter : word) {
    const std::vector<int>& im = images_[std::abs(letter) - 1];
    if (letter > 0) {
      for (int v : im) push_reduced(out, v);
    } else {
      for (auto it = im.rbegin(); it != im.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return out;
}

FreeGroupEndo FreeGroupEndo::then(const FreeGroupEndo& next) const {
  FreeGroupEndo out;
  out.images_.resize(images_.size());
  for (size_t g = 0; g < images_.size(); ++g) out.images_[g] = next.apply(images_[g]);
  return out;
}

namespace {

// One crossing rewrites a word in place. Positive s_i:
//   x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i.
// Negative:
//   x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}.
void apply_letter(const Letter& l, std::vector<int>& word, std::vector<int>& scratch) {
  const int a = l.index;      // 1-based generator pair (a, a+1)
  const int b = l.index + 1;
  scratch.clear();
  if (l.sign > 0) {
    for (int v : word) {
      if (v == a) {
        push_reduced(scratch, a);
        push_reduced(scratch, b);
        push_reduced(scratch, -a);
      } else if (v == -a) {
        push_reduced(scratch, a);
        push_reduced(scratch, -b);
        push_reduced(scratch, -a);
      } else if (v == b) {
        push_reduced(scratch, a);
      } else if (v == -b) {
        push_reduced(scratch, -a);
      } else {
        push_reduced(scratch, v);
      }
    }
  } else {
    for (int v : word) {
      if (v == a) {
        push_reduced(scratch, b);
      } else if (v == -a) {
        push_reduced(scratch, -b);
      } else if (v == b) {
        push_reduced(scratch, -b);
        push_reduced(scratch, a);
        push_reduced(scratch, b);
      } else if (v == -b) {
        push_reduced(scratch, -b);
        push_reduced(scratch, -a);
        push_reduced(scratch, b);
      } else {
        push_reduced(scratch, v);
      }
    }
  }
  word.swap(scratch);
}

}  // namespace

FreeGroupEndo artin_endo(const BraidWord& w) {
  std::vector<std::vector<int>> images;
  images.reserve(w.strands());
  for (int g = 1; g <= w.strands(); ++g) images.push_back(artin_image(w, g));
  return FreeGroupEndo::from_images(std::move(images));
}

std::vector<int> artin_image(const BraidWord& w, int gen) {
  if (gen < 1 || gen > w.strands()) throw UsageError("generator out of range");
  std::vector<int> word = {gen};
  std::vector<int> scratch;
  for (const Letter& l : w.letters()) apply_letter(l, word, scratch);
  return word;
}

bool artin_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw StrandMismatchError("artin_equal: strand counts differ");
  for (int g = 1; g <= a.strands(); ++g) {
    if (artin_image(a, g) != artin_image(b, g)) return false;
  }
  return true;
}

}  // namespace braidlab
