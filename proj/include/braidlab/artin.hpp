#pragma once

#include <vector>

#include "braidlab/braid.hpp"

namespace braidlab {

// Endomorphism of a free group. Words are vectors of nonzero signed
// generator indices (1-based magnitude) and are kept freely reduced.
class FreeGroupEndo {
 public:
  static FreeGroupEndo identity(int rank);
  static FreeGroupEndo from_images(std::vector<std::vector<int>> images);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& image(int gen) const { return images_[gen - 1]; }

  // Substitutes this endomorphism's images into `word`, reducing as it goes.
  std::vector<int> apply(const std::vector<int>& word) const;

  // Composite mapping x first through *this, then through `next`.
  FreeGroupEndo then(const FreeGroupEndo& next) const;

  bool operator==(const FreeGroupEndo&) const = default;

 private:
  std::vector<std::vector<int>> images_;
};

// Appends a letter with free cancellation against the current tail.
void push_reduced(std::vector<int>& word, int letter);

// The braid group's faithful action on the free group of rank `strands`.
FreeGroupEndo artin_endo(const BraidWord& w);

// Image of a single free generator, without building the whole endomorphism.
std::vector<int> artin_image(const BraidWord& w, int gen);

// Equality through the free-group action; independent of normal forms.
bool artin_equal(const BraidWord& a, const BraidWord& b);

}  // namespace braidlab
