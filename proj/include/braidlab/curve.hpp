#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "braidlab/braid.hpp"

namespace braidlab {

// Full twist about the round curve enclosing punctures lo..hi:
// (s_lo ... s_{hi-1})^(hi-lo+1). With lo=1, hi=strands this is the center.
BraidWord interval_twist_word(int strands, int lo, int hi);

// An isotopy class of essential simple closed curves in the punctured disk,
// presented as a braid image of a round curve. Two presentations denote the
// same curve exactly when their twists agree as group elements.
class Curve {
 public:
  Curve(int strands, int lo, int hi, BraidWord conjugator);
  static Curve standard(int strands, int lo, int hi);

  int strands() const { return strands_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int enclosed() const { return hi_ - lo_ + 1; }
  const BraidWord& conjugator() const { return conjugator_; }

  // Punctures currently inside the curve; sorted, 1-based.
  const std::vector<int>& interior() const { return interior_; }

  // Word for the full twist about this curve.
  const BraidWord& twist() const { return twist_; }

  // Word for the half twist swapping the two enclosed punctures.
  // Throws CurveTypeError unless the curve encloses exactly two.
  BraidWord half_twist() const;

  // Canonical string; equal curves and only they share it.
  std::string key() const { return normal_form(twist_).render(); }

 private:
  int strands_, lo_, hi_;
  BraidWord conjugator_;
  BraidWord twist_;
  std::vector<int> interior_;
};

// Curve around punctures i and j only, threaded in front of the punctures
// between them; its twist equals pure_generator(strands, i, j).
Curve pair_curve(int strands, int i, int j);

Curve apply_braid(const BraidWord& g, const Curve& c);

bool equals_curve(const Curve& a, const Curve& b);

// Ground-truth disjointness: twists commute exactly for disjoint curves.
bool twists_commute(const Curve& a, const Curve& b);

// Same answer as twists_commute, with short-circuits for equal curves and
// for interiors that overlap without nesting (which forces crossing).
bool is_disjoint(const Curve& a, const Curve& b);

// Two distinct two-curves intersecting twice; detected by the braid
// relation between their half twists. Throws CurveTypeError on other types.
bool is_adjacent(const Curve& a, const Curve& b);

bool is_two_curve(const Curve& c);

// Curves split the s+1 punctures of the sphere closure into two sides;
// the type is the smaller side's count.
int sphere_type(const Curve& c);

// Slope of a curve in the 3-strand disk, as a reduced fraction with q >= 0.
struct FareySlope {
  long long p, q;
  bool operator==(const FareySlope&) const = default;
  auto operator<=>(const FareySlope&) const = default;
};

FareySlope farey_slope_d3(const Curve& c);

// "strands;lo,hi;conjugator-word" with the word possibly empty.
std::string curve_to_text(const Curve& c);
Curve curve_from_text(std::string_view text);

}  // namespace braidlab
