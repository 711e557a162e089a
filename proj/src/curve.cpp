#include "braidlab/curve.hpp"

#include <algorithm>
#include <numeric>

namespace braidlab {

BraidWord interval_twist_word(int strands, int lo, int hi) {
  if (lo < 1 || hi <= lo || hi > strands)
    throw IntervalError("interval twist needs 1 <= lo < hi <= strands");
  std::vector<Letter> letters;
  const int size = hi - lo + 1;
  letters.reserve(static_cast<size_t>(size) * (size - 1));
  for (int rep = 0; rep < size; ++rep)
    for (int i = lo; i < hi; ++i) letters.push_back(Letter{i, +1});
  return BraidWord(strands, std::move(letters));
}

Curve::Curve(int strands, int lo, int hi, BraidWord conjugator)
    : strands_(strands),
      lo_(lo),
      hi_(hi),
      conjugator_(std::move(conjugator)),
      twist_(BraidWord(strands)) {
  if (lo_ < 1 || hi_ <= lo_ || hi_ > strands_)
    throw IntervalError("curve interval out of range");
  if (hi_ - lo_ + 1 > strands_ - 1)
    throw IntervalError("curve must leave at least one puncture outside");
  if (conjugator_.strands() != strands_)
    throw StrandMismatchError("curve conjugator strand count differs");

  twist_ = compose(conjugator_, interval_twist_word(strands_, lo_, hi_),
                   invert(conjugator_));
  const Permutation move = puncture_action(conjugator_);
  interior_.reserve(enclosed());
  for (int p = lo_; p <= hi_; ++p) interior_.push_back(move[p - 1] + 1);
  std::sort(interior_.begin(), interior_.end());
}

Curve Curve::standard(int strands, int lo, int hi) {
  return Curve(strands, lo, hi, BraidWord(strands));
}

BraidWord Curve::half_twist() const {
  if (enclosed() != 2)
    throw CurveTypeError("half twist needs a curve enclosing exactly two punctures");
  return compose(conjugator_, BraidWord::generator(strands_, lo_), invert(conjugator_));
}

Curve pair_curve(int strands, int i, int j) {
  if (i < 1 || i >= j || j > strands)
    throw UsageError("pair curve needs 1 <= i < j <= strands");
  std::vector<Letter> conj;
  for (int k = j - 1; k > i; --k) conj.push_back(Letter{k, +1});
  return Curve(strands, i, i + 1, BraidWord(strands, std::move(conj)));
}

Curve apply_braid(const BraidWord& g, const Curve& c) {
  if (g.strands() != c.strands())
    throw StrandMismatchError("apply_braid: strand counts differ");
  return Curve(c.strands(), c.lo(), c.hi(), compose(g, c.conjugator()));
}

bool equals_curve(const Curve& a, const Curve& b) {
  if (a.strands() != b.strands())
    throw StrandMismatchError("equals_curve: strand counts differ");
  if (a.interior() != b.interior()) return false;
  return equals(a.twist(), b.twist());
}

bool twists_commute(const Curve& a, const Curve& b) {
  if (a.strands() != b.strands())
    throw StrandMismatchError("twists_commute: strand counts differ");
  return equals(compose(a.twist(), b.twist()), compose(b.twist(), a.twist()));
}

namespace {

// True when the sets overlap but neither contains the other. Disjoint
// curves in the disk bound nested or unlinked puncture sets, so crossing
// sets certify intersection; the converse needs the commutation test.
bool interiors_cross(const std::vector<int>& x, const std::vector<int>& y) {
  bool meet = false, x_extra = false, y_extra = false;
  for (int v : x)
    if (std::binary_search(y.begin(), y.end(), v)) meet = true;
    else x_extra = true;
  for (int v : y)
    if (!std::binary_search(x.begin(), x.end(), v)) y_extra = true;
  return meet && x_extra && y_extra;
}

}  // namespace

bool is_disjoint(const Curve& a, const Curve& b) {
  if (a.strands() != b.strands())
    throw StrandMismatchError("is_disjoint: strand counts differ");
  if (a.interior() == b.interior() && equals_curve(a, b)) return true;
  if (interiors_cross(a.interior(), b.interior())) return false;
  return twists_commute(a, b);
}

bool is_two_curve(const Curve& c) { return c.enclosed() == 2; }

bool is_adjacent(const Curve& a, const Curve& b) {
  if (a.strands() != b.strands())
    throw StrandMismatchError("is_adjacent: strand counts differ");
  if (!is_two_curve(a) || !is_two_curve(b))
    throw CurveTypeError("adjacency is defined for curves enclosing two punctures");
  if (equals_curve(a, b)) return false;
  if (is_disjoint(a, b)) return false;
  const BraidWord ha = a.half_twist(), hb = b.half_twist();
  return equals(compose(ha, hb, ha), compose(hb, ha, hb));
}

int sphere_type(const Curve& c) {
  const int m = c.enclosed();
  return std::min(m, c.strands() + 1 - m);
}

FareySlope farey_slope_d3(const Curve& c) {
  if (c.strands() != 3) throw UsageError("slopes are defined on the 3-strand disk");
  // Row-vector-free form: track the anchor column through the letter
  // matrices, leftmost letter applied last.
  long long m[2][2] = {{1, 0}, {0, 1}};
  for (const Letter& l : c.conjugator().letters()) {
    long long g[2][2];
    if (l.index == 1) {
      g[0][0] = 1; g[0][1] = 0; g[1][0] = -l.sign; g[1][1] = 1;
    } else {
      g[0][0] = 1; g[0][1] = l.sign; g[1][0] = 0; g[1][1] = 1;
    }
    long long next[2][2];
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col)
        next[r][col] = m[r][0] * g[0][col] + m[r][1] * g[1][col];
    m[0][0] = next[0][0]; m[0][1] = next[0][1];
    m[1][0] = next[1][0]; m[1][1] = next[1][1];
  }
  const long long ap = (c.lo() == 1) ? 0 : 1;
  const long long aq = (c.lo() == 1) ? 1 : 0;
  long long p = m[0][0] * ap + m[0][1] * aq;
  long long q = m[1][0] * ap + m[1][1] * aq;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  const long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return FareySlope{p, q};
}

std::string curve_to_text(const Curve& c) {
  return std::to_string(c.strands()) + ";" + std::to_string(c.lo()) + "," +
         std::to_string(c.hi()) + ";" + c.conjugator().text();
}

Curve curve_from_text(std::string_view text) {
  const size_t first = text.find(';');
  const size_t second = (first == std::string_view::npos)
                            ? std::string_view::npos
                            : text.find(';', first + 1);
  if (second == std::string_view::npos) throw ParseError("curve text needs two ';'");
  std::string_view head = text.substr(0, first);
  std::string_view mid = text.substr(first + 1, second - first - 1);
  std::string_view tail = text.substr(second + 1);
  const size_t comma = mid.find(',');
  if (comma == std::string_view::npos) throw ParseError("curve interval needs 'lo,hi'");
  try {
    int strands = std::stoi(std::string(head));
    int lo = std::stoi(std::string(mid.substr(0, comma)));
    int hi = std::stoi(std::string(mid.substr(comma + 1)));
    return Curve(strands, lo, hi, BraidWord::from_text(strands, tail));
  } catch (const std::invalid_argument&) {
    throw ParseError("curve text has non-numeric fields");
  } catch (const std::out_of_range&) {
    throw ParseError("curve text has out-of-range fields");
  }
}

}  // namespace braidlab
