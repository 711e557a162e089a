#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "braidlab/curve.hpp"
#include "test_util.hpp"

using namespace braidlab;
using testutil::random_word;

namespace {

// Distinct curves reachable from the round ones by short conjugators.
std::vector<Curve> d3_sample(int max_len) {
  std::vector<Curve> out;
  std::map<std::string, int> seen;
  std::vector<std::vector<int>> stack = {{}};
  std::vector<std::vector<int>> words;
  for (int len = 0; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : stack) {
      words.push_back(w);
      if (len == max_len) continue;
      for (int l : {1, -1, 2, -2}) {
        auto ext = w;
        ext.push_back(l);
        next.push_back(std::move(ext));
      }
    }
    stack = std::move(next);
  }
  for (const auto& w : words) {
    std::vector<Letter> letters;
    for (int l : w) letters.push_back(Letter{std::abs(l), l > 0 ? +1 : -1});
    BraidWord conj(3, letters);
    for (int lo : {1, 2}) {
      Curve c(3, lo, lo + 1, conj);
      if (seen.emplace(c.key(), 1).second) out.push_back(c);
    }
  }
  return out;
}

long long cross_det(const FareySlope& a, const FareySlope& b) {
  return a.p * b.q - b.p * a.q;
}

}  // namespace

TEST_CASE("curve construction and validation") {
  Curve c = Curve::standard(4, 2, 3);
  CHECK(c.interior() == std::vector<int>{2, 3});
  CHECK(c.enclosed() == 2);
  CHECK(c.twist().text() == "2 2");
  CHECK(c.half_twist().text() == "2");
  CHECK_THROWS_AS(Curve::standard(4, 2, 2), IntervalError);
  CHECK_THROWS_AS(Curve::standard(4, 1, 4), IntervalError);
  CHECK_THROWS_AS(Curve::standard(4, 0, 2), IntervalError);
  CHECK_THROWS_AS(Curve(4, 1, 2, BraidWord(3)), StrandMismatchError);
  CHECK_THROWS_AS(Curve::standard(4, 1, 3).half_twist(), CurveTypeError);
  CHECK(interval_twist_word(3, 1, 3).text() == "1 2 1 2 1 2");
}

TEST_CASE("braids move curve interiors") {
  Curve base = Curve::standard(3, 1, 2);
  Curve moved = apply_braid(BraidWord::from_text(3, "1 2"), base);
  CHECK(moved.interior() == std::vector<int>{2, 3});

  // Swapping the two enclosed punctures keeps the curve.
  Curve same = apply_braid(BraidWord::from_text(3, "1"), base);
  CHECK(equals_curve(same, base));
  CHECK(same.key() == base.key());

  Curve other = apply_braid(BraidWord::from_text(3, "2"), base);
  CHECK_FALSE(equals_curve(other, base));
  CHECK(other.key() != base.key());
}

TEST_CASE("curve action composes and transports twists") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int strands = std::uniform_int_distribution<int>(3, 6)(rng);
    int lo = std::uniform_int_distribution<int>(1, strands - 1)(rng);
    int max_hi = std::min(strands, lo + strands - 2);
    int hi = std::uniform_int_distribution<int>(lo + 1, max_hi)(rng);
    Curve c(strands, lo, hi, random_word(rng, strands, 5));
    BraidWord g = random_word(rng, strands, 5);
    BraidWord h = random_word(rng, strands, 5);

    CHECK(equals_curve(apply_braid(compose(g, h), c), apply_braid(g, apply_braid(h, c))));
    CHECK(equals(apply_braid(g, c).twist(), compose(g, c.twist(), invert(g))));
  }
}

TEST_CASE("disjointness via interiors and commutation") {
  CHECK(is_disjoint(Curve::standard(4, 1, 2), Curve::standard(4, 1, 3)));
  CHECK(is_disjoint(Curve::standard(4, 1, 2), Curve::standard(4, 3, 4)));
  CHECK_FALSE(is_disjoint(Curve::standard(4, 1, 2), Curve::standard(4, 2, 3)));
  CHECK(is_disjoint(Curve::standard(4, 1, 2), Curve::standard(4, 1, 2)));

  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    int strands = std::uniform_int_distribution<int>(3, 5)(rng);
    auto pick = [&]() {
      int lo = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      int hi = std::uniform_int_distribution<int>(lo + 1, std::min(strands, lo + strands - 2))(rng);
      return Curve(strands, lo, hi, random_word(rng, strands, 4));
    };
    Curve a = pick(), b = pick();
    CHECK(is_disjoint(a, b) == twists_commute(a, b));
  }
}

TEST_CASE("adjacency of two-curves") {
  Curve a = Curve::standard(4, 1, 2);
  Curve b = Curve::standard(4, 2, 3);
  Curve far = Curve::standard(4, 3, 4);
  CHECK(is_adjacent(a, b));
  CHECK_FALSE(is_adjacent(a, far));
  CHECK_FALSE(is_adjacent(a, a));
  CHECK_THROWS_AS(is_adjacent(a, Curve::standard(4, 1, 3)), CurveTypeError);
}

TEST_CASE("two-curve half twists square to full twists") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    int strands = std::uniform_int_distribution<int>(3, 5)(rng);
    int lo = std::uniform_int_distribution<int>(1, strands - 1)(rng);
    Curve c(strands, lo, lo + 1, random_word(rng, strands, 4));
    CHECK(equals(power(c.half_twist(), 2), c.twist()));
  }
}

TEST_CASE("sphere types") {
  CHECK(sphere_type(Curve::standard(3, 1, 2)) == 2);
  CHECK(sphere_type(Curve::standard(4, 1, 2)) == 2);
  CHECK(sphere_type(Curve::standard(6, 1, 4)) == 3);
  CHECK(sphere_type(Curve::standard(7, 2, 7)) == 2);
  CHECK(is_two_curve(Curve::standard(4, 1, 2)));
  CHECK_FALSE(is_two_curve(Curve::standard(4, 1, 3)));
}

TEST_CASE("slopes of round curves and a pushed curve") {
  CHECK(farey_slope_d3(Curve::standard(3, 1, 2)) == FareySlope{0, 1});
  CHECK(farey_slope_d3(Curve::standard(3, 2, 3)) == FareySlope{1, 0});
  Curve pushed = apply_braid(BraidWord::from_text(3, "2 2 1 1"), Curve::standard(3, 2, 3));
  CHECK(farey_slope_d3(pushed) == FareySlope{3, 2});
  CHECK(cross_det(farey_slope_d3(pushed), farey_slope_d3(Curve::standard(3, 1, 2))) == 3);
  CHECK_THROWS_AS(farey_slope_d3(Curve::standard(4, 1, 2)), UsageError);
}

TEST_CASE("slopes classify equality, disjointness and adjacency in the 3-strand disk") {
  std::vector<Curve> curves = d3_sample(4);
  CHECK(curves.size() == 32);
  for (size_t i = 0; i < curves.size(); ++i) {
    for (size_t j = i; j < curves.size(); ++j) {
      const Curve& a = curves[i];
      const Curve& b = curves[j];
      FareySlope sa = farey_slope_d3(a), sb = farey_slope_d3(b);
      CHECK(equals_curve(a, b) == (sa == sb));
      CHECK(is_disjoint(a, b) == (sa == sb));
      if (!(sa == sb)) {
        long long det = cross_det(sa, sb);
        CHECK(is_adjacent(a, b) == (det == 1 || det == -1));
      }
    }
  }
}

TEST_CASE("powers of twists still separate curves") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 12; ++trial) {
    int strands = std::uniform_int_distribution<int>(3, 5)(rng);
    auto pick = [&]() {
      int lo = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      int hi = std::uniform_int_distribution<int>(lo + 1, std::min(strands, lo + strands - 2))(rng);
      return Curve(strands, lo, hi, random_word(rng, strands, 3));
    };
    Curve a = pick(), b = pick();
    CHECK(equals(power(a.twist(), 2), power(b.twist(), 2)) == equals_curve(a, b));
    CHECK(equals(power(a.twist(), -3), power(b.twist(), -3)) == equals_curve(a, b));
  }
}

TEST_CASE("curve text round trip") {
  Curve c(5, 2, 4, BraidWord::from_text(5, "1 -3"));
  CHECK(curve_to_text(c) == "5;2,4;1 -3");
  Curve back = curve_from_text(curve_to_text(c));
  CHECK(equals_curve(back, c));
  CHECK(back.conjugator().text() == "1 -3");
  Curve round = curve_from_text("3;1,2;");
  CHECK(equals_curve(round, Curve::standard(3, 1, 2)));
  CHECK_THROWS_AS(curve_from_text("3;1 2"), ParseError);
  CHECK_THROWS_AS(curve_from_text("3;1;2"), ParseError);
  CHECK_THROWS_AS(curve_from_text("x;1,2;"), ParseError);
}
