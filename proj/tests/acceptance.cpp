// Acceptance gate: every release criterion runs here, one line of output
// per criterion, exit code = number of failures.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "braidlab/artin.hpp"
#include "braidlab/braid.hpp"
#include "braidlab/complex.hpp"
#include "braidlab/curve.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/framed.hpp"
#include "braidlab/homlab.hpp"
#include "test_util.hpp"

using namespace braidlab;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

// --- 1: generalized lantern relation, n = 2..5, per-step identities ------

bool generalized_lantern(std::string& note) {
  for (int n = 2; n <= 5; ++n) {
    LanternCertificate cert = verify_generalized_lantern(n);
    if (!cert.pass || contains(cert.text, "MISMATCH")) {
      note = "fails at n=" + std::to_string(n);
      return false;
    }
  }
  note = "n=2..5 exact, classical case included";
  return true;
}

// --- 2: the ordered product of all pair twists is the full twist ---------

bool center_factorization(std::string& note) {
  for (int n = 2; n <= 5; ++n) {
    const int s = n + 1;
    BraidWord prod(s);
    for (int i = 1; i < s; ++i)
      for (int j = i + 1; j <= s; ++j)
        prod = compose(prod, pure_generator(s, i, j));
    if (!equals(prod, center_generator(s))) {
      note = "fails in B_" + std::to_string(s);
      return false;
    }
  }
  note = "B_3..B_6 exact";
  return true;
}

// --- 3: Garside and free-action equality agree ---------------------------

bool dual_oracle(std::string& note) {
  std::mt19937 rng(20260819);
  std::uniform_int_distribution<int> strand_dist(2, 7);
  std::uniform_int_distribution<int> len_dist(0, 40);
  std::uniform_int_distribution<int> coin(0, 1);
  const int pairs = 10000;
  for (int t = 0; t < pairs; ++t) {
    const int s = strand_dist(rng);
    BraidWord a = testutil::random_word(rng, s, len_dist(rng));
    BraidWord b = coin(rng) ? testutil::rewrite_equivalent(rng, a, 10)
                            : testutil::random_word(rng, s, len_dist(rng));
    if (equals(a, b) != artin_equal(a, b)) {
      note = "disagreement on strands " + std::to_string(s) + ": '" +
             a.text() + "' vs '" + b.text() + "'";
      return false;
    }
  }
  note = std::to_string(pairs) + " pairs, 0 disagreements";
  return true;
}

// --- 4: twist dictionary on balls, Farey adjacency in the 3-disk ---------

bool twist_dictionary(std::string& note) {
  int pairs_checked = 0;
  for (int s : {4, 5}) {
    Ball ball = build_ball(round_curves(s), 2);
    const std::vector<Curve>& vs = ball.vertices();
    for (int i = 0; i < ball.size(); ++i) {
      // Conjugation transports twists.
      for (const BraidWord& g : sigma_generators(s)) {
        Curve moved = apply_braid(g, vs[i]);
        if (!equals(moved.twist(), compose(g, vs[i].twist(), invert(g)))) {
          note = "conjugation identity fails in D_" + std::to_string(s);
          return false;
        }
      }
      // Another spelling of the same curve has the same twist.
      Curve respelled = apply_braid(
          compose(BraidWord::generator(s, 1), invert(BraidWord::generator(s, 1))),
          vs[i]);
      if (!equals_curve(respelled, vs[i])) {
        note = "twist fails to determine a respelled curve";
        return false;
      }
      for (int j = i; j < ball.size(); ++j) {
        const BraidWord& ti = vs[i].twist();
        const BraidWord& tj = vs[j].twist();
        const bool commute = equals(compose(ti, tj), compose(tj, ti));
        if (commute != ball.disjoint_in_ball(i, j)) {
          note = "commutation disagrees with disjointness in D_" +
                 std::to_string(s);
          return false;
        }
        if (i != j && equals(ti, tj)) {
          note = "distinct ball vertices share a twist in D_" +
                 std::to_string(s);
          return false;
        }
        ++pairs_checked;
      }
    }
  }

  // Every curve in the 3-punctured disk reachable by conjugators of length
  // at most 4; adjacency must match the slope determinant rule.
  std::vector<Curve> curves;
  std::set<std::string> seen;
  std::vector<BraidWord> frontier{BraidWord(3)};
  const std::vector<BraidWord> moves = sigma_generators(3);
  for (int len = 0; len <= 4; ++len) {
    std::vector<BraidWord> next;
    for (const BraidWord& w : frontier) {
      for (const Curve& seed :
           {Curve::standard(3, 1, 2), Curve::standard(3, 2, 3)}) {
        Curve c = apply_braid(w, seed);
        if (seen.insert(c.key()).second) curves.push_back(c);
      }
      if (len < 4)
        for (const BraidWord& m : moves) next.push_back(compose(m, w));
    }
    frontier = std::move(next);
  }
  for (size_t i = 0; i < curves.size(); ++i) {
    const FareySlope si = farey_slope_d3(curves[i]);
    for (size_t j = i + 1; j < curves.size(); ++j) {
      const FareySlope sj = farey_slope_d3(curves[j]);
      const long long det = si.p * sj.q - sj.p * si.q;
      if (is_adjacent(curves[i], curves[j]) != (std::abs(det) == 1)) {
        note = "adjacency disagrees with the determinant rule";
        return false;
      }
    }
  }
  note = std::to_string(pairs_checked) + " ball pairs, " +
         std::to_string(curves.size()) + " slopes exhaustive";
  return true;
}

// --- 5: engine exponents match the closed formulas -----------------------

bool exponent_formulas(std::string& note) {
  std::mt19937 rng(505);
  std::uniform_int_distribution<int> exp_dist(-2, 2);
  long long rows = 0;
  for (int n = 2; n <= 5; ++n) {
    MappingClassSpec id = MappingClassSpec::from_braid(BraidWord(n + 1));
    for (int t = -2; t <= 2; ++t) {
      TransvectionParams p;
      p.t = t;
      auto engine = engine_z_exponent(catalogue_injection(Family::artin_a, n, id, p));
      if (!engine || *engine != 1 + static_cast<long long>(t) * n * (n + 1)) {
        note = "chain family exponent off at n=" + std::to_string(n);
        return false;
      }
      ++rows;
    }
  }
  for (int n = 2; n <= 5; ++n) {
    MappingClassSpec id = MappingClassSpec::from_braid(BraidWord(n + 1));
    for (int u = -2; u <= 2; ++u)
      for (int v = -2; v <= 2; ++v) {
        TransvectionParams p;
        p.u = u;
        p.v = v;
        auto engine =
            engine_z_exponent(catalogue_injection(Family::artin_b, n, id, p));
        const long long want =
            1 + static_cast<long long>(n) * u +
            static_cast<long long>(n) * (n - 1) * v;
        if (!engine || *engine != want) {
          note = "doubled family exponent off at n=" + std::to_string(n);
          return false;
        }
        ++rows;
      }
  }
  // The pure catalogue's pair curves need a puncture left outside: n >= 3.
  for (int n = 3; n <= 5; ++n) {
    MappingClassSpec id = MappingClassSpec::from_braid(BraidWord(n));
    const size_t count = static_cast<size_t>(n) * (n - 1) / 2;
    for (int trial = 0; trial < 13; ++trial) {
      TransvectionParams p;
      p.tij.resize(count);
      for (auto& t : p.tij) t = exp_dist(rng);
      if (trial < 3) {
        // Steer onto the kernel hyperplane: exponents summing to -1.
        long long sum = std::accumulate(p.tij.begin(), p.tij.end(), 0LL);
        p.tij[0] -= static_cast<int>(sum + 1);
      }
      const long long sum = std::accumulate(p.tij.begin(), p.tij.end(), 0LL);
      EndomorphismSpec spec = catalogue_injection(Family::pure, n, id, p);
      auto engine = engine_z_exponent(spec);
      if (!engine || *engine != 1 + sum) {
        note = "pure family exponent off at n=" + std::to_string(n);
        return false;
      }
      BraidWord img = substitute(center_word(spec.source), spec.images, n);
      if (equals(img, BraidWord(n)) != (sum == -1)) {
        note = "kernel hyperplane mischaracterized at n=" + std::to_string(n);
        return false;
      }
      ++rows;
    }
  }
  note = std::to_string(rows) + " grid rows engine-checked";
  return true;
}

// --- 6: transvection classification and unsolvability --------------------

bool transvection_classification(std::string& note) {
  for (int n = 3; n <= 6; ++n) {
    TransvectionReport report =
        transvection_classify(Family::artin_b, n, TransvectionParams{});
    if (!report.lattice_generator) {
      note = "missing lattice generator";
      return false;
    }
    auto [gu, gv] = *report.lattice_generator;
    auto on_lattice = [n](long long u, long long v) {
      return n * u + static_cast<long long>(n) * (n - 1) * v == 0;
    };
    if (!on_lattice(gu, gv) || std::gcd(gu, gv) != 1) {
      note = "lattice generator invalid at n=" + std::to_string(n);
      return false;
    }
    for (int u = -8; u <= 8; ++u)
      for (int v = -8; v <= 8; ++v)
        if (on_lattice(u, v) && u * gv != v * gu) {
          note = "lattice has rank above one at n=" + std::to_string(n);
          return false;
        }
  }
  for (int n = 3; n <= 5; ++n)
    for (int u = -50; u <= 50; ++u)
      for (int v = -50; v <= 50; ++v)
        if (1 + n * u + n * (n - 1) * v == -1) {
          note = "window search found a center-inverting solution";
          return false;
        }
  UnsolvabilityCertificate cert = no_center_inverting_transvection(3, 1000);
  if (!cert.pass || !contains(cert.text, "result pass")) {
    note = "divisibility certificate did not pass";
    return false;
  }
  note = "rank-1 lattice n=3..6; exponent -1 unsolvable n=3..1000";
  return true;
}

// --- 7: the context-one conjugation formula ------------------------------

BraidWord random_one_fixing(std::mt19937& rng, int strands, int length) {
  while (true) {
    BraidWord w = testutil::random_word(rng, strands, length);
    if (puncture_action(w)[0] == 0) return w;
  }
}

bool context_one_formula(std::string& note) {
  std::mt19937 rng(7001);
  int checks = 0;
  for (int n : {3, 4}) {
    const int s = n + 1;
    for (int eps : {+1, -1}) {
      for (int trial = 0; trial < 3; ++trial) {
        BraidWord w = trial ? random_one_fixing(rng, s, 6) : BraidWord(s);
        FormulaCheck check =
            xi1_formula_check(n, MappingClassSpec::from_braid(w, eps));
        if (!check.pass) {
          note = "geometric case fails at n=" + std::to_string(n) +
                 " witness " + check.witness;
          return false;
        }
        ++checks;
      }
      // Boundary swap given extensionally, exercising the delta = -1 leg.
      MappingClassSpec f;
      f.strands = s;
      f.geometric = false;
      f.epsilon = eps;
      f.boundary_images[1] = 0;
      f.boundary_images[0] = 1;
      const Curve a = Curve::standard(s, 2, s);
      f.curve_images.emplace(a.key(),
                             apply_braid(random_one_fixing(rng, s, 5), a));
      FormulaCheck check = xi1_formula_check(n, f);
      if (!check.pass || !contains(check.transcript, "delta -1")) {
        note = "extensional swap fails at n=" + std::to_string(n);
        return false;
      }
      ++checks;
    }
  }
  note = std::to_string(checks) + " checks over all generator cases";
  return true;
}

// --- 8: the top-context discrepancy and the geometric control ------------

bool top_context_counterexample(std::string& note) {
  for (int n : {3, 4, 5}) {
    CounterexampleReport report = xi_top_counterexample(n);
    if (!report.pass || !contains(report.transcript, "T_a z^-1 -> T_a z") ||
        !contains(report.transcript, "not a homomorphism")) {
      note = "discrepancy not reproduced at n=" + std::to_string(n);
      return false;
    }
  }
  std::mt19937 rng(808);
  for (int n : {3, 4}) {
    const int s = n + 1;
    for (int pair = 0; pair < 3; ++pair) {
      MappingClassSpec f = MappingClassSpec::from_braid(
          random_one_fixing(rng, s, 5), pair == 1 ? -1 : +1);
      MappingClassSpec g = MappingClassSpec::from_braid(
          random_one_fixing(rng, s, 5), pair == 2 ? -1 : +1);
      if (!xi1_functorial_check(n, f, g).pass) {
        note = "geometric control fails to compose at n=" + std::to_string(n);
        return false;
      }
    }
  }
  note = "discrepancy at n=3,4,5; geometric control functorial";
  return true;
}

// --- 9: map checkers: positive, negative, and Farey extension controls ---

bool inside_of(const Curve& a, const Curve& w) {
  if (a.interior().size() >= w.interior().size()) return false;
  return std::includes(w.interior().begin(), w.interior().end(),
                       a.interior().begin(), a.interior().end());
}

bool witness_is_sound(const Ball& ball, const VertexMap& map,
                      const PropertyReport& report) {
  const std::vector<Curve>& vs = ball.vertices();
  const std::vector<Curve>& im = map.images;
  switch (report.mode) {
    case CheckMode::types: {
      if (report.witness.size() != 1) return false;
      const int v = report.witness[0];
      return sphere_type(vs[v]) != sphere_type(im[v]);
    }
    case CheckMode::adjacency: {
      if (report.status == PropertyReport::Status::precondition_failed)
        return report.witness.size() == 1 &&
               !is_two_curve(im[report.witness[0]]);
      if (report.witness.size() != 2) return false;
      const int i = report.witness[0], j = report.witness[1];
      return is_adjacent(vs[i], vs[j]) && !is_adjacent(im[i], im[j]);
    }
    case CheckMode::sides: {
      if (report.witness.size() != 3) return false;
      const int a = report.witness[0], b = report.witness[1],
                w = report.witness[2];
      if (!ball.disjoint_in_ball(a, w) || !ball.disjoint_in_ball(b, w))
        return false;
      return inside_of(vs[a], vs[w]) == inside_of(vs[b], vs[w]) &&
             inside_of(im[a], im[w]) != inside_of(im[b], im[w]);
    }
  }
  return false;
}

// Transport by the linear map pinned down by the images of the root
// triangle; sign ambiguity resolved by matching the apex.
std::vector<FareySlope> matrix_transport(const FareyBall& ball,
                                         const FareySlope& img_u,
                                         const FareySlope& img_apex,
                                         const FareySlope& img_v) {
  for (int su : {1, -1}) {
    for (int sv : {1, -1}) {
      const long long a = sv * img_v.p, c = sv * img_v.q;
      const long long b = su * img_u.p, d = su * img_u.q;
      long long p = a + b, q = c + d;
      if (p == 0 && q == 0) continue;
      if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
      if (!(p == img_apex.p && q == img_apex.q)) continue;
      std::vector<FareySlope> out;
      out.reserve(ball.vertices().size());
      for (const FareySlope& s : ball.vertices()) {
        long long ip = a * s.p + b * s.q;
        long long iq = c * s.p + d * s.q;
        if (iq < 0 || (iq == 0 && ip < 0)) { ip = -ip; iq = -iq; }
        out.push_back(FareySlope{ip, iq});
      }
      return out;
    }
  }
  return {};
}

std::array<FareySlope, 3> random_triangle(std::mt19937& rng, int steps) {
  std::array<FareySlope, 3> t = {FareySlope{0, 1}, FareySlope{1, 1},
                                 FareySlope{1, 0}};
  for (int k = 0; k < steps; ++k) {
    int keep_a = std::uniform_int_distribution<int>(0, 2)(rng);
    int keep_b = (keep_a + 1) % 3;
    int moved = 3 - keep_a - keep_b;
    t[moved] = farey_extend_triangle(t[keep_a], t[keep_b], t[moved]);
  }
  return t;
}

bool map_checkers(std::string& note) {
  std::mt19937 rng(4242);
  const std::array<CheckMode, 3> modes = {CheckMode::sides, CheckMode::types,
                                          CheckMode::adjacency};

  for (int s : {4, 5}) {
    Ball ball = build_ball(round_curves(s), 2);
    std::vector<BraidWord> braids{BraidWord::generator(s, 1),
                                  mirror(testutil::random_word(rng, s, 5))};
    for (int t = 0; t < 2; ++t) braids.push_back(testutil::random_word(rng, s, 6));
    for (const BraidWord& g : braids) {
      VertexMap map = induced_map(ball, g);
      if (!check_superinjective(ball, map).pass()) {
        note = "induced map rejected in D_" + std::to_string(s);
        return false;
      }
      for (CheckMode mode : modes)
        if (check_map_property(ball, map, mode).status !=
            PropertyReport::Status::pass) {
          note = "induced map fails " + to_string(mode) + " in D_" +
                 std::to_string(s);
          return false;
        }
    }
  }

  Ball ball = build_ball(round_curves(4), 2);
  if (ball.size() < 20) {
    note = "negative-control ball too small";
    return false;
  }
  int rejected = 0;
  std::vector<int> perm(ball.size());
  for (int trial = 0; trial < 100; ++trial) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexMap map;
    for (int v : perm) map.images.push_back(ball.vertices()[v]);
    SuperinjectivityReport super = check_superinjective(ball, map);
    if (!super.pass()) {
      if (!super.disjointness_witness) {
        note = "permutation map rejected without a witness";
        return false;
      }
      const auto [i, j] = *super.disjointness_witness;
      if (ball.disjoint_in_ball(i, j) ==
          is_disjoint(map.images[i], map.images[j])) {
        note = "disjointness witness does not verify";
        return false;
      }
      ++rejected;
      continue;
    }
    for (CheckMode mode : modes) {
      PropertyReport report = check_map_property(ball, map, mode);
      if (report.status == PropertyReport::Status::pass) continue;
      if (!witness_is_sound(ball, map, report)) {
        note = "property witness does not verify (" + to_string(mode) + ")";
        return false;
      }
      ++rejected;
      break;
    }
  }
  if (rejected < 95) {
    note = "only " + std::to_string(rejected) +
           "/100 permutations rejected";
    return false;
  }

  FareyBall fb = farey_ball(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int steps = 1 + trial % 12;
    std::array<FareySlope, 3> t = random_triangle(rng, steps);
    std::vector<FareySlope> oracle = matrix_transport(fb, t[0], t[1], t[2]);
    if (oracle.empty()) {
      note = "no unimodular transport matches the image triangle";
      return false;
    }
    std::vector<FareySlope> ext = farey_extend_map(fb, t[0], t[1], t[2]);
    if (ext != oracle) {
      note = "triangle extension disagrees with linear transport";
      return false;
    }
  }
  note = "positives pass; " + std::to_string(rejected) +
         "/100 permutations rejected; 100 triangles transported";
  return true;
}

// --- 10: fixing-subgroup indices vs direct coset enumeration -------------

bool fixing_subgroup_indices(std::string& note) {
  for (int m : {5, 6, 7}) {
    IndexTable table = index_table(m);
    if (!table.pass || !contains(table.text, "result pass")) {
      note = "enumeration mismatch at m=" + std::to_string(m);
      return false;
    }
  }
  if (index_of_fixing_subgroup(6, 0) != 2 ||
      index_of_fixing_subgroup(7, 7) != 2 * 5040) {
    note = "closed formula spot values off";
    return false;
  }
  note = "m=5,6,7 all k enumerated";
  return true;
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"generalized-lantern", generalized_lantern},
      {"center-factorization", center_factorization},
      {"dual-oracle-agreement", dual_oracle},
      {"twist-dictionary", twist_dictionary},
      {"central-exponent-formulas", exponent_formulas},
      {"transvection-classification", transvection_classification},
      {"context-one-formula", context_one_formula},
      {"top-context-counterexample", top_context_counterexample},
      {"complex-map-checkers", map_checkers},
      {"fixing-subgroup-indices", fixing_subgroup_indices},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i].run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("%2zu %-28s %s%s%s\n", i + 1, criteria[i].name.c_str(),
                ok ? "pass" : "FAIL", note.empty() ? "" : "  ",
                note.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria pass\n",
              criteria.size() - failures, criteria.size());
  return failures;
}
