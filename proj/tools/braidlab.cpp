// Batch front-end. Exit codes are a contract:
//   0 pass, 1 mathematical falsification, 2 usage error, 3 resource limit.
// Every output is a deterministic function of the invocation; certificates
// embed the invocation and the library version and carry no timestamps.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidlab/artin.hpp"
#include "braidlab/braid.hpp"
#include "braidlab/complex.hpp"
#include "braidlab/curve.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/framed.hpp"
#include "braidlab/homlab.hpp"
#include "braidlab/version.hpp"

namespace {

using namespace braidlab;

constexpr int kPass = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file " + path);
  out << text;
}

std::string certificate(const std::string& invocation, const std::string& body) {
  std::ostringstream out;
  out << "braidlab-certificate v1\n";
  out << "version " << kVersion << "\n";
  out << "invocation " << invocation << "\n";
  out << body;
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BraidWord random_word(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  letters.reserve(length);
  for (int k = 0; k < length; ++k)
    letters.push_back(Letter{idx(rng), coin(rng) ? +1 : -1});
  return BraidWord(strands, std::move(letters));
}

// Respells a word without changing the element: cancelling pairs, braid
// relation substitutions, far-commutation swaps.
BraidWord respell(std::mt19937& rng, const BraidWord& w, int rounds) {
  std::vector<Letter> ls = w.letters();
  const int n = w.strands();
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int r = 0; r < rounds; ++r) {
    switch (op(rng)) {
      case 0: {
        int pos = std::uniform_int_distribution<int>(
            0, static_cast<int>(ls.size()))(rng);
        int i = idx(rng);
        int s = coin(rng) ? +1 : -1;
        ls.insert(ls.begin() + pos, {Letter{i, s}, Letter{i, -s}});
        break;
      }
      case 1: {
        for (int p = 0; p + 2 < static_cast<int>(ls.size()); ++p) {
          if (ls[p].sign == ls[p + 1].sign && ls[p].sign == ls[p + 2].sign &&
              ls[p].index == ls[p + 2].index &&
              std::abs(ls[p].index - ls[p + 1].index) == 1) {
            const int i = ls[p].index, j = ls[p + 1].index;
            ls[p].index = j;
            ls[p + 1].index = i;
            ls[p + 2].index = j;
            break;
          }
        }
        break;
      }
      default: {
        for (int p = 0; p + 1 < static_cast<int>(ls.size()); ++p) {
          if (std::abs(ls[p].index - ls[p + 1].index) >= 2) {
            std::swap(ls[p], ls[p + 1]);
            break;
          }
        }
        break;
      }
    }
  }
  return BraidWord(n, std::move(ls));
}

// --- verify targets -------------------------------------------------------

std::string verify_lantern(int n, bool& pass) {
  if (n < 2) throw UsageError("the lantern check needs n >= 2");
  LanternCertificate cert = verify_generalized_lantern(n);
  pass = cert.pass;
  return cert.text;
}

std::string verify_iota(int max_strands, int trials, unsigned seed, bool& pass) {
  if (max_strands < 3 || max_strands > 9)
    throw UsageError("iota check covers 3 <= strands <= 9");
  if (trials < 1) throw UsageError("need at least one trial");
  std::ostringstream out;
  out << "check iota-embedding\n";
  out << "strands 3.." << max_strands << " trials " << trials << " seed "
      << seed << "\n";
  pass = true;
  auto report = [&](const std::string& name, bool ok) {
    out << "identity " << name << (ok ? " ok" : " MISMATCH") << "\n";
    pass = pass && ok;
  };

  for (int s = 3; s <= max_strands; ++s) {
    const std::vector<int> full = full_support(s);
    // Generator squares pick up one framing unit per enclosed hole.
    bool squares = true;
    for (int i = 1; i < s; ++i) {
      FramedBraid lhs =
          framed_power(iota(BraidWord::generator(s, i), full), 2);
      FramedBraid rhs = framed_mul(
          framed_mul(cluster_twist(s, full, i, i + 1),
                     framed_inv(boundary_twist(s, full, i))),
          framed_inv(boundary_twist(s, full, i + 1)));
      squares = squares && framed_equals(lhs, rhs);
    }
    report("generator-square s=" + std::to_string(s), squares);

    // The full twist factors through the boundary twists in any support.
    std::vector<std::vector<int>> supports{full, {1}};
    if (s >= 4) supports.push_back({2, s - 1});
    bool centers = true;
    for (const auto& holes : supports) {
      FramedBraid rhs = outer_twist(s, holes);
      for (int p : holes)
        rhs = framed_mul(rhs, framed_inv(boundary_twist(s, holes, p)));
      centers = centers && framed_equals(iota(center_generator(s), holes), rhs);
    }
    report("center-form s=" + std::to_string(s), centers);

    // T_a z^alpha for the curve around every hole but the first.
    const Curve a = Curve::standard(s, 2, s);
    const std::vector<int> one{1};
    for (int alpha : {+1, -1}) {
      BraidWord word = compose(a.twist(), power(center_generator(s), alpha));
      FramedBraid rhs = framed_mul(
          cluster_twist(a, one),
          framed_power(framed_mul(framed_inv(boundary_twist(s, one, 1)),
                                  outer_twist(s, one)),
                       alpha));
      report("all-but-one-twist s=" + std::to_string(s) + " alpha " +
                 (alpha > 0 ? "+1" : "-1"),
             framed_equals(iota(word, one), rhs));
    }
  }

  std::mt19937 rng(seed);
  bool section = true, homomorphic = true;
  for (int t = 0; t < trials; ++t) {
    const int s = 3 + t % (max_strands - 2);
    const std::vector<int> full = full_support(s);
    BraidWord a = random_word(rng, s, 12);
    BraidWord b = random_word(rng, s, 12);
    section = section && equals(cap_pi(iota(a, full)), a);
    homomorphic = homomorphic &&
                  framed_equals(iota(compose(a, b), full),
                                framed_mul(iota(a, full), iota(b, full)));
  }
  report("section-random-words", section);
  report("homomorphism-random-pairs", homomorphic);

  out << "result " << (pass ? "pass" : "FAIL") << "\n";
  return out.str();
}

std::string verify_xi1(int n, const std::string& braid_text, int epsilon,
                       bool& pass) {
  if (epsilon != 1 && epsilon != -1)
    throw UsageError("epsilon must be +1 or -1");
  BraidWord w = braid_text.empty()
                    ? BraidWord(n + 1)
                    : BraidWord::from_text(n + 1, braid_text);
  FormulaCheck check =
      xi1_formula_check(n, MappingClassSpec::from_braid(w, epsilon));
  pass = check.pass;
  return check.transcript;
}

std::string verify_xi_top(int n, bool& pass) {
  CounterexampleReport report = xi_top_counterexample(n);
  pass = report.pass;
  return report.transcript;
}

std::string verify_dual_oracle(int pairs, int max_len, int max_strands,
                               unsigned seed, bool& pass) {
  if (pairs < 1 || max_len < 1 || max_strands < 2 || max_strands > 9)
    throw UsageError("dual-oracle needs pairs >= 1, max-len >= 1, "
                     "2 <= max-strands <= 9");
  std::ostringstream out;
  out << "check dual-oracle\n";
  out << "pairs " << pairs << " max-length " << max_len << " max-strands "
      << max_strands << " seed " << seed << "\n";
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> strand_dist(2, max_strands);
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  int disagreements = 0, engineered = 0;
  std::string witness;
  for (int t = 0; t < pairs; ++t) {
    const int s = strand_dist(rng);
    BraidWord a = random_word(rng, s, len_dist(rng));
    BraidWord b;
    if (coin(rng)) {
      b = respell(rng, a, 8);
      ++engineered;
    } else {
      b = random_word(rng, s, len_dist(rng));
    }
    const bool garside = equals(a, b);
    const bool action = artin_equal(a, b);
    if (garside != action && ++disagreements == 1) {
      witness = "witness strands " + std::to_string(s) + " lhs '" + a.text() +
                "' rhs '" + b.text() + "'";
    }
  }
  out << "engineered-equal " << engineered << "\n";
  out << "disagreements " << disagreements << "\n";
  if (!witness.empty()) out << witness << "\n";
  pass = disagreements == 0;
  out << "result " << (pass ? "pass" : "FAIL") << "\n";
  return out.str();
}

// --- subcommands ----------------------------------------------------------

struct VerifyOptions {
  std::string target;
  int n = 3;
  int strands = 6;
  int trials = 100;
  int pairs = 10000;
  int max_len = 40;
  int max_strands = 7;
  unsigned rng_seed = 1;
  int epsilon = 1;
  std::string braid;
  std::string out;
};

int run_verify(const VerifyOptions& opt, const std::string& invocation) {
  bool pass = false;
  std::string body;
  if (opt.target == "lantern") {
    body = verify_lantern(opt.n, pass);
  } else if (opt.target == "iota") {
    body = verify_iota(opt.strands, opt.trials, opt.rng_seed, pass);
  } else if (opt.target == "xi1") {
    body = verify_xi1(opt.n, opt.braid, opt.epsilon, pass);
  } else if (opt.target == "xi-top") {
    body = verify_xi_top(opt.n, pass);
  } else if (opt.target == "dual-oracle") {
    body = verify_dual_oracle(opt.pairs, opt.max_len, opt.max_strands,
                              opt.rng_seed, pass);
  } else {
    throw UsageError("unknown verify target " + opt.target);
  }
  write_output(opt.out, certificate(invocation, body));
  return pass ? kPass : kFalsified;
}

struct BallOptions {
  int punctures = 4;
  int radius = 1;
  std::vector<std::string> seeds;
  std::optional<int> cap;
  std::string out;
  std::string dot;
};

// "lo:hi" or "lo:hi/word text": a round interval curve, optionally pushed
// through a braid.
Curve parse_seed(int strands, const std::string& text) {
  const size_t slash = text.find('/');
  const std::string range = text.substr(0, slash);
  const size_t colon = range.find(':');
  if (colon == std::string::npos)
    throw UsageError("seed must look like lo:hi or lo:hi/word");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(range.substr(0, colon));
    hi = std::stoi(range.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("seed interval is not numeric: " + range);
  }
  Curve c = Curve::standard(strands, lo, hi);
  if (slash != std::string::npos)
    c = apply_braid(BraidWord::from_text(strands, text.substr(slash + 1)), c);
  return c;
}

int run_ball(const BallOptions& opt, const std::string& invocation) {
  if (opt.radius < 0) throw UsageError("radius must be >= 0");
  std::vector<Curve> seeds;
  if (opt.seeds.empty()) {
    seeds = round_curves(opt.punctures);
  } else {
    for (const std::string& s : opt.seeds)
      seeds.push_back(parse_seed(opt.punctures, s));
  }
  const int cap = opt.cap.value_or(default_vertex_cap());
  Ball ball = [&] {
    try {
      return build_ball(seeds, opt.radius, cap);
    } catch (const VertexCapError& e) {
      // The partial-result marker makes the truncation visible downstream.
      std::ostringstream out;
      out << "braidlab-ball partial\n";
      out << "invocation " << invocation << "\n";
      out << "error " << e.what() << "\n";
      write_output(opt.out, out.str());
      throw;
    }
  }();
  write_output(opt.out, ball_to_text(ball));
  if (!opt.dot.empty()) write_output(opt.dot, ball_to_dot(ball));
  return kPass;
}

struct CheckMapOptions {
  std::string ball_file;
  std::string map_file;
  std::vector<std::string> modes;
  std::string out;
};

int run_check_map(const CheckMapOptions& opt, const std::string& invocation) {
  Ball ball = ball_from_text(slurp(opt.ball_file));
  VertexMap map = map_from_text(ball, slurp(opt.map_file));

  std::vector<CheckMode> modes;
  if (opt.modes.empty()) {
    modes = {CheckMode::sides, CheckMode::types, CheckMode::adjacency};
  } else {
    for (const std::string& name : opt.modes) {
      std::optional<CheckMode> mode = check_mode_from_string(name);
      if (!mode) throw UsageError("unknown mode " + name);
      modes.push_back(*mode);
    }
  }

  std::ostringstream body;
  body << "check map-properties\n";
  body << "vertices " << ball.size() << " edges " << ball.edges().size()
       << "\n";
  bool pass = true;

  SuperinjectivityReport super = check_superinjective(ball, map);
  body << "superinjective " << (super.pass() ? "ok" : "FAIL");
  if (super.disjointness_witness)
    body << " disjointness-witness " << super.disjointness_witness->first
         << " " << super.disjointness_witness->second;
  if (super.collision)
    body << " collision " << super.collision->first << " "
         << super.collision->second;
  body << "\n";
  pass = pass && super.pass();

  for (CheckMode mode : modes) {
    PropertyReport report = check_map_property(ball, map, mode);
    body << "property " << to_string(mode);
    switch (report.status) {
      case PropertyReport::Status::pass:
        body << " ok";
        break;
      case PropertyReport::Status::fail:
        body << " FAIL witness";
        for (int v : report.witness) body << " " << v;
        break;
      case PropertyReport::Status::precondition_failed:
        body << " PRECONDITION-FAILED";
        break;
    }
    if (!report.detail.empty()) body << " (" << report.detail << ")";
    body << "\n";
    pass = pass && report.status == PropertyReport::Status::pass;
  }
  body << "result " << (pass ? "pass" : "FAIL") << "\n";
  write_output(opt.out, certificate(invocation, body.str()));
  return pass ? kPass : kFalsified;
}

struct CatalogueOptions {
  std::string family;
  int n = 3;
  std::string t_range = "-2:2";
  std::string u_range = "-2:2";
  std::string v_range = "-2:2";
  std::vector<std::string> tij;
  int random = 0;
  unsigned rng_seed = 1;
  std::string out;
};

std::pair<int, int> parse_range(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("range must look like lo:hi");
  try {
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (lo > hi) throw UsageError("range is empty: " + text);
    return {lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("range is not numeric: " + text);
  }
}

std::string class_name(TransvectionClass cls) {
  switch (cls) {
    case TransvectionClass::automorphism: return "automorphism";
    case TransvectionClass::injective_nonsurjective:
      return "injective-nonsurjective";
    case TransvectionClass::non_injective: return "non-injective";
  }
  return "?";
}

int run_catalogue(const CatalogueOptions& opt, const std::string& invocation) {
  std::optional<Family> family = family_from_name(opt.family);
  if (!family) throw UsageError("unknown family " + opt.family);
  const int n = opt.n;
  const int s = ambient_strands(*family, n);
  MappingClassSpec id = MappingClassSpec::from_braid(BraidWord(s));

  std::vector<TransvectionParams> grid;
  if (*family == Family::artin_a) {
    auto [lo, hi] = parse_range(opt.t_range);
    for (int t = lo; t <= hi; ++t) {
      TransvectionParams p;
      p.t = t;
      grid.push_back(p);
    }
  } else if (*family == Family::artin_b) {
    auto [ulo, uhi] = parse_range(opt.u_range);
    auto [vlo, vhi] = parse_range(opt.v_range);
    for (int u = ulo; u <= uhi; ++u)
      for (int v = vlo; v <= vhi; ++v) {
        TransvectionParams p;
        p.u = u;
        p.v = v;
        grid.push_back(p);
      }
  } else {
    const size_t count = static_cast<size_t>(n) * (n - 1) / 2;
    for (const std::string& tuple : opt.tij) {
      TransvectionParams p;
      std::stringstream ss(tuple);
      std::string item;
      while (std::getline(ss, item, ','))
        try {
          p.tij.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw UsageError("exponent tuple is not numeric: " + tuple);
        }
      if (p.tij.size() != count)
        throw UsageError("tuple needs one exponent per generator pair");
      grid.push_back(p);
    }
    std::mt19937 rng(opt.rng_seed);
    std::uniform_int_distribution<int> exp_dist(-2, 2);
    const int extra = opt.tij.empty() && opt.random == 0 ? 5 : opt.random;
    for (int k = 0; k < extra; ++k) {
      TransvectionParams p;
      p.tij.resize(count);
      for (auto& t : p.tij) t = exp_dist(rng);
      grid.push_back(p);
    }
  }

  std::ostringstream body;
  body << "braidlab-catalogue v1\n";
  body << "version " << kVersion << "\n";
  body << "invocation " << invocation << "\n";
  bool engines_agree = true;
  for (const TransvectionParams& params : grid) {
    TransvectionReport report = transvection_classify(*family, n, params);
    body << opt.family << " n " << n;
    if (*family == Family::artin_a) {
      body << " t " << params.t;
    } else if (*family == Family::artin_b) {
      body << " u " << params.u << " v " << params.v;
    } else {
      body << " t ";
      for (size_t i = 0; i < params.tij.size(); ++i)
        body << (i ? "," : "") << params.tij[i];
    }
    body << " exponent " << report.z_exponent << " class "
         << class_name(report.cls);
    if (n <= 5) {
      auto engine =
          engine_z_exponent(catalogue_injection(*family, n, id, params));
      const bool ok = engine && *engine == report.z_exponent;
      engines_agree = engines_agree && ok;
      body << " engine " << (ok ? "ok" : "MISMATCH");
    } else {
      body << " engine skipped";
    }
    body << "\n";
  }
  body << "rows " << grid.size() << "\n";
  if (*family == Family::artin_b) {
    TransvectionReport report =
        transvection_classify(*family, n, TransvectionParams{});
    body << "automorphism-lattice generated by u " << report.lattice_generator->first
         << " v " << report.lattice_generator->second << "\n";
  }
  body << "result " << (engines_agree ? "pass" : "FAIL") << "\n";
  write_output(opt.out, body.str());
  return engines_agree ? kPass : kFalsified;
}

struct ExportOptions {
  std::string ball_file;
  std::string dot;
  std::string induced;
  std::string map_out;
  std::string out;
};

int run_export(const ExportOptions& opt, const std::string&) {
  Ball ball = ball_from_text(slurp(opt.ball_file));
  if (opt.dot.empty() && opt.induced.empty())
    throw UsageError("nothing to export: pass --dot and/or --induced");
  if (!opt.dot.empty()) write_output(opt.dot, ball_to_dot(ball));
  if (!opt.induced.empty()) {
    VertexMap map = induced_map(
        ball, BraidWord::from_text(ball.strands(), opt.induced));
    write_output(opt.map_out, map_to_text(ball, map));
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  std::string invocation;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) invocation += ' ';
    invocation += argv[i];
  }

  CLI::App app{"exact workbench for braid groups, curve complexes, and "
               "Artin-group homomorphisms"};
  app.require_subcommand(1);

  VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a verifier and write a certificate");
  verify_cmd->add_option("target", verify.target,
                         "lantern | iota | xi1 | xi-top | dual-oracle")
      ->required();
  verify_cmd->add_option("--n", verify.n, "instance size for the target");
  verify_cmd->add_option("--strands", verify.strands,
                         "largest disk size for the iota sweep");
  verify_cmd->add_option("--trials", verify.trials,
                         "random trials for the iota sweep");
  verify_cmd->add_option("--pairs", verify.pairs,
                         "word pairs for the dual oracle");
  verify_cmd->add_option("--max-len", verify.max_len,
                         "longest random word for the dual oracle");
  verify_cmd->add_option("--max-strands", verify.max_strands,
                         "widest disk for the dual oracle");
  verify_cmd->add_option("--rng-seed", verify.rng_seed, "random seed");
  verify_cmd->add_option("--epsilon", verify.epsilon,
                         "orientation sign for the xi1 class");
  verify_cmd->add_option("--braid", verify.braid,
                         "braid word for the xi1 class, e.g. '2 3 -2'");
  verify_cmd->add_option("--out", verify.out, "certificate file");

  BallOptions ball;
  CLI::App* ball_cmd =
      app.add_subcommand("ball", "grow a curve ball and serialize it");
  ball_cmd->add_option("--punctures", ball.punctures, "disk punctures")
      ->required();
  ball_cmd->add_option("--radius", ball.radius, "generator-move radius")
      ->required();
  ball_cmd->add_option("--seed", ball.seeds,
                       "seed curve lo:hi or lo:hi/word; default all round "
                       "curves");
  int ball_cap = 0;
  CLI::Option* cap_opt = ball_cmd->add_option(
      "--cap", ball_cap, "vertex cap; default BRAIDLAB_VERTEX_CAP or 100000");
  ball_cmd->add_option("--out", ball.out, "ball file");
  ball_cmd->add_option("--dot", ball.dot, "DOT graph file");

  CheckMapOptions check;
  CLI::App* check_cmd = app.add_subcommand(
      "check-map", "test a vertex map against the homeomorphism criteria");
  check_cmd->add_option("--ball", check.ball_file, "ball file")->required();
  check_cmd->add_option("--map", check.map_file, "map file")->required();
  check_cmd->add_option("--mode", check.modes,
                        "sides | types | adjacency; default all");
  check_cmd->add_option("--out", check.out, "report file");

  CatalogueOptions cat;
  CLI::App* cat_cmd = app.add_subcommand(
      "catalogue", "sweep transvection parameters and classify");
  cat_cmd->add_option("--family", cat.family, "artin-a | artin-b | pure")
      ->required();
  cat_cmd->add_option("--n", cat.n, "source rank")->required();
  cat_cmd->add_option("--t", cat.t_range, "t range lo:hi (artin-a)");
  cat_cmd->add_option("--u", cat.u_range, "u range lo:hi (artin-b)");
  cat_cmd->add_option("--v", cat.v_range, "v range lo:hi (artin-b)");
  cat_cmd->add_option("--tij", cat.tij,
                      "pure exponent tuple t12,t13,... (repeatable)");
  cat_cmd->add_option("--random", cat.random,
                      "extra random pure tuples to include");
  cat_cmd->add_option("--rng-seed", cat.rng_seed, "random seed");
  cat_cmd->add_option("--out", cat.out, "table file");

  ExportOptions exp;
  CLI::App* exp_cmd =
      app.add_subcommand("export", "re-export a ball file as DOT or a map");
  exp_cmd->add_option("--ball", exp.ball_file, "ball file")->required();
  exp_cmd->add_option("--dot", exp.dot, "DOT graph file");
  exp_cmd->add_option("--induced", exp.induced,
                      "braid word whose induced vertex map to export");
  exp_cmd->add_option("--map-out", exp.map_out, "map file for --induced");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify, invocation);
    if (ball_cmd->parsed()) {
      if (cap_opt->count()) ball.cap = ball_cap;
      return run_ball(ball, invocation);
    }
    if (check_cmd->parsed()) return run_check_map(check, invocation);
    if (cat_cmd->parsed()) return run_catalogue(cat, invocation);
    if (exp_cmd->parsed()) return run_export(exp, invocation);
  } catch (const VertexCapError& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
