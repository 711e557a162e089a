#include "braidlab/homlab.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace braidlab {

namespace {

SourceWord repeat(const SourceWord& w, int times) {
  SourceWord out;
  out.reserve(w.size() * times);
  for (int t = 0; t < times; ++t) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// Row-major slot of the generator A[i,j], 1 <= i < j <= n.
int pair_slot(int n, int i, int j) {
  int slot = 0;
  for (int a = 1; a < i; ++a) slot += n - a;
  return slot + (j - i - 1);
}

std::string pure_gen_name(int i, int j) {
  return "A" + std::to_string(i) + "," + std::to_string(j);
}

long long factorial(int m) {
  long long out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::artin_a: return "artin-a";
    case Family::artin_b: return "artin-b";
    case Family::pure: return "pure";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "artin-a") return Family::artin_a;
  if (name == "artin-b") return Family::artin_b;
  if (name == "pure") return Family::pure;
  return std::nullopt;
}

Presentation presentation_of(Family family, int n) {
  Presentation p;
  p.family = family;
  p.n = n;

  auto gen = [](int slot, int sign = +1) { return SourceLetter{slot, sign}; };

  if (family == Family::artin_a || family == Family::artin_b) {
    if (family == Family::artin_a && n < 1)
      throw UsageError("A-type presentations need n >= 1");
    if (family == Family::artin_b && n < 2)
      throw UsageError("B-type presentations need n >= 2");
    const char prefix = family == Family::artin_a ? 's' : 't';
    for (int i = 1; i <= n; ++i)
      p.generator_names.push_back(prefix + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) {
      Relation r;
      if (family == Family::artin_b && i == 0) {
        // The single length-four relation of the chain.
        r.name = "quartic(" + p.generator_names[0] + "," +
                 p.generator_names[1] + ")";
        r.lhs = {gen(0), gen(1), gen(0), gen(1)};
        r.rhs = {gen(1), gen(0), gen(1), gen(0)};
      } else {
        r.name = "braid(" + p.generator_names[i] + "," +
                 p.generator_names[i + 1] + ")";
        r.lhs = {gen(i), gen(i + 1), gen(i)};
        r.rhs = {gen(i + 1), gen(i), gen(i + 1)};
      }
      p.relations.push_back(std::move(r));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        Relation r;
        r.name = "comm(" + p.generator_names[i] + "," + p.generator_names[j] +
                 ")";
        r.lhs = {gen(i), gen(j)};
        r.rhs = {gen(j), gen(i)};
        p.relations.push_back(std::move(r));
      }
    return p;
  }

  if (n < 2) throw UsageError("pure presentations need n >= 2");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      p.generator_names.push_back(pure_gen_name(i, j));

  // One relation per unordered pair of generators, in commutation form:
  // A[i,j] commutes with a word V built from the four indices involved.
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s)
      for (int i = r; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (std::pair(r, s) >= std::pair(i, j)) continue;
          auto A = [&](int a, int b, int sign = +1) {
            return SourceLetter{pair_slot(n, a, b), sign};
          };
          SourceWord v;
          std::string kind;
          if (s < i || (r < i && j < s)) {
            kind = s < i ? "disjoint" : "nested";
            v = {A(r, s)};
          } else if (s == i) {
            kind = "chain";
            v = {A(r, s), A(r, j)};
          } else if (r == i) {
            kind = "low";
            v = {A(r, s), A(i, j), A(s, j)};
          } else if (s == j) {
            kind = "high";
            v = {A(r, s), A(i, j), A(r, i)};
          } else {
            kind = "linked";
            v = {A(r, s), A(r, j), A(s, j), A(r, j, -1), A(s, j, -1)};
          }
          Relation rel;
          rel.name = kind + "(" + pure_gen_name(r, s) + ";" +
                     pure_gen_name(i, j) + ")";
          rel.lhs = {A(i, j)};
          rel.lhs.insert(rel.lhs.end(), v.begin(), v.end());
          rel.rhs = std::move(v);
          rel.rhs.push_back(A(i, j));
          p.relations.push_back(std::move(rel));
        }
  return p;
}

int ambient_strands(Family family, int n) {
  return family == Family::pure ? n : n + 1;
}

SourceWord center_word(const Presentation& p) {
  SourceWord chain;
  for (int i = 0; i < p.generator_count(); ++i) chain.push_back({i, +1});
  switch (p.family) {
    case Family::artin_a: return repeat(chain, p.n + 1);
    case Family::artin_b: return repeat(chain, p.n);
    case Family::pure: return chain;  // row-major product of all pairs
  }
  return chain;
}

BraidWord substitute(const SourceWord& w, const std::vector<BraidWord>& images,
                     int strands) {
  BraidWord out(strands);
  for (const auto& letter : w) {
    if (letter.gen < 0 || letter.gen >= static_cast<int>(images.size()))
      throw UsageError("word references an undeclared generator");
    out = compose(out, letter.sign > 0 ? images[letter.gen]
                                       : invert(images[letter.gen]));
  }
  return out;
}

HomCheck check_homomorphism(const EndomorphismSpec& spec) {
  if (static_cast<int>(spec.images.size()) != spec.source.generator_count())
    throw UsageError("one image word per generator required");
  if (spec.images.empty()) return {true, ""};
  const int strands = spec.images.front().strands();
  for (const auto& w : spec.images)
    if (w.strands() != strands)
      throw StrandMismatchError("image words live on different strand counts");
  for (const auto& rel : spec.source.relations) {
    BraidWord lhs = substitute(rel.lhs, spec.images, strands);
    BraidWord rhs = substitute(rel.rhs, spec.images, strands);
    if (!equals(lhs, rhs)) return {false, rel.name};
  }
  return {true, ""};
}

std::string endomorphism_to_text(const EndomorphismSpec& spec) {
  std::ostringstream out;
  out << "endomorphism " << family_name(spec.source.family) << " n "
      << spec.source.n << "\n";
  for (int i = 0; i < spec.source.generator_count(); ++i) {
    const std::string w = spec.images[i].text();
    out << spec.source.generator_names[i] << " -> " << (w.empty() ? "e" : w)
        << "\n";
  }
  return out.str();
}

std::optional<long long> engine_z_exponent(const EndomorphismSpec& spec) {
  if (spec.images.empty()) return std::nullopt;
  const int s = spec.images.front().strands();
  BraidWord img = substitute(center_word(spec.source), spec.images, s);
  const long long per = static_cast<long long>(s) * (s - 1);
  const long long sum = exponent_sum(img);
  if (per == 0 || sum % per != 0) return std::nullopt;
  const long long e = sum / per;
  if (!equals(img, power(center_generator(s), static_cast<int>(e))))
    return std::nullopt;
  return e;
}

MappingClassSpec MappingClassSpec::from_braid(BraidWord w, int epsilon) {
  if (epsilon != 1 && epsilon != -1)
    throw UsageError("orientation sign must be +1 or -1");
  MappingClassSpec f;
  f.strands = w.strands();
  f.geometric = true;
  f.braid = std::move(w);
  f.epsilon = epsilon;
  return f;
}

Curve MappingClassSpec::image_of(const Curve& c) const {
  if (c.strands() != strands)
    throw StrandMismatchError("image_of: curve lives on the wrong disk");
  if (geometric) {
    BraidWord conj = compose(braid, c.conjugator());
    if (epsilon < 0) conj = mirror(conj);
    return Curve(strands, c.lo(), c.hi(), std::move(conj));
  }
  auto it = curve_images.find(c.key());
  if (it == curve_images.end())
    throw ExtensionalDomainError("no image recorded for curve " + c.key());
  return it->second;
}

int MappingClassSpec::boundary_image(int label) const {
  auto it = boundary_images.find(label);
  return it == boundary_images.end() ? label : it->second;
}

MappingClassSpec compose_specs(const MappingClassSpec& f,
                               const MappingClassSpec& g) {
  if (!f.geometric || !g.geometric)
    throw NonGeometricError("compose_specs needs geometric factors");
  if (f.strands != g.strands)
    throw StrandMismatchError("compose_specs: strand counts differ");
  // Reflections conjugate braids to their mirror images when pushed past.
  BraidWord wf = g.epsilon < 0 ? mirror(f.braid) : f.braid;
  MappingClassSpec out =
      MappingClassSpec::from_braid(compose(wf, g.braid), f.epsilon * g.epsilon);
  std::set<int> labels;
  for (auto& [l, _] : f.boundary_images) labels.insert(l);
  for (auto& [l, _] : g.boundary_images) labels.insert(l);
  for (int l : labels) {
    int to = f.boundary_image(g.boundary_image(l));
    if (to != l) out.boundary_images[l] = to;
  }
  return out;
}

EndomorphismSpec catalogue_injection(Family family, int n,
                                     const MappingClassSpec& f,
                                     const TransvectionParams& params) {
  if (!f.geometric)
    throw NonGeometricError("the catalogue needs a braid-induced class");
  Presentation p = presentation_of(family, n);
  const int s = ambient_strands(family, n);
  if (f.strands != s)
    throw StrandMismatchError("catalogue_injection: class on the wrong disk");
  const BraidWord z = center_generator(s);
  std::vector<BraidWord> images;
  switch (family) {
    case Family::artin_a:
      for (int i = 1; i <= n; ++i) {
        Curve ai = Curve::standard(s, i, i + 1);
        images.push_back(compose(power(f.image_of(ai).half_twist(), f.epsilon),
                                 power(z, params.t)));
      }
      break;
    case Family::artin_b: {
      Curve a1 = Curve::standard(s, 1, 2);
      images.push_back(compose(power(f.image_of(a1).twist(), f.epsilon),
                               power(z, params.u)));
      for (int i = 2; i <= n; ++i) {
        Curve ai = Curve::standard(s, i, i + 1);
        images.push_back(compose(power(f.image_of(ai).half_twist(), f.epsilon),
                                 power(z, params.v)));
      }
      break;
    }
    case Family::pure: {
      if (static_cast<int>(params.tij.size()) != p.generator_count())
        throw UsageError("pure family needs one exponent per generator pair");
      int slot = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++slot) {
          Curve aij = pair_curve(s, i, j);
          images.push_back(
              compose(power(f.image_of(aij).twist(), f.epsilon),
                      power(z, params.tij[slot])));
        }
      break;
    }
  }
  return {std::move(p), std::move(images)};
}

long long z_image_exponent(Family family, int n,
                           const TransvectionParams& params) {
  switch (family) {
    case Family::artin_a:
      return 1 + static_cast<long long>(params.t) * n * (n + 1);
    case Family::artin_b:
      return 1 + static_cast<long long>(n) * params.u +
             static_cast<long long>(n) * (n - 1) * params.v;
    case Family::pure: {
      long long sum = 0;
      for (int t : params.tij) sum += t;
      return 1 + sum;
    }
  }
  return 0;
}

TransvectionReport transvection_classify(Family family, int n,
                                         const TransvectionParams& params) {
  if (n < 3) throw UsageError("transvection classification needs n >= 3");
  TransvectionReport r;
  r.z_exponent = z_image_exponent(family, n, params);
  if (r.z_exponent == 1 || r.z_exponent == -1) {
    r.cls = TransvectionClass::automorphism;
    r.note = "the center maps onto the center";
  } else if (r.z_exponent == 0) {
    r.cls = TransvectionClass::non_injective;
    r.note = "the center dies";
  } else {
    r.cls = TransvectionClass::injective_nonsurjective;
    r.note = "nothing maps to z";
  }
  if (family == Family::artin_b)
    r.lattice_generator = std::pair<long long, long long>(n - 1, -1);
  return r;
}

UnsolvabilityCertificate no_center_inverting_transvection(int lo, int hi) {
  if (lo < 3 || hi < lo)
    throw UsageError("the divisibility argument needs 3 <= lo <= hi");
  bool pass = true;
  std::ostringstream out;
  out << "check no-center-inverting-transvection\n";
  out << "range " << lo << ".." << hi << "\n";
  out << "claim n*u + n*(n-1)*v = -2 has no integer solutions\n";
  for (int n = lo; n <= hi; ++n) {
    const long long g =
        std::gcd(static_cast<long long>(n), static_cast<long long>(n) * (n - 1));
    if (g != n || 2 % g == 0) {
      pass = false;
      out << "n " << n << " FAILS: gcd " << g << "\n";
    }
  }
  out << "reason every value n*u + n*(n-1)*v is divisible by n >= 3\n";
  out << (pass ? "result pass\n" : "result FAIL\n");
  return {pass, out.str()};
}

namespace {

int exterior_puncture(const Curve& a) {
  const auto& in = a.interior();
  for (int p = 1; p <= a.strands(); ++p)
    if (!std::binary_search(in.begin(), in.end(), p)) return p;
  throw CurveTypeError("curve has no exterior puncture");
}

std::string interior_text(const Curve& c) {
  std::string out = "{";
  for (size_t t = 0; t < c.interior().size(); ++t) {
    if (t) out += ",";
    out += std::to_string(c.interior()[t]);
  }
  return out + "}";
}

}  // namespace

GenArtinGenerator gen_artin_generator(int k, const Curve& a, int alpha) {
  const int s = a.strands();
  if (k < 1 || k > s)
    throw UsageError("context needs 1 <= k <= puncture count");
  const int size = static_cast<int>(a.interior().size());
  if (size == 2) {
    if (a.interior().front() > k)
      return {k, a, alpha, GenArtinCase::half_twist, a.half_twist()};
    return {k, a, alpha, GenArtinCase::full_twist, a.twist()};
  }
  if (size == s - 1) {
    const BraidWord z = center_generator(s);
    if (exterior_puncture(a) > k)
      return {k, a, alpha, GenArtinCase::moveable_exterior,
              compose(a.twist(), invert(z))};
    if (alpha != 1 && alpha != -1)
      throw UsageError("fixed-exterior generators need alpha +1 or -1");
    return {k, a, alpha, GenArtinCase::fixed_exterior,
            compose(a.twist(), power(z, alpha))};
  }
  throw CurveTypeError(
      "generalized Artin generators need a 2-curve or an all-but-one curve");
}

std::string expression_text(const TwistExpression& e) {
  if (e.symbols.empty()) return "1";
  std::string out;
  for (const auto& sym : e.symbols) {
    if (!out.empty()) out += " ";
    switch (sym.kind) {
      case SymbolKind::curve_full: out += "T" + interior_text(*sym.curve); break;
      case SymbolKind::curve_half: out += "H" + interior_text(*sym.curve); break;
      case SymbolKind::boundary: out += "d" + std::to_string(sym.label); break;
      case SymbolKind::outer: out += "out"; break;
    }
    if (sym.exponent != 1) out += "^" + std::to_string(sym.exponent);
  }
  return out;
}

TwistExpression iota_k_expression(const GenArtinGenerator& g) {
  const Curve& a = g.a;
  TwistExpression e{a.strands(), g.k, {}};
  switch (g.tag) {
    case GenArtinCase::half_twist:
      e.symbols.push_back({SymbolKind::curve_half, a, 0, +1});
      break;
    case GenArtinCase::full_twist:
      e.symbols.push_back({SymbolKind::curve_full, a, 0, +1});
      for (int p : a.interior())
        if (p <= g.k)
          e.symbols.push_back({SymbolKind::boundary, std::nullopt, p, -1});
      break;
    case GenArtinCase::moveable_exterior:
      // The full-twist corrections cancel against the embedded center.
      e.symbols.push_back({SymbolKind::curve_full, a, 0, +1});
      e.symbols.push_back({SymbolKind::outer, std::nullopt, 0, -1});
      break;
    case GenArtinCase::fixed_exterior: {
      const int ext = exterior_puncture(a);
      e.symbols.push_back({SymbolKind::curve_full, a, 0, +1});
      for (int p = 1; p <= g.k; ++p) {
        const int exp = p == ext ? -g.alpha : -1 - g.alpha;
        if (exp != 0)
          e.symbols.push_back({SymbolKind::boundary, std::nullopt, p, exp});
      }
      e.symbols.push_back({SymbolKind::outer, std::nullopt, 0, g.alpha});
      break;
    }
  }
  return e;
}

FramedBraid evaluate_framed(const TwistExpression& e) {
  std::vector<int> support;
  for (int p = 1; p <= e.k; ++p) support.push_back(p);
  FramedBraid acc = framed_identity(e.strands, support);
  for (const auto& sym : e.symbols) {
    FramedBraid factor = framed_identity(e.strands, support);
    switch (sym.kind) {
      case SymbolKind::curve_full:
        factor = cluster_twist(*sym.curve, support);
        break;
      case SymbolKind::curve_half:
        factor = iota(sym.curve->half_twist(), support);
        break;
      case SymbolKind::boundary:
        factor = boundary_twist(e.strands, support, sym.label);
        break;
      case SymbolKind::outer:
        factor = outer_twist(e.strands, support);
        break;
    }
    acc = framed_mul(acc, framed_power(factor, sym.exponent));
  }
  return acc;
}

TwistExpression psi_apply(const MappingClassSpec& f, const TwistExpression& e) {
  std::set<int> seen;
  for (int l = 0; l <= e.k; ++l) {
    const int to = f.boundary_image(l);
    if (to < 0 || to > e.k || !seen.insert(to).second)
      throw UsageError("boundary labels must permute the context labels");
  }
  TwistExpression out{e.strands, e.k, {}};
  for (const auto& sym : e.symbols) {
    TwistSymbol t = sym;
    t.exponent = sym.exponent * f.epsilon;
    if (sym.kind == SymbolKind::curve_full ||
        sym.kind == SymbolKind::curve_half) {
      t.curve = f.image_of(*sym.curve);
    } else {
      const int to = f.boundary_image(sym.kind == SymbolKind::outer ? 0
                                                                    : sym.label);
      t.kind = to == 0 ? SymbolKind::outer : SymbolKind::boundary;
      t.label = to;
    }
    out.symbols.push_back(std::move(t));
  }
  return out;
}

namespace {

BraidWord project(const TwistExpression& e, int kept_label) {
  BraidWord out(e.strands);
  for (const auto& sym : e.symbols) {
    switch (sym.kind) {
      case SymbolKind::curve_full:
        out = compose(out, power(sym.curve->twist(), sym.exponent));
        break;
      case SymbolKind::curve_half:
        out = compose(out, power(sym.curve->half_twist(), sym.exponent));
        break;
      case SymbolKind::boundary:
        if (sym.label < 1 || sym.label > e.k)
          throw UsageError("expression names a hole outside the context");
        if (sym.label == kept_label)
          out = compose(out,
                        power(center_generator(e.strands), sym.exponent));
        break;
      case SymbolKind::outer:
        out = compose(out, power(center_generator(e.strands), sym.exponent));
        break;
    }
  }
  return out;
}

}  // namespace

BraidWord pi_apply(const TwistExpression& e) { return project(e, 0); }

BraidWord pi_apply_faulty(const TwistExpression& e, int kept_label) {
  if (kept_label < 1 || kept_label > e.k)
    throw UsageError("the kept hole must be a context label");
  return project(e, kept_label);
}

XiResult xi_evaluate(int k, const MappingClassSpec& f,
                     const GenArtinGenerator& g) {
  if (k != g.k) throw UsageError("generator was built for a different context");
  if (f.strands != g.a.strands())
    throw StrandMismatchError("xi_evaluate: class on the wrong disk");
  XiResult r{iota_k_expression(g), TwistExpression{}, BraidWord(f.strands)};
  r.conjugated = psi_apply(f, r.embedded);
  r.word = pi_apply(r.conjugated);
  return r;
}

namespace {

struct CaseRep {
  std::string name;
  Curve a;
  int alpha;
};

std::vector<CaseRep> case_representatives(int n, bool all_cases) {
  const int s = n + 1;
  std::vector<CaseRep> reps;
  if (all_cases) {
    reps.push_back({"half-twist", Curve::standard(s, 2, 3), +1});
    reps.push_back({"full-twist", Curve::standard(s, 1, 2), +1});
    reps.push_back({"moveable-exterior", Curve::standard(s, 1, n), +1});
  }
  reps.push_back({"fixed-exterior alpha=+1", Curve::standard(s, 2, s), +1});
  reps.push_back({"fixed-exterior alpha=-1", Curve::standard(s, 2, s), -1});
  return reps;
}

}  // namespace

FormulaCheck xi1_formula_check(int n, const MappingClassSpec& f) {
  if (n < 3) throw UsageError("the formula check needs n >= 3");
  const int s = n + 1;
  if (f.strands != s)
    throw StrandMismatchError("xi1_formula_check: class on the wrong disk");
  if (f.geometric && puncture_action(f.braid)[0] != 0)
    throw UsageError("the class must fix puncture 1");
  const int delta = f.boundary_image(1) == 0 ? -1 : +1;

  std::ostringstream out;
  out << "check xi1-formula\n";
  out << "punctures " << s << " delta " << (delta > 0 ? "+1" : "-1")
      << " epsilon " << (f.epsilon > 0 ? "+1" : "-1") << "\n";
  bool pass = true;
  std::string witness;
  for (const auto& rep : case_representatives(n, f.geometric)) {
    GenArtinGenerator g = gen_artin_generator(1, rep.a, rep.alpha);
    XiResult res = xi_evaluate(1, f, g);
    GenArtinGenerator formula =
        gen_artin_generator(1, f.image_of(rep.a), delta * rep.alpha);
    const bool ok = equals(res.word, power(formula.word, f.epsilon));
    out << "case " << rep.name << "\n";
    out << "  lift " << expression_text(res.embedded) << "\n";
    out << "  conjugated " << expression_text(res.conjugated) << "\n";
    out << (ok ? "  ok" : "  MISMATCH") << "\n";
    if (!ok && pass) {
      pass = false;
      witness = rep.name;
    }
  }
  out << (pass ? "result pass\n" : "result FAIL\n");
  return {pass, witness, out.str()};
}

FormulaCheck xi1_functorial_check(int n, const MappingClassSpec& f,
                                  const MappingClassSpec& g) {
  if (n < 3) throw UsageError("the functoriality check needs n >= 3");
  MappingClassSpec fg = compose_specs(f, g);
  std::ostringstream out;
  out << "check xi1-functorial\n";
  out << "punctures " << n + 1 << "\n";
  bool pass = true;
  std::string witness;
  for (const auto& rep : case_representatives(n, true)) {
    GenArtinGenerator gen = gen_artin_generator(1, rep.a, rep.alpha);
    BraidWord joint = xi_evaluate(1, fg, gen).word;
    GenArtinGenerator mid =
        gen_artin_generator(1, g.image_of(rep.a), rep.alpha);
    BraidWord staged = power(xi_evaluate(1, f, mid).word, g.epsilon);
    const bool ok = equals(joint, staged);
    out << "case " << rep.name << (ok ? " ok" : " MISMATCH") << "\n";
    if (!ok && pass) {
      pass = false;
      witness = rep.name;
    }
  }
  out << (pass ? "result pass\n" : "result FAIL\n");
  return {pass, witness, out.str()};
}

CounterexampleReport xi_top_counterexample(int n) {
  if (n < 3) throw UsageError("the counterexample needs n >= 3");
  const int s = n + 1;
  const int k = s;
  const Curve a = Curve::standard(s, 2, s);
  const Curve a12 = Curve::standard(s, 1, 2);
  const BraidWord z = center_generator(s);

  // First class: fixes the first hole, feeds the outer boundary into the
  // second slot, pushes every other hole up by one; the last hole leaves
  // through the outer boundary.
  MappingClassSpec gs;
  gs.strands = s;
  gs.geometric = false;
  gs.boundary_images[1] = 1;
  gs.boundary_images[0] = 2;
  for (int i = 2; i <= n; ++i) gs.boundary_images[i] = i + 1;
  gs.boundary_images[n + 1] = 0;
  gs.curve_images.emplace(a.key(), a12);

  // Second class: undoes the shift and then swaps the first hole with the
  // outer boundary.
  MappingClassSpec fs;
  fs.strands = s;
  fs.geometric = false;
  fs.boundary_images[1] = 0;
  fs.boundary_images[2] = 1;
  for (int i = 3; i <= n + 1; ++i) fs.boundary_images[i] = i - 1;
  fs.boundary_images[0] = n + 1;
  fs.curve_images.emplace(a12.key(), a);

  // Their composite acts trivially on curves but swaps the first hole with
  // the outer boundary.
  MappingClassSpec fgs;
  fgs.strands = s;
  fgs.geometric = false;
  fgs.boundary_images[1] = 0;
  fgs.boundary_images[0] = 1;
  fgs.curve_images.emplace(a.key(), a);

  GenArtinGenerator gen = gen_artin_generator(k, a, -1);

  BraidWord stage_one = xi_evaluate(k, gs, gen).word;
  GenArtinGenerator mid = gen_artin_generator(k, a12);
  BraidWord stage_two = xi_evaluate(k, fs, mid).word;
  BraidWord joint = xi_evaluate(k, fgs, gen).word;

  const bool ok_one = equals(stage_one, a12.twist());
  const bool ok_two = equals(stage_two, compose(a.twist(), invert(z)));
  const bool ok_joint = equals(joint, compose(a.twist(), z));
  const bool differs = !equals(stage_two, joint);

  MappingClassSpec control = fgs;
  control.boundary_images.clear();
  BraidWord controlled = xi_evaluate(k, control, gen).word;
  const bool ok_control = equals(controlled, stage_two);

  std::ostringstream out;
  out << "check xi-top\n";
  out << "punctures " << s << " context " << k << "\n";
  out << "generator T_a z^-1 with a enclosing 2.." << s << "\n";
  out << "first class: T_a z^-1 -> T_a'  (a' enclosing 1,2)"
      << (ok_one ? "  ok" : "  MISMATCH") << "\n";
  out << "second class: T_a' -> T_a z^-1" << (ok_two ? "  ok" : "  MISMATCH")
      << "\n";
  out << "two stages together: T_a z^-1 -> T_a z^-1\n";
  out << "composite class: T_a z^-1 -> T_a z"
      << (ok_joint ? "  ok" : "  MISMATCH") << "\n";
  out << (differs ? "the two answers differ: not a homomorphism\n"
                  : "the two answers AGREE\n");
  out << "control with identity boundary labels agrees with the stages"
      << (ok_control ? "  ok" : "  MISMATCH") << "\n";
  const bool pass = ok_one && ok_two && ok_joint && differs && ok_control;
  out << (pass ? "result pass\n" : "result FAIL\n");
  return {pass, out.str()};
}

int InjectionGraph::node_slot(const std::string& name) const {
  std::string wanted = name;
  if (wanted == "ant" || wanted == "A~") wanted = "At";
  if (wanted == "an/Z") wanted = "G1";
  if (wanted == "cn/Z") wanted = "G2";
  if (wanted == "cnt" || wanted == "C~") wanted = "G3";
  if (wanted == "G" + std::to_string(m) ||
      wanted == "G" + std::to_string(m - 1))
    wanted = "PMod";
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == wanted) return static_cast<int>(i);
  return -1;
}

bool InjectionGraph::reachable(const std::string& from,
                               const std::string& to) const {
  const int src = node_slot(from), dst = node_slot(to);
  if (src < 0 || dst < 0) throw UsageError("unknown node name");
  std::vector<char> seen(nodes.size(), 0);
  std::vector<int> todo{src};
  seen[src] = 1;
  while (!todo.empty()) {
    const int at = todo.back();
    todo.pop_back();
    if (at == dst) return true;
    for (const auto& [u, v] : edges)
      if (u == at && !seen[v]) {
        seen[v] = 1;
        todo.push_back(v);
      }
  }
  return false;
}

InjectionGraph injection_graph(int m) {
  if (m < 5) throw UsageError("the injection graph needs m >= 5");
  InjectionGraph g;
  g.m = m;
  g.nodes.push_back("PMod");
  for (int k = m - 2; k >= 0; --k)
    g.nodes.push_back("G" + std::to_string(k));
  g.nodes.push_back("At");
  const int chain = static_cast<int>(g.nodes.size()) - 1;
  for (int i = 0; i + 1 < chain; ++i) g.edges.push_back({i, i + 1});
  g.edges.push_back({chain, g.node_slot("G2")});
  return g;
}

long long index_of_fixing_subgroup(int m, int k) {
  if (m < 2 || k < 0 || k > m)
    throw UsageError("index needs 0 <= k <= m punctures");
  return 2 * factorial(m) / factorial(m - k);
}

IndexTable index_table(int m) {
  if (m < 2 || m > 9)
    throw UsageError("coset enumeration stays exact for 2 <= m <= 9");
  std::ostringstream out;
  out << "check index-table\n";
  out << "punctures " << m << "\n";
  bool pass = true;
  for (int k = 0; k <= m; ++k) {
    // Left cosets of the orientation-preserving classes fixing punctures
    // 1..k, keyed by the sign and the images of the first k punctures.
    std::map<std::string, long long> buckets;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int sign = 0; sign < 2; ++sign) {
        std::string key(1, static_cast<char>('0' + sign));
        for (int t = 0; t < k; ++t) key += static_cast<char>('a' + perm[t]);
        ++buckets[key];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    const long long formula = index_of_fixing_subgroup(m, k);
    bool ok = static_cast<long long>(buckets.size()) == formula;
    for (const auto& [_, count] : buckets)
      ok = ok && count == factorial(m - k);
    out << "k " << k << " formula " << formula << " cosets " << buckets.size()
        << (ok ? " ok" : " MISMATCH") << "\n";
    pass = pass && ok;
  }
  out << (pass ? "result pass\n" : "result FAIL\n");
  return {pass, out.str()};
}

}  // namespace braidlab
