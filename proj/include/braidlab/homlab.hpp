#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/curve.hpp"
#include "braidlab/framed.hpp"

namespace braidlab {

// ---------------------------------------------------------------------------
// Finite presentations and generator-image homomorphism checking.

enum class Family { artin_a, artin_b, pure };

// Letter in an abstract word: 0-based generator slot, sign +1 or -1.
struct SourceLetter {
  int gen;
  int sign;
  bool operator==(const SourceLetter&) const = default;
};
using SourceWord = std::vector<SourceLetter>;

struct Relation {
  std::string name;
  SourceWord lhs, rhs;
};

struct Presentation {
  Family family;
  int n;
  std::vector<std::string> generator_names;
  std::vector<Relation> relations;

  int generator_count() const {
    return static_cast<int>(generator_names.size());
  }
};

// A-type: the braid group on n generators (braid + far commutation).
// B-type: chain with one length-four relation between the first two
// generators. pure: generators A[i,j] for 1 <= i < j <= n; every relation
// says A[i,j] commutes with a short word, so central corrections cancel
// from both sides of each relation.
Presentation presentation_of(Family family, int n);

// "artin-a", "artin-b", "pure".
std::string family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

// Strand count of the braid group the family's standard copy lives in.
int ambient_strands(Family family, int n);

// Word of the standard copy's central generator (maps to the full twist).
SourceWord center_word(const Presentation& p);

BraidWord substitute(const SourceWord& w,
                     const std::vector<BraidWord>& images, int strands);

struct EndomorphismSpec {
  Presentation source;
  std::vector<BraidWord> images;  // one per generator, same strand count
};

struct HomCheck {
  bool pass;
  std::string witness;  // name of the first failing relation
};

HomCheck check_homomorphism(const EndomorphismSpec& spec);

std::string endomorphism_to_text(const EndomorphismSpec& spec);

// Exponent e with rho(z) = z^e, computed from the images; nullopt when the
// image of the center is not a central power.
std::optional<long long> engine_z_exponent(const EndomorphismSpec& spec);

// ---------------------------------------------------------------------------
// Mapping classes of the punctured disk.

// Either geometric (a braid word, composed with a reflection when
// epsilon = -1) or extensional (explicit finite curve action). Boundary
// labels: 1..k name the distinguished punctures in context k; label 0 is
// the outer boundary. Missing labels map identically.
struct MappingClassSpec {
  int strands = 2;
  bool geometric = true;
  BraidWord braid;
  int epsilon = +1;
  std::map<int, int> boundary_images;
  std::map<std::string, Curve> curve_images;  // keyed by Curve::key()

  static MappingClassSpec from_braid(BraidWord w, int epsilon = +1);

  Curve image_of(const Curve& c) const;
  int boundary_image(int label) const;
};

// f after g, geometric specs only.
MappingClassSpec compose_specs(const MappingClassSpec& f,
                               const MappingClassSpec& g);

// ---------------------------------------------------------------------------
// The injection catalogue and its central-exponent arithmetic.

struct TransvectionParams {
  int t = 0;                // A-type: one exponent, all generators conjugate
  int u = 0, v = 0;         // B-type: first generator, then the rest
  std::vector<int> tij;     // pure: row-major over pairs i < j
};

EndomorphismSpec catalogue_injection(Family family, int n,
                                     const MappingClassSpec& f,
                                     const TransvectionParams& params);

// Exponent of z in the image of z, by formula, for orientation-preserving f.
long long z_image_exponent(Family family, int n,
                           const TransvectionParams& params);

enum class TransvectionClass {
  automorphism,
  injective_nonsurjective,
  non_injective,
};

struct TransvectionReport {
  TransvectionClass cls;
  long long z_exponent;
  // B-type: basis of the rank-one solution lattice of n*u + n*(n-1)*v = 0.
  std::optional<std::pair<long long, long long>> lattice_generator;
  std::string note;
};

TransvectionReport transvection_classify(Family family, int n,
                                         const TransvectionParams& params);

// For every n in [lo, hi], certifies that n*u + n*(n-1)*v = -2 has no
// integer solution (the left side is divisible by n >= 3, -2 is not), so
// no B-type transvection inverts the center.
struct UnsolvabilityCertificate {
  bool pass;
  std::string text;
};

UnsolvabilityCertificate no_center_inverting_transvection(int lo, int hi);

// ---------------------------------------------------------------------------
// Generalized Artin generators and the xi_k lifts.

enum class GenArtinCase {
  half_twist,          // 2-curve clear of the distinguished punctures
  full_twist,          // 2-curve touching them
  moveable_exterior,   // (s-1)-curve, exterior puncture not distinguished
  fixed_exterior,      // (s-1)-curve, exterior puncture distinguished
};

struct GenArtinGenerator {
  int k;
  Curve a;
  int alpha;  // only the fixed-exterior case reads it
  GenArtinCase tag;
  BraidWord word;
};

// Distinguished punctures are 1..k. The curve must enclose exactly two
// punctures or all but one; alpha must be +1 or -1 in the fixed-exterior
// case.
GenArtinGenerator gen_artin_generator(int k, const Curve& a, int alpha = +1);

// Formal product of twists about curves, hole boundaries, and the outer
// boundary of the k-holed disk.
enum class SymbolKind { curve_full, curve_half, boundary, outer };

struct TwistSymbol {
  SymbolKind kind;
  std::optional<Curve> curve;  // curve kinds only
  int label = 0;               // boundary kind only, in 1..k
  int exponent = +1;
};

struct TwistExpression {
  int strands;
  int k;
  std::vector<TwistSymbol> symbols;  // product, left to right
};

std::string expression_text(const TwistExpression& e);

// Lift of a generalized Artin generator into the k-holed disk: the twist
// about the curve itself times corrective boundary and outer twists.
TwistExpression iota_k_expression(const GenArtinGenerator& g);

// Evaluates an expression in the framed calculus over support {1..k};
// ground truth for the lift identities.
FramedBraid evaluate_framed(const TwistExpression& e);

// Symbol-wise action of a mapping class of the k-holed disk: curves map to
// their images, boundary labels permute, exponents flip with orientation.
TwistExpression psi_apply(const MappingClassSpec& f, const TwistExpression& e);

// Caps the k holes back to punctures: hole boundary twists die, the outer
// twist becomes the full twist.
BraidWord pi_apply(const TwistExpression& e);

// Corrupted variant: one hole twist is kept and read as if outer-parallel.
BraidWord pi_apply_faulty(const TwistExpression& e, int kept_label);

struct XiResult {
  TwistExpression embedded;
  TwistExpression conjugated;
  BraidWord word;
};

XiResult xi_evaluate(int k, const MappingClassSpec& f,
                     const GenArtinGenerator& g);

// ---------------------------------------------------------------------------
// The k=1 formula, its functoriality, and the k=n+1 failure.

struct FormulaCheck {
  bool pass;
  std::string witness;  // first failing case
  std::string transcript;
};

// Checks xi_1(f)(g(a, alpha)) = g(f(a), delta(f) * alpha)^epsilon(f) on one
// representative of each generator case. Geometric f must fix puncture 1;
// extensional f is checked on the fixed-exterior case only.
FormulaCheck xi1_formula_check(int n, const MappingClassSpec& f);

// Control for the same four representatives: evaluating the composite spec
// agrees with evaluating in two stages.
FormulaCheck xi1_functorial_check(int n, const MappingClassSpec& f,
                                  const MappingClassSpec& g);

struct CounterexampleReport {
  bool pass;  // the failure of composition is reproduced exactly
  std::string transcript;
};

// In context k = n+1 the lift is not functorial: a pair of extensional
// classes with f o g = identity on curves sends T_a z^-1 to T_a z. The
// identity-boundary control composes correctly.
CounterexampleReport xi_top_counterexample(int n);

// ---------------------------------------------------------------------------
// The injection partial order between puncture-fixing subgroups.

struct InjectionGraph {
  int m;  // punctures of the ambient sphere
  std::vector<std::string> nodes;
  std::vector<std::pair<int, int>> edges;  // directed, by node slot

  int node_slot(const std::string& name) const;  // -1 when absent
  bool reachable(const std::string& from, const std::string& to) const;
};

// Nodes G_0, ..., G_{m-2}, PMod (= G_{m-1} = G_m) and the odd A-tilde node
// with its single edge; edges run down the chain.
InjectionGraph injection_graph(int m);

// Subgroup index of G_k: orientation-preserving classes fixing punctures
// 1..k pointwise.
long long index_of_fixing_subgroup(int m, int k);

// Counts cosets directly over the sign-and-permutation quotient; matches
// the formula for every k when it passes.
struct IndexTable {
  bool pass;
  std::string text;
};

IndexTable index_table(int m);

}  // namespace braidlab
