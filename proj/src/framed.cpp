#include "braidlab/framed.hpp"

#include <algorithm>
#include <sstream>

namespace braidlab {

namespace {

int support_index(const std::vector<int>& support, int hole) {
  auto it = std::lower_bound(support.begin(), support.end(), hole);
  if (it == support.end() || *it != hole) return -1;
  return static_cast<int>(it - support.begin());
}

// Coordinate permutation induced by a word: the coordinate at hole h is
// read from the hole h lands on. Requires the support to be invariant.
std::vector<long long> permuted_framing(const BraidWord& word,
                                        const std::vector<int>& support,
                                        const std::vector<long long>& v) {
  const Permutation p = word_permutation(word);
  std::vector<long long> out(v.size());
  for (size_t t = 0; t < support.size(); ++t) {
    const int image = p.table()[support[t] - 1] + 1;
    const int idx = support_index(support, image);
    if (idx < 0)
      throw SupportError("word moves hole " + std::to_string(support[t]) +
                         " off the support");
    out[t] = v[idx];
  }
  return out;
}

void require_compatible(const FramedBraid& a, const FramedBraid& b) {
  if (a.strands() != b.strands())
    throw StrandMismatchError("framed braids have different strand counts");
  if (a.support() != b.support())
    throw SupportError("framed braids have different supports");
}

}  // namespace

FramedBraid::FramedBraid(BraidWord word, std::vector<int> support,
                         std::vector<long long> framing)
    : word_(std::move(word)),
      support_(std::move(support)),
      framing_(std::move(framing)) {
  for (size_t t = 0; t < support_.size(); ++t) {
    if (support_[t] < 1 || support_[t] > word_.strands())
      throw SupportError("hole position out of range");
    if (t > 0 && support_[t] <= support_[t - 1])
      throw SupportError("support must be strictly increasing");
  }
  if (framing_.size() != support_.size())
    throw SupportError("framing length must match support size");
}

std::vector<int> full_support(int strands) {
  std::vector<int> all(strands);
  for (int i = 0; i < strands; ++i) all[i] = i + 1;
  return all;
}

FramedBraid framed_identity(int strands, std::vector<int> support) {
  std::vector<long long> zero(support.size(), 0);
  return FramedBraid(BraidWord(strands), std::move(support), std::move(zero));
}

FramedBraid framed_mul(const FramedBraid& a, const FramedBraid& b) {
  require_compatible(a, b);
  std::vector<long long> moved = permuted_framing(a.word(), a.support(), b.framing());
  for (size_t t = 0; t < moved.size(); ++t) moved[t] += a.framing()[t];
  return FramedBraid(compose(a.word(), b.word()), a.support(), std::move(moved));
}

FramedBraid framed_inv(const FramedBraid& a) {
  BraidWord inv = invert(a.word());
  std::vector<long long> moved = permuted_framing(inv, a.support(), a.framing());
  for (long long& x : moved) x = -x;
  return FramedBraid(std::move(inv), a.support(), std::move(moved));
}

FramedBraid framed_power(const FramedBraid& a, int exponent) {
  FramedBraid base = exponent < 0 ? framed_inv(a) : a;
  int reps = exponent < 0 ? -exponent : exponent;
  FramedBraid acc = framed_identity(a.strands(), a.support());
  for (int k = 0; k < reps; ++k) acc = framed_mul(acc, base);
  return acc;
}

bool framed_equals(const FramedBraid& a, const FramedBraid& b) {
  require_compatible(a, b);
  return a.framing() == b.framing() && equals(a.word(), b.word());
}

FramedBraid boundary_twist(int strands, const std::vector<int>& support,
                           int hole) {
  const int idx = support_index(support, hole);
  if (idx < 0) throw SupportError("boundary twist about a capped hole");
  std::vector<long long> framing(support.size(), 0);
  framing[idx] = 1;
  return FramedBraid(BraidWord(strands), support, std::move(framing));
}

FramedBraid cluster_twist(int strands, const std::vector<int>& support,
                          int lo, int hi) {
  BraidWord word = interval_twist_word(strands, lo, hi);
  std::vector<long long> framing(support.size(), 0);
  for (size_t t = 0; t < support.size(); ++t)
    if (support[t] >= lo && support[t] <= hi) framing[t] = 1;
  return FramedBraid(std::move(word), support, std::move(framing));
}

FramedBraid cluster_twist(const Curve& cluster,
                          const std::vector<int>& support) {
  std::vector<long long> framing(support.size(), 0);
  for (int p : cluster.interior()) {
    const int idx = support_index(support, p);
    if (idx >= 0) framing[idx] = 1;
  }
  return FramedBraid(cluster.twist(), support, std::move(framing));
}

FramedBraid outer_twist(int strands, std::vector<int> support) {
  std::vector<long long> ones(support.size(), 1);
  return FramedBraid(center_generator(strands), std::move(support),
                     std::move(ones));
}

FramedBraid iota(BraidWord word, std::vector<int> support) {
  std::vector<long long> zero(support.size(), 0);
  return FramedBraid(std::move(word), std::move(support), std::move(zero));
}

FramedBraid cap_holes(const FramedBraid& a, const std::vector<int>& capped) {
  for (int hole : capped)
    if (support_index(a.support(), hole) < 0)
      throw SupportError("capping a hole outside the support");
  std::vector<int> kept;
  std::vector<long long> framing;
  for (size_t t = 0; t < a.support().size(); ++t) {
    if (std::find(capped.begin(), capped.end(), a.support()[t]) != capped.end())
      continue;
    kept.push_back(a.support()[t]);
    framing.push_back(a.framing()[t]);
  }
  return FramedBraid(a.word(), std::move(kept), std::move(framing));
}

BraidWord cap_pi(const FramedBraid& a) { return a.word(); }

namespace {

std::string framed_render(const FramedBraid& a) {
  std::ostringstream out;
  out << normal_form(a.word()).render() << " framing (";
  for (size_t t = 0; t < a.framing().size(); ++t) {
    if (t) out << ',';
    out << a.framing()[t];
  }
  out << ')';
  return out.str();
}

void record(std::ostringstream& out, bool& pass, const std::string& name,
            const FramedBraid& lhs, const FramedBraid& rhs) {
  const bool ok = framed_equals(lhs, rhs);
  pass = pass && ok;
  out << "identity " << name << '\n';
  out << "  lhs " << framed_render(lhs) << '\n';
  out << "  rhs " << framed_render(rhs) << '\n';
  out << (ok ? "  ok" : "  MISMATCH") << '\n';
}

}  // namespace

LanternCertificate verify_generalized_lantern(int n) {
  if (n < 2) throw UsageError("generalized lantern needs n >= 2");
  const int s = n + 1;
  const std::vector<int> holes = full_support(s);

  LanternCertificate cert;
  cert.pass = true;
  std::ostringstream out;
  out << "check generalized-lantern\n";
  out << "holes " << s << '\n';

  // Per-step reductions: the plain word pushing strand i around the rest
  // embeds as a quotient of two nested cluster twists.
  for (int i = 1; i <= n; ++i) {
    BraidWord gi(s);
    for (int j = i + 1; j <= s; ++j)
      gi = compose(gi, pure_generator(s, i, j));
    FramedBraid lhs = iota(gi, holes);
    FramedBraid inner = (i + 1 < s)
                            ? cluster_twist(s, holes, i + 1, s)
                            : boundary_twist(s, holes, s);
    FramedBraid rhs = framed_mul(
        framed_mul(cluster_twist(s, holes, i, s), framed_inv(inner)),
        framed_inv(boundary_twist(s, holes, i)));
    record(out, cert.pass, "step-" + std::to_string(i), lhs, rhs);
  }

  // Plain form: the product of all pair twists, rows in order, equals
  // every hole twisted n-1 times together with one outer twist.
  FramedBraid plain = framed_identity(s, holes);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= s; ++j)
      plain = framed_mul(plain, cluster_twist(pair_curve(s, i, j), holes));
  FramedBraid rhs = framed_identity(s, holes);
  for (int i = 1; i <= s; ++i)
    rhs = framed_mul(rhs, framed_power(boundary_twist(s, holes, i), n - 1));
  rhs = framed_mul(rhs, outer_twist(s, holes));
  record(out, cert.pass, "plain-form", plain, rhs);

  const std::vector<long long> expected(s, n);
  const bool framing_ok = plain.framing() == expected;
  cert.pass = cert.pass && framing_ok;
  out << "identity plain-form-framing\n";
  out << "  lhs total framing per hole " << plain.framing()[0] << '\n';
  out << "  rhs " << n << " per hole\n";
  out << (framing_ok ? "  ok" : "  MISMATCH") << '\n';

  // Image of the full twist: one negative twist per hole, one outer.
  FramedBraid full = framed_identity(s, holes);
  for (int i = 1; i <= s; ++i)
    full = framed_mul(full, framed_inv(boundary_twist(s, holes, i)));
  full = framed_mul(full, outer_twist(s, holes));
  record(out, cert.pass, "full-twist-image", iota(center_generator(s), holes),
         full);

  out << "result " << (cert.pass ? "pass" : "FAIL") << '\n';
  cert.text = out.str();
  return cert;
}

}  // namespace braidlab
