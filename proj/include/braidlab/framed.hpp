#pragma once
// Mapping classes of a disk in which some punctures are thickened into
// holes with framings. An element is a braid word plus an integer twist
// count per hole; the pure part splits as braid x lattice, and non-pure
// words permute the lattice coordinates by strand tracking.
//
// Worked 3-strand example of the permutation action, full support:
//   (sigma_1, (0,0,0)) * (identity, (1,0,0)) = (sigma_1, (0,1,0))
// because sigma_1 carries the hole at position 1 to position 2, so the
// later twist about hole 1 is seen at position 2 in front. The opposite
// order gives (sigma_1, (1,0,0)); the two differ, as they must.

#include <string>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/curve.hpp"
#include "braidlab/errors.hpp"

namespace braidlab {

class FramedBraid {
 public:
  // support lists the hole positions (1-based, strictly increasing);
  // framing is aligned with it. Punctures outside the support are capped.
  FramedBraid(BraidWord word, std::vector<int> support,
              std::vector<long long> framing);

  int strands() const { return word_.strands(); }
  const BraidWord& word() const { return word_; }
  const std::vector<int>& support() const { return support_; }
  const std::vector<long long>& framing() const { return framing_; }

 private:
  BraidWord word_;
  std::vector<int> support_;
  std::vector<long long> framing_;
};

std::vector<int> full_support(int strands);

FramedBraid framed_identity(int strands, std::vector<int> support);

// (a,u)(b,v) = (ab, u + rho(a) v). Requires a's permutation to keep the
// support setwise invariant; otherwise the product leaves the group.
FramedBraid framed_mul(const FramedBraid& a, const FramedBraid& b);
FramedBraid framed_inv(const FramedBraid& a);
FramedBraid framed_power(const FramedBraid& a, int exponent);
bool framed_equals(const FramedBraid& a, const FramedBraid& b);

// Twist about one hole's own boundary: trivial word, unit framing.
FramedBraid boundary_twist(int strands, const std::vector<int>& support,
                           int hole);

// Twist about a curve enclosing the punctures lo..hi: the plain interval
// twist word plus one framing unit per enclosed hole.
FramedBraid cluster_twist(int strands, const std::vector<int>& support,
                          int lo, int hi);
// Same for a deformed cluster: the curve's own twist word, framing summed
// over the holes its interior encloses.
FramedBraid cluster_twist(const Curve& cluster,
                          const std::vector<int>& support);

// Twist about the outer boundary: the full twist, one unit per hole.
FramedBraid outer_twist(int strands, std::vector<int> support);

// Zero-framing section of the capping map; a homomorphism.
FramedBraid iota(BraidWord word, std::vector<int> support);

// Glue punctured disks into the listed holes, deleting their framing
// coordinates. A quotient homomorphism.
FramedBraid cap_holes(const FramedBraid& a, const std::vector<int>& capped);

// Cap every hole: only the braid word survives.
BraidWord cap_pi(const FramedBraid& a);

struct LanternCertificate {
  bool pass = false;
  std::string text;  // one block per identity, both sides normalized
};

// Checks the generalized lantern relation on n+1 holes: the per-step
// reductions, the plain product-of-pair-twists form, and the image of the
// full twist. Failure is reported in the certificate, never thrown.
LanternCertificate verify_generalized_lantern(int n);

}  // namespace braidlab
