#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidlab/curve.hpp"

namespace braidlab {

// 100000 unless the BRAIDLAB_VERTEX_CAP environment variable overrides it.
int default_vertex_cap();

// Every curve bounded by an interval of punctures, no conjugation.
std::vector<Curve> round_curves(int strands);

// s_1, s_1^{-1}, s_2, s_2^{-1}, ...: the move set used by ball search.
std::vector<BraidWord> sigma_generators(int strands);

// Vertices reachable from the seeds by at most `radius` generator moves,
// in deterministic discovery order, with the disjointness graph on them.
class Ball {
 public:
  Ball(int strands, int radius, int cap, std::vector<Curve> seeds,
       std::vector<Curve> vertices, std::vector<std::pair<int, int>> edges);

  int strands() const { return strands_; }
  int radius() const { return radius_; }
  int cap() const { return cap_; }
  const std::vector<Curve>& seeds() const { return seeds_; }
  const std::vector<Curve>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  // Index of the vertex with this canonical key, or -1.
  int index_of(const std::string& key) const;

  // Disjointness read off the precomputed graph; i == j counts as disjoint.
  bool disjoint_in_ball(int i, int j) const;

 private:
  int strands_, radius_, cap_;
  std::vector<Curve> seeds_;
  std::vector<Curve> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<char>> disjoint_;
  std::map<std::string, int> index_;
};

// Throws VertexCapError when the ball would exceed `cap` vertices.
Ball build_ball(const std::vector<Curve>& seeds, int radius, int cap = default_vertex_cap());

// A map on ball vertices given by arbitrary image curves.
struct VertexMap {
  std::vector<Curve> images;
};

// The map each vertex v -> g(v). Images can leave the ball.
VertexMap induced_map(const Ball& ball, const BraidWord& g);

struct SuperinjectivityReport {
  bool preserves_disjointness = false;
  bool injective = false;
  // First pair where disjointness before and after disagree.
  std::optional<std::pair<int, int>> disjointness_witness;
  // First pair of distinct vertices with equal images.
  std::optional<std::pair<int, int>> collision;
  bool pass() const { return preserves_disjointness && injective; }
};

SuperinjectivityReport check_superinjective(const Ball& ball, const VertexMap& map);

// Necessary conditions for a vertex map to come from a homeomorphism.
//  sides:      vertices on a common side of a curve stay on a common side;
//  types:      the two-sided puncture count split of each vertex is kept;
//  adjacency:  adjacent two-curves stay adjacent.
enum class CheckMode { sides, types, adjacency };

std::string to_string(CheckMode mode);
std::optional<CheckMode> check_mode_from_string(std::string_view name);

struct PropertyReport {
  CheckMode mode = CheckMode::sides;
  enum class Status { pass, fail, precondition_failed } status = Status::pass;
  // Radius of the ball the search covered.
  int searched_radius = 0;
  std::string detail;
  // Vertex indices demonstrating a failure (sides: a, b, w; types: v;
  // adjacency: a, b).
  std::vector<int> witness;
  // Sides mode: true when some ball vertex crosses both a and b while
  // missing w. Such a witness makes the violation impossible for maps that
  // pass the superinjectivity precondition, so honest failures carry false.
  bool witness_in_ball = false;
};

// Precondition for every mode: check_superinjective passes.
PropertyReport check_map_property(const Ball& ball, const VertexMap& map, CheckMode mode);

// Size of the largest set of pairwise disjoint distinct vertices.
int max_pairwise_disjoint(const Ball& ball);

std::string ball_to_text(const Ball& ball);
Ball ball_from_text(std::string_view text);
std::string map_to_text(const Ball& ball, const VertexMap& map);
VertexMap map_from_text(const Ball& ball, std::string_view text);
std::string ball_to_dot(const Ball& ball);

// One triangle of the Farey tessellation: apex is the vertex added last,
// (u, v) is the edge shared with the parent, and `avoid` is the parent's
// vertex opposite that edge (-1 on the root).
struct FareyTriangle {
  int u, apex, v;
  int parent;
  int avoid;
};

// The finite chunk of the tessellation grown from (0/1, 1/1, 1/0) by
// splitting every non-root edge `depth` times.
class FareyBall {
 public:
  FareyBall(int depth, std::vector<FareySlope> vertices,
            std::vector<FareyTriangle> triangles);

  int depth() const { return depth_; }
  const std::vector<FareySlope>& vertices() const { return vertices_; }
  const std::vector<FareyTriangle>& triangles() const { return triangles_; }
  std::vector<std::pair<int, int>> edges() const;
  int index_of(const FareySlope& s) const;

 private:
  int depth_;
  std::vector<FareySlope> vertices_;
  std::vector<FareyTriangle> triangles_;
  std::map<std::pair<long long, long long>, int> index_;
};

FareyBall farey_ball(int depth);

// The completion of edge (u, v) other than `avoid`. Requires (u, v, avoid)
// to be a Farey triangle: all pairwise determinants of magnitude one.
FareySlope farey_extend_triangle(const FareySlope& u, const FareySlope& v,
                                 const FareySlope& avoid);

// Images of all ball vertices forced by sending the root triangle to
// (img_u, img_apex, img_v), propagated triangle by triangle.
std::vector<FareySlope> farey_extend_map(const FareyBall& ball, const FareySlope& img_u,
                                         const FareySlope& img_apex,
                                         const FareySlope& img_v);

}  // namespace braidlab
