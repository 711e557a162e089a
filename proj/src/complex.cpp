#include "braidlab/complex.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace braidlab {

int default_vertex_cap() {
  const char* env = std::getenv("BRAIDLAB_VERTEX_CAP");
  if (!env || !*env) return 100000;
  int value = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), value);
  if (ec != std::errc() || *ptr != '\0' || value < 1)
    throw ParseError("BRAIDLAB_VERTEX_CAP must be a positive integer");
  return value;
}

std::vector<Curve> round_curves(int strands) {
  std::vector<Curve> out;
  for (int size = 2; size <= strands - 1; ++size)
    for (int lo = 1; lo + size - 1 <= strands; ++lo)
      out.push_back(Curve::standard(strands, lo, lo + size - 1));
  return out;
}

std::vector<BraidWord> sigma_generators(int strands) {
  std::vector<BraidWord> out;
  for (int i = 1; i < strands; ++i) {
    out.push_back(BraidWord::generator(strands, i, +1));
    out.push_back(BraidWord::generator(strands, i, -1));
  }
  return out;
}

Ball::Ball(int strands, int radius, int cap, std::vector<Curve> seeds,
           std::vector<Curve> vertices, std::vector<std::pair<int, int>> edges)
    : strands_(strands),
      radius_(radius),
      cap_(cap),
      seeds_(std::move(seeds)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  const int n = size();
  for (const Curve& c : vertices_)
    if (c.strands() != strands_) throw UsageError("ball vertex strand mismatch");
  for (const Curve& c : seeds_)
    if (c.strands() != strands_) throw UsageError("ball seed strand mismatch");
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(vertices_[i].key(), i).second)
      throw UsageError("ball contains duplicate vertices");
  }
  disjoint_.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) disjoint_[i][i] = 1;
  for (const auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n || a >= b)
      throw UsageError("ball edge endpoints out of order or range");
    disjoint_[a][b] = disjoint_[b][a] = 1;
  }
}

int Ball::index_of(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

bool Ball::disjoint_in_ball(int i, int j) const { return disjoint_[i][j] != 0; }

Ball build_ball(const std::vector<Curve>& seeds, int radius, int cap) {
  if (seeds.empty()) throw UsageError("ball needs at least one seed curve");
  if (radius < 0) throw UsageError("ball radius must be nonnegative");
  const int strands = seeds.front().strands();
  for (const Curve& c : seeds)
    if (c.strands() != strands)
      throw StrandMismatchError("ball seeds have mixed strand counts");

  std::vector<Curve> vertices;
  std::map<std::string, int> index;
  auto add = [&](Curve c) {
    std::string key = c.key();
    if (index.count(key)) return;
    if (static_cast<int>(vertices.size()) >= cap)
      throw VertexCapError("ball exceeded vertex cap " + std::to_string(cap));
    index.emplace(std::move(key), static_cast<int>(vertices.size()));
    vertices.push_back(std::move(c));
  };

  for (const Curve& c : seeds) add(c);
  const std::vector<BraidWord> gens = sigma_generators(strands);
  size_t layer_begin = 0;
  for (int step = 0; step < radius; ++step) {
    const size_t layer_end = vertices.size();
    for (size_t v = layer_begin; v < layer_end; ++v) {
      for (const BraidWord& g : gens) add(apply_braid(g, vertices[v]));
    }
    layer_begin = layer_end;
  }

  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (is_disjoint(vertices[i], vertices[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));

  return Ball(strands, radius, cap, seeds, std::move(vertices), std::move(edges));
}

VertexMap induced_map(const Ball& ball, const BraidWord& g) {
  if (g.strands() != ball.strands())
    throw StrandMismatchError("induced_map: strand counts differ");
  VertexMap out;
  out.images.reserve(ball.size());
  for (const Curve& v : ball.vertices()) out.images.push_back(apply_braid(g, v));
  return out;
}

SuperinjectivityReport check_superinjective(const Ball& ball, const VertexMap& map) {
  const int n = ball.size();
  if (static_cast<int>(map.images.size()) != n)
    throw UsageError("vertex map size does not match ball");
  for (const Curve& c : map.images)
    if (c.strands() != ball.strands())
      throw StrandMismatchError("vertex map image strand mismatch");

  SuperinjectivityReport rep;
  rep.preserves_disjointness = true;
  rep.injective = true;

  std::map<std::string, int> seen;
  for (int i = 0; i < n && rep.injective; ++i) {
    auto [it, fresh] = seen.emplace(map.images[i].key(), i);
    if (!fresh) {
      rep.injective = false;
      rep.collision = {it->second, i};
    }
  }

  for (int i = 0; i < n && rep.preserves_disjointness; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool before = ball.disjoint_in_ball(i, j);
      const bool after = is_disjoint(map.images[i], map.images[j]);
      if (before != after) {
        rep.preserves_disjointness = false;
        rep.disjointness_witness = {i, j};
        break;
      }
    }
  }
  return rep;
}

std::string to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::sides: return "sides";
    case CheckMode::types: return "types";
    case CheckMode::adjacency: return "adjacency";
  }
  return "?";
}

std::optional<CheckMode> check_mode_from_string(std::string_view name) {
  if (name == "sides") return CheckMode::sides;
  if (name == "types") return CheckMode::types;
  if (name == "adjacency") return CheckMode::adjacency;
  return std::nullopt;
}

namespace {

// Strict containment of enclosed puncture sets; the inside of a curve pair
// that is known to be disjoint.
bool inside_of(const Curve& a, const Curve& w) {
  if (a.interior().size() >= w.interior().size()) return false;
  return std::includes(w.interior().begin(), w.interior().end(),
                       a.interior().begin(), a.interior().end());
}

}  // namespace

PropertyReport check_map_property(const Ball& ball, const VertexMap& map, CheckMode mode) {
  PropertyReport rep;
  rep.mode = mode;
  rep.searched_radius = ball.radius();

  const SuperinjectivityReport super = check_superinjective(ball, map);
  if (!super.pass()) {
    rep.status = PropertyReport::Status::precondition_failed;
    if (!super.preserves_disjointness) {
      rep.detail = "map does not preserve disjointness both ways at pair (" +
                   std::to_string(super.disjointness_witness->first) + "," +
                   std::to_string(super.disjointness_witness->second) + ")";
      rep.witness = {super.disjointness_witness->first, super.disjointness_witness->second};
    } else {
      rep.detail = "map is not injective: vertices " +
                   std::to_string(super.collision->first) + " and " +
                   std::to_string(super.collision->second) + " collide";
      rep.witness = {super.collision->first, super.collision->second};
    }
    return rep;
  }

  const std::vector<Curve>& vs = ball.vertices();
  const int n = ball.size();

  switch (mode) {
    case CheckMode::sides: {
      for (int w = 0; w < n; ++w) {
        std::vector<int> neighbors;
        for (int a = 0; a < n; ++a)
          if (a != w && ball.disjoint_in_ball(a, w)) neighbors.push_back(a);
        for (size_t x = 0; x < neighbors.size(); ++x) {
          for (size_t y = x + 1; y < neighbors.size(); ++y) {
            const int a = neighbors[x], b = neighbors[y];
            if (inside_of(vs[a], vs[w]) != inside_of(vs[b], vs[w])) continue;
            const bool img_a_in = inside_of(map.images[a], map.images[w]);
            const bool img_b_in = inside_of(map.images[b], map.images[w]);
            if (img_a_in == img_b_in) continue;
            rep.status = PropertyReport::Status::fail;
            rep.witness = {a, b, w};
            for (int d = 0; d < n && !rep.witness_in_ball; ++d) {
              if (!ball.disjoint_in_ball(d, a) && !ball.disjoint_in_ball(d, b) &&
                  ball.disjoint_in_ball(d, w) && d != w) {
                rep.witness_in_ball = true;
              }
            }
            rep.detail = "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                         " share a side of " + std::to_string(w) +
                         " but their images do not";
            return rep;
          }
        }
      }
      break;
    }
    case CheckMode::types: {
      for (int v = 0; v < n; ++v) {
        if (sphere_type(vs[v]) != sphere_type(map.images[v])) {
          rep.status = PropertyReport::Status::fail;
          rep.witness = {v};
          rep.detail = "vertex " + std::to_string(v) + " has type " +
                       std::to_string(sphere_type(vs[v])) + " but its image has type " +
                       std::to_string(sphere_type(map.images[v]));
          return rep;
        }
      }
      break;
    }
    case CheckMode::adjacency: {
      for (int i = 0; i < n; ++i) {
        if (!is_two_curve(vs[i])) continue;
        for (int j = i + 1; j < n; ++j) {
          if (!is_two_curve(vs[j])) continue;
          if (!is_adjacent(vs[i], vs[j])) continue;
          if (!is_two_curve(map.images[i]) || !is_two_curve(map.images[j])) {
            const int bad = !is_two_curve(map.images[i]) ? i : j;
            rep.status = PropertyReport::Status::precondition_failed;
            rep.witness = {bad};
            rep.detail = "image of vertex " + std::to_string(bad) +
                         " is not a two-curve, adjacency undefined";
            return rep;
          }
          if (!is_adjacent(map.images[i], map.images[j])) {
            rep.status = PropertyReport::Status::fail;
            rep.witness = {i, j};
            rep.detail = "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                         " are adjacent but their images are not";
            return rep;
          }
        }
      }
      break;
    }
  }
  rep.status = PropertyReport::Status::pass;
  return rep;
}

namespace {

void grow_clique(const Ball& ball, std::vector<int>& cands, size_t depth, int& best) {
  if (static_cast<int>(depth + cands.size()) <= best) return;
  for (size_t k = 0; k < cands.size(); ++k) {
    if (static_cast<int>(depth + (cands.size() - k)) <= best) return;
    std::vector<int> next;
    for (size_t j = k + 1; j < cands.size(); ++j)
      if (ball.disjoint_in_ball(cands[k], cands[j])) next.push_back(cands[j]);
    best = std::max(best, static_cast<int>(depth + 1));
    grow_clique(ball, next, depth + 1, best);
  }
}

}  // namespace

int max_pairwise_disjoint(const Ball& ball) {
  std::vector<int> all(ball.size());
  std::iota(all.begin(), all.end(), 0);
  int best = 0;
  grow_clique(ball, all, 0, best);
  return best;
}

std::string ball_to_text(const Ball& ball) {
  std::ostringstream os;
  os << "braidlab-ball v1\n";
  os << "strands " << ball.strands() << "\n";
  os << "radius " << ball.radius() << "\n";
  os << "cap " << ball.cap() << "\n";
  os << "generators";
  for (const BraidWord& g : sigma_generators(ball.strands())) os << " " << g.text();
  os << "\n";
  os << "seeds " << ball.seeds().size() << "\n";
  for (const Curve& c : ball.seeds()) os << curve_to_text(c) << "\n";
  os << "vertices " << ball.size() << "\n";
  for (const Curve& c : ball.vertices()) os << curve_to_text(c) << "\n";
  os << "edges " << ball.edges().size() << "\n";
  for (const auto& [a, b] : ball.edges()) os << a << " " << b << "\n";
  return os.str();
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

int parse_header_int(const std::string& line, const std::string& name) {
  if (line.rfind(name + " ", 0) != 0)
    throw ParseError("expected '" + name + "' line, got: " + line);
  try {
    return std::stoi(line.substr(name.size() + 1));
  } catch (const std::exception&) {
    throw ParseError("bad integer in '" + name + "' line");
  }
}

}  // namespace

Ball ball_from_text(std::string_view text) {
  std::vector<std::string> lines = split_lines(text);
  size_t at = 0;
  auto next_line = [&]() -> const std::string& {
    if (at >= lines.size()) throw ParseError("ball file truncated");
    return lines[at++];
  };
  if (next_line() != "braidlab-ball v1") throw ParseError("not a braidlab-ball v1 file");
  const int strands = parse_header_int(next_line(), "strands");
  const int radius = parse_header_int(next_line(), "radius");
  const int cap = parse_header_int(next_line(), "cap");
  const std::string& gens = next_line();
  if (gens.rfind("generators", 0) != 0) throw ParseError("expected 'generators' line");
  const int seed_count = parse_header_int(next_line(), "seeds");
  std::vector<Curve> seeds;
  for (int i = 0; i < seed_count; ++i) seeds.push_back(curve_from_text(next_line()));
  const int vertex_count = parse_header_int(next_line(), "vertices");
  std::vector<Curve> vertices;
  for (int i = 0; i < vertex_count; ++i) vertices.push_back(curve_from_text(next_line()));
  const int edge_count = parse_header_int(next_line(), "edges");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < edge_count; ++i) {
    std::istringstream is(next_line());
    int a = -1, b = -1;
    if (!(is >> a >> b)) throw ParseError("bad edge line");
    edges.emplace_back(a, b);
  }
  try {
    return Ball(strands, radius, cap, std::move(seeds), std::move(vertices),
                std::move(edges));
  } catch (const UsageError& e) {
    throw ParseError(std::string("inconsistent ball file: ") + e.what());
  }
}

std::string map_to_text(const Ball& ball, const VertexMap& map) {
  if (map.images.size() != static_cast<size_t>(ball.size()))
    throw UsageError("vertex map size does not match ball");
  std::ostringstream os;
  os << "braidlab-map v1\n";
  os << "vertices " << map.images.size() << "\n";
  for (const Curve& c : map.images) os << curve_to_text(c) << "\n";
  return os.str();
}

VertexMap map_from_text(const Ball& ball, std::string_view text) {
  std::vector<std::string> lines = split_lines(text);
  size_t at = 0;
  auto next_line = [&]() -> const std::string& {
    if (at >= lines.size()) throw ParseError("map file truncated");
    return lines[at++];
  };
  if (next_line() != "braidlab-map v1") throw ParseError("not a braidlab-map v1 file");
  const int count = parse_header_int(next_line(), "vertices");
  if (count != ball.size())
    throw ParseError("map vertex count does not match ball");
  VertexMap out;
  for (int i = 0; i < count; ++i) {
    out.images.push_back(curve_from_text(next_line()));
    if (out.images.back().strands() != ball.strands())
      throw ParseError("map image strand count does not match ball");
  }
  return out;
}

std::string ball_to_dot(const Ball& ball) {
  std::ostringstream os;
  os << "graph ball {\n";
  for (int i = 0; i < ball.size(); ++i) {
    os << "  v" << i << " [label=\"" << i << ": {";
    const auto& in = ball.vertices()[i].interior();
    for (size_t k = 0; k < in.size(); ++k) {
      if (k) os << ",";
      os << in[k];
    }
    os << "}\"];\n";
  }
  for (const auto& [a, b] : ball.edges()) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

long long slope_det(const FareySlope& a, const FareySlope& b) {
  return a.p * b.q - b.p * a.q;
}

FareySlope normalize_slope(long long p, long long q) {
  if (p == 0 && q == 0) throw UsageError("slope 0/0");
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

bool unit_det(const FareySlope& a, const FareySlope& b) {
  const long long d = slope_det(a, b);
  return d == 1 || d == -1;
}

}  // namespace

FareyBall::FareyBall(int depth, std::vector<FareySlope> vertices,
                     std::vector<FareyTriangle> triangles)
    : depth_(depth), vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!index_.emplace(std::make_pair(vertices_[i].p, vertices_[i].q), i).second)
      throw UsageError("duplicate slope in Farey ball");
  }
  const int n = static_cast<int>(vertices_.size());
  for (const FareyTriangle& t : triangles_) {
    if (t.u < 0 || t.u >= n || t.apex < 0 || t.apex >= n || t.v < 0 || t.v >= n)
      throw UsageError("Farey triangle vertex out of range");
  }
}

int FareyBall::index_of(const FareySlope& s) const {
  auto it = index_.find(std::make_pair(s.p, s.q));
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> FareyBall::edges() const {
  std::set<std::pair<int, int>> out;
  auto put = [&](int a, int b) { out.emplace(std::min(a, b), std::max(a, b)); };
  for (const FareyTriangle& t : triangles_) {
    put(t.u, t.apex);
    put(t.apex, t.v);
    put(t.u, t.v);
  }
  return {out.begin(), out.end()};
}

FareyBall farey_ball(int depth) {
  if (depth < 0 || depth > 20) throw UsageError("Farey ball depth must be in 0..20");
  std::vector<FareySlope> vertices = {{0, 1}, {1, 1}, {1, 0}};
  std::vector<FareyTriangle> triangles = {{0, 1, 2, -1, -1}};
  size_t layer_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const size_t layer_end = triangles.size();
    for (size_t t = layer_begin; t < layer_end; ++t) {
      const FareyTriangle tri = triangles[t];
      for (int side = 0; side < 2; ++side) {
        const int x = side == 0 ? tri.u : tri.apex;
        const int y = side == 0 ? tri.apex : tri.v;
        const int away = side == 0 ? tri.v : tri.u;
        const FareySlope m = normalize_slope(vertices[x].p + vertices[y].p,
                                             vertices[x].q + vertices[y].q);
        const int m_idx = static_cast<int>(vertices.size());
        vertices.push_back(m);
        triangles.push_back(FareyTriangle{x, m_idx, y, static_cast<int>(t), away});
      }
    }
    layer_begin = layer_end;
  }
  return FareyBall(depth, std::move(vertices), std::move(triangles));
}

FareySlope farey_extend_triangle(const FareySlope& u, const FareySlope& v,
                                 const FareySlope& avoid) {
  if (!unit_det(u, v) || !unit_det(u, avoid) || !unit_det(v, avoid))
    throw UsageError("not a Farey triangle");
  const FareySlope mediant = normalize_slope(u.p + v.p, u.q + v.q);
  const FareySlope comediant = normalize_slope(u.p - v.p, u.q - v.q);
  if (mediant == avoid) return comediant;
  if (comediant == avoid) return mediant;
  throw UsageError("avoided slope does not complete the edge");
}

std::vector<FareySlope> farey_extend_map(const FareyBall& ball, const FareySlope& img_u,
                                         const FareySlope& img_apex,
                                         const FareySlope& img_v) {
  if (!unit_det(img_u, img_apex) || !unit_det(img_apex, img_v) || !unit_det(img_u, img_v))
    throw UsageError("base images do not form a Farey triangle");
  if (ball.triangles().empty()) throw UsageError("Farey ball has no root triangle");
  std::vector<FareySlope> images(ball.vertices().size());
  const FareyTriangle& root = ball.triangles().front();
  images[root.u] = img_u;
  images[root.apex] = img_apex;
  images[root.v] = img_v;
  for (size_t t = 1; t < ball.triangles().size(); ++t) {
    const FareyTriangle& tri = ball.triangles()[t];
    images[tri.apex] =
        farey_extend_triangle(images[tri.u], images[tri.v], images[tri.avoid]);
  }
  return images;
}

}  // namespace braidlab
