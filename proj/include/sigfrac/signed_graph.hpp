#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sigfrac/bits.hpp"
#include "sigfrac/errors.hpp"

namespace sigfrac {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}

inline constexpr Sign flip(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

inline constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

struct SignedEdge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  Sign sign = Sign::Positive;

  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

using VertexPair = std::pair<Vertex, Vertex>;

/// A simple loop-free graph on vertices 0..n-1 whose edges carry a sign.
/// Immutable once built; edges are kept sorted by (u, v).
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Validates and normalizes (endpoints swapped so u < v, sorted).
  SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n) {
    if (n < 0) throw Error(Errc::BadParameters, "negative vertex count");
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
        throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + ") with n=" + std::to_string(n));
      }
      if (e.u == e.v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      auto& cell = at(e.u, e.v);
      if (cell != 0) {
        throw Error(Errc::DuplicateEdge,
                    "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} listed twice");
      }
      cell = static_cast<std::int8_t>(e.sign);
      at(e.v, e.u) = cell;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
  }

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }

  /// +1, -1, or 0 when u and v are not adjacent.
  int sign(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return matrix_[index(u, v)];
  }

  bool adjacent(Vertex u, Vertex v) const { return sign(u, v) != 0; }

  std::vector<Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u) {
      if (matrix_[index(v, u)] != 0) out.push_back(u);
    }
    return out;
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
      throw Error(Errc::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " with n=" + std::to_string(n_));
    }
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  std::int8_t& at(Vertex u, Vertex v) { return matrix_[index(u, v)]; }

  int n_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::int8_t> matrix_;
};

/// Per-vertex neighbor masks split by sign; requires n <= 64.
struct SignMasks {
  std::vector<VertexMask> positive;
  std::vector<VertexMask> negative;
};

inline SignMasks sign_masks(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw Error(Errc::SizeLimitExceeded, "bit-mask view needs n <= 64");
  SignMasks m{std::vector<VertexMask>(static_cast<std::size_t>(n), 0),
              std::vector<VertexMask>(static_cast<std::size_t>(n), 0)};
  for (const auto& e : g.edges()) {
    auto& side = e.sign == Sign::Positive ? m.positive : m.negative;
    side[static_cast<std::size_t>(e.u)] |= bit(e.v);
    side[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return m;
}

inline SignedGraph build(int n, std::span<const VertexPair> positive_edges,
                         std::span<const VertexPair> negative_edges) {
  std::vector<SignedEdge> edges;
  edges.reserve(positive_edges.size() + negative_edges.size());
  for (auto [u, v] : positive_edges) edges.push_back({u, v, Sign::Positive});
  for (auto [u, v] : negative_edges) edges.push_back({u, v, Sign::Negative});
  return SignedGraph(n, std::move(edges));
}

inline SignedGraph build(int n, std::initializer_list<VertexPair> positive_edges,
                         std::initializer_list<VertexPair> negative_edges = {}) {
  return build(n, std::span<const VertexPair>(positive_edges.begin(), positive_edges.size()),
               std::span<const VertexPair>(negative_edges.begin(), negative_edges.size()));
}

inline SignedGraph edgeless(int n) { return SignedGraph(n, {}); }

inline SignedGraph complete_graph(int k, Sign sign = Sign::Positive) {
  std::vector<SignedEdge> edges;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) edges.push_back({u, v, sign});
  return SignedGraph(k, std::move(edges));
}

/// Resigning at X: an edge flips iff exactly one endpoint lies in X.
inline SignedGraph switch_at(const SignedGraph& g, std::span<const Vertex> x) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : x) {
    g.check_vertex(v);
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) {
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) e.sign = flip(e.sign);
  }
  return SignedGraph(g.vertex_count(), std::move(edges));
}

/// Direct (tensor) product. (u, v) is flattened to u * |V(H)| + v.
inline SignedGraph direct_product(const SignedGraph& g, const SignedGraph& h) {
  const int nh = h.vertex_count();
  auto id = [nh](Vertex u, Vertex v) { return u * nh + v; };
  std::vector<SignedEdge> edges;
  edges.reserve(2 * g.edge_count() * h.edge_count());
  for (const auto& a : g.edges()) {
    for (const auto& b : h.edges()) {
      Sign s = a.sign * b.sign;
      edges.push_back({id(a.u, b.u), id(a.v, b.v), s});
      edges.push_back({id(a.u, b.v), id(a.v, b.u), s});
    }
  }
  return SignedGraph(g.vertex_count() * nh, std::move(edges));
}

/// Lexicographic product G[H]: fibers are copies of H, and every pair across
/// the fibers of adjacent u, v carries the sign of uv.
inline SignedGraph lex_product(const SignedGraph& g, const SignedGraph& h) {
  const int nh = h.vertex_count();
  auto id = [nh](Vertex u, Vertex x) { return u * nh + x; };
  std::vector<SignedEdge> edges;
  for (const auto& a : g.edges()) {
    for (Vertex x = 0; x < nh; ++x)
      for (Vertex y = 0; y < nh; ++y) edges.push_back({id(a.u, x), id(a.v, y), a.sign});
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (const auto& b : h.edges()) edges.push_back({id(u, b.u), id(u, b.v), b.sign});
  }
  return SignedGraph(g.vertex_count() * nh, std::move(edges));
}

/// G[K_k] with the all-positive complete graph as fiber.
inline SignedGraph blowup_complete(const SignedGraph& g, int k) {
  if (k < 1) throw Error(Errc::ZeroK, "blow-up size must be >= 1, got " + std::to_string(k));
  return lex_product(g, complete_graph(k, Sign::Positive));
}

/// Open neighborhood over edges of either sign. Members of K appear only if
/// adjacent to another member.
inline std::vector<Vertex> neighborhood(const SignedGraph& g, std::span<const Vertex> k) {
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex u : k) {
    g.check_vertex(u);
    for (Vertex w : g.neighbors(u)) mark[static_cast<std::size_t>(w)] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

inline std::vector<Vertex> closed_neighborhood(const SignedGraph& g, std::span<const Vertex> k) {
  std::vector<Vertex> out = neighborhood(g, k);
  out.insert(out.end(), k.begin(), k.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sigfrac
