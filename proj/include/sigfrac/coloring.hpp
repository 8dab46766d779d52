#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigfrac/bits.hpp"
#include "sigfrac/errors.hpp"
#include "sigfrac/signed_graph.hpp"

namespace sigfrac {

using ColorSet = std::uint64_t;

/// A (p/q)-coloring: each vertex gets a q-subset of {0..p-1}, p even and
/// p >= 2q. Color sets are bit masks, so p <= 64.
struct SetColoring {
  int p = 2;
  int q = 1;
  std::vector<ColorSet> sets;

  friend bool operator==(const SetColoring&, const SetColoring&) = default;
};

inline void check_pq(int p, int q) {
  if (q < 1 || p < 2 * q || p % 2 != 0 || p > 64) {
    throw Error(Errc::BadParameters, "need p even, p >= 2q >= 2, p <= 64; got p=" + std::to_string(p) +
                                         " q=" + std::to_string(q));
  }
}

/// A + p/2 (mod p).
inline ColorSet antipode(ColorSet s, int p) noexcept {
  const int h = p / 2;
  const ColorSet full = low_bits(p);
  return ((s << h) | (s >> (p - h))) & full;
}

/// Positive edges need disjoint sets; negative edges need f(u) disjoint from
/// the antipode of f(v).
inline bool validate_pq(const SignedGraph& g, const SetColoring& c) {
  if (c.q < 1 || c.p < 2 * c.q || c.p % 2 != 0 || c.p > 64) return false;
  if (c.sets.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  for (ColorSet s : c.sets)
    if (popcount(s) != c.q || (s & ~low_bits(c.p)) != 0) return false;
  for (const auto& e : g.edges()) {
    const ColorSet fu = c.sets[static_cast<std::size_t>(e.u)];
    const ColorSet fv = c.sets[static_cast<std::size_t>(e.v)];
    if (e.sign == Sign::Positive ? (fu & fv) != 0 : (fu & antipode(fv, c.p)) != 0) return false;
  }
  return true;
}

/// Every image set is a cyclic interval {i, i+1, ..., i+q-1} mod p.
inline bool is_circular(const SetColoring& c) {
  for (ColorSet s : c.sets) {
    bool found = false;
    for (int i = 0; i < c.p && !found; ++i) {
      ColorSet interval = 0;
      for (int t = 0; t < c.q; ++t) interval |= bit((i + t) % c.p);
      found = interval == s;
    }
    if (!found) return false;
  }
  return true;
}

/// q-subsets of {0..p-1} in lexicographic order of their sorted elements.
inline std::vector<ColorSet> subsets_lex(int p, int q) {
  std::vector<ColorSet> out;
  std::vector<int> idx(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    ColorSet s = 0;
    for (int i : idx) s |= bit(i);
    out.push_back(s);
    int i = q - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - q + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < q; ++k) idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
  }
  return out;
}

/// Smallest-last order: repeatedly strip a minimum-degree vertex (lowest
/// index on ties), then reverse.
inline std::vector<Vertex> degeneracy_order(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      if (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]) pick = v;
    }
    removed[static_cast<std::size_t>(pick)] = 1;
    order.push_back(pick);
    for (Vertex u : adj[static_cast<std::size_t>(pick)]) --deg[static_cast<std::size_t>(u)];
  }
  return {order.rbegin(), order.rend()};
}

struct ColoringSearchOptions {
  /// Search nodes before giving up with SizeLimitExceeded.
  std::size_t node_budget = 20'000'000;
};

namespace detail {

class PqSearch {
 public:
  PqSearch(const SignedGraph& g, int p, int q, ColoringSearchOptions opts)
      : g_(g), p_(p), opts_(opts), candidates_(subsets_lex(p, q)), order_(degeneracy_order(g)) {
    const int n = g.vertex_count();
    pos_nbrs_.resize(static_cast<std::size_t>(n));
    neg_nbrs_.resize(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
      auto& side = e.sign == Sign::Positive ? pos_nbrs_ : neg_nbrs_;
      side[static_cast<std::size_t>(e.u)].push_back(e.v);
      side[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    sets_.assign(static_cast<std::size_t>(n), 0);
    colored_.assign(static_cast<std::size_t>(n), 0);
  }

  std::optional<std::vector<ColorSet>> run() {
    if (extend(0)) return sets_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > opts_.node_budget) {
      throw Error(Errc::SizeLimitExceeded, "(p/q)-coloring search exceeded " +
                                               std::to_string(opts_.node_budget) + " nodes");
    }
    const auto v = static_cast<std::size_t>(order_[depth]);
    ColorSet forbidden = 0;
    for (Vertex u : pos_nbrs_[v])
      if (colored_[static_cast<std::size_t>(u)]) forbidden |= sets_[static_cast<std::size_t>(u)];
    for (Vertex u : neg_nbrs_[v])
      if (colored_[static_cast<std::size_t>(u)]) forbidden |= antipode(sets_[static_cast<std::size_t>(u)], p_);
    colored_[v] = 1;
    for (ColorSet s : candidates_) {
      if (s & forbidden) continue;
      sets_[v] = s;
      if (extend(depth + 1)) return true;
    }
    colored_[v] = 0;
    sets_[v] = 0;
    return false;
  }

  const SignedGraph& g_;
  int p_;
  ColoringSearchOptions opts_;
  std::vector<ColorSet> candidates_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> pos_nbrs_, neg_nbrs_;
  std::vector<ColorSet> sets_;
  std::vector<char> colored_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Backtracking over vertices in degeneracy order with candidate q-subsets
/// in lexicographic order; the first coloring found is returned.
inline std::optional<SetColoring> find_pq_coloring(const SignedGraph& g, int p, int q,
                                                   ColoringSearchOptions opts = {}) {
  check_pq(p, q);
  auto sets = detail::PqSearch(g, p, q, opts).run();
  if (!sets) return std::nullopt;
  return SetColoring{p, q, std::move(*sets)};
}

/// Least even p >= 2 admitting a (p/1)-coloring. Never exceeds 2n: distinct
/// colors below p/2 satisfy both edge rules.
inline int chi_signed(const SignedGraph& g, ColoringSearchOptions opts = {}) {
  const int top = std::max(2, 2 * g.vertex_count());
  if (top > 64) throw Error(Errc::SizeLimitExceeded, "chi_signed needs 2n <= 64");
  for (int p = 2; p < top; p += 2) {
    if (find_pq_coloring(g, p, 1, opts)) return p;
  }
  return top;
}

inline std::string format_color_set(ColorSet s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int c) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  });
  return out + "}";
}

/// "f: 0->{0,1} 1->{2,3} ...".
inline std::string format_set_coloring(const SetColoring& c) {
  std::string out = "f:";
  for (std::size_t v = 0; v < c.sets.size(); ++v) out += " " + std::to_string(v) + "->" + format_color_set(c.sets[v]);
  return out;
}

}  // namespace sigfrac
