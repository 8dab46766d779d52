#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sigfrac/bits.hpp"
#include "sigfrac/errors.hpp"
#include "sigfrac/limits.hpp"
#include "sigfrac/rational.hpp"
#include "sigfrac/signed_graph.hpp"

namespace sigfrac {

/// A pair (A, B) of vertex sets; A and B may overlap. Validity is relative
/// to a host graph (see is_signed_independent). Ordered by (A, B) as bit
/// masks.
struct SignedIndependentSet {
  VertexMask a = 0;
  VertexMask b = 0;

  /// |A| + |B|: a vertex of A ∩ B counts twice.
  int size() const noexcept { return popcount(a) + popcount(b); }
  VertexMask support() const noexcept { return a | b; }

  friend auto operator<=>(const SignedIndependentSet&, const SignedIndependentSet&) = default;
};

inline void check_mask(const SignedGraph& g, VertexMask m) {
  if (g.vertex_count() < 64 && (m & ~low_bits(g.vertex_count())) != 0) {
    throw Error(Errc::VertexOutOfRange, "set mentions a vertex >= n=" + std::to_string(g.vertex_count()));
  }
}

/// Valid iff A and B are independent in G+ and no negative edge joins a
/// vertex of A to a vertex of B.
inline bool is_signed_independent(const SignedGraph& g, VertexMask a, VertexMask b) {
  check_mask(g, a);
  check_mask(g, b);
  for (const auto& e : g.edges()) {
    const VertexMask ends = bit(e.u) | bit(e.v);
    if (e.sign == Sign::Positive) {
      if ((a & ends) == ends || (b & ends) == ends) return false;
    } else {
      if (((a & bit(e.u)) && (b & bit(e.v))) || ((a & bit(e.v)) && (b & bit(e.u)))) return false;
    }
  }
  return true;
}

inline bool is_signed_independent(const SignedGraph& g, const SignedIndependentSet& j) {
  return is_signed_independent(g, j.a, j.b);
}

inline bool is_signed_independent(const SignedGraph& g, std::span<const Vertex> a,
                                  std::span<const Vertex> b) {
  for (auto side : {a, b})
    for (Vertex v : side) g.check_vertex(v);
  return is_signed_independent(g, mask_of(a), mask_of(b));
}

/// d_{v,J} = ([v in A] + [v in B]) / 2.
inline Rational incidence(const SignedIndependentSet& j, Vertex v) {
  int count = ((j.a >> v) & 1) + ((j.b >> v) & 1);
  return make_rational(count, 2);
}

/// The image of a valid pair under switching at X: vertices of X trade
/// sides between A and B.
inline SignedIndependentSet switch_relabel(const SignedIndependentSet& j, VertexMask x) {
  return {(j.a & ~x) | (j.b & x), (j.b & ~x) | (j.a & x)};
}

namespace detail {

// Signed independent sets of G are the independent sets of the double
// cover on 2n vertices: copy v of A is vertex v, copy v of B is vertex n+v.
// A positive edge uv conflicts A-A and B-B; a negative one conflicts A-B.
// Maximal pairs are maximal cliques of the compatibility graph.
class MaximalPairEnumerator {
 public:
  explicit MaximalPairEnumerator(const SignedGraph& g) : n_(g.vertex_count()) {
    const int m = 2 * n_;
    compat_.assign(static_cast<std::size_t>(m), low_bits(m));
    auto conflict = [&](int x, int y) {
      compat_[static_cast<std::size_t>(x)] &= ~bit(y);
      compat_[static_cast<std::size_t>(y)] &= ~bit(x);
    };
    for (int x = 0; x < m; ++x) compat_[static_cast<std::size_t>(x)] &= ~bit(x);
    for (const auto& e : g.edges()) {
      if (e.sign == Sign::Positive) {
        conflict(e.u, e.v);
        conflict(n_ + e.u, n_ + e.v);
      } else {
        conflict(e.u, n_ + e.v);
        conflict(n_ + e.u, e.v);
      }
    }
  }

  std::vector<SignedIndependentSet> run() {
    out_.clear();
    expand(0, low_bits(2 * n_), 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(VertexMask r, VertexMask p, VertexMask x) {
    if (p == 0) {
      if (x == 0) out_.push_back({r & low_bits(n_), r >> n_});
      return;
    }
    // Tomita pivot: the vertex of P ∪ X with the most compatible candidates.
    int pivot = -1;
    int best = -1;
    for_each_bit(p | x, [&](int u) {
      int c = popcount(p & compat_[static_cast<std::size_t>(u)]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    VertexMask candidates = p & ~compat_[static_cast<std::size_t>(pivot)];
    for_each_bit(candidates, [&](int v) {
      const VertexMask cv = compat_[static_cast<std::size_t>(v)];
      expand(r | bit(v), p & cv, x & cv);
      p &= ~bit(v);
      x |= bit(v);
    });
  }

  int n_;
  std::vector<VertexMask> compat_;
  std::vector<SignedIndependentSet> out_;
};

}  // namespace detail

/// Every inclusion-maximal valid pair, each exactly once, sorted by (A, B).
/// (A, B) and (B, A) are both present when A != B.
inline std::vector<SignedIndependentSet> enumerate_maximal(const SignedGraph& g) {
  require_enumerable(g.vertex_count(), "signed independent set enumeration");
  return detail::MaximalPairEnumerator(g).run();
}

/// Maximal pairs with duplicate incidence vectors removed, keeping the
/// smallest (A, B) of each class. These are the columns of the covering LP.
inline std::vector<SignedIndependentSet> lp_columns(const SignedGraph& g) {
  auto all = enumerate_maximal(g);
  std::vector<SignedIndependentSet> out;
  std::map<std::pair<VertexMask, VertexMask>, bool> seen;
  for (const auto& j : all) {
    auto key = std::make_pair(j.a | j.b, j.a & j.b);
    if (seen.emplace(key, true).second) out.push_back(j);
  }
  return out;
}

/// Signed independence number: max |A| + |B| over valid pairs.
inline int alpha_s(const SignedGraph& g) {
  int best = 0;
  for (const auto& j : enumerate_maximal(g)) best = std::max(best, j.size());
  return best;
}

inline SignedIndependentSet maximum_signed_independent_set(const SignedGraph& g) {
  SignedIndependentSet best;
  for (const auto& j : enumerate_maximal(g))
    if (j.size() > best.size()) best = j;
  return best;
}

/// The H-slice of a pair over G × H at u: A_u = {x : (u, x) in A}, likewise
/// for B. The slice need not be valid in H.
inline SignedIndependentSet fiber(const SignedIndependentSet& j, int g_vertices, int h_vertices,
                                  Vertex u) {
  if (u < 0 || u >= g_vertices) {
    throw Error(Errc::VertexOutOfRange, "fiber index " + std::to_string(u));
  }
  if (g_vertices * h_vertices > 64) throw Error(Errc::SizeLimitExceeded, "product exceeds 64 vertices");
  const int shift = u * h_vertices;
  const VertexMask slice = low_bits(h_vertices);
  return {(j.a >> shift) & slice, (j.b >> shift) & slice};
}

inline std::string format_vertex_list(VertexMask m) {
  std::string s;
  bool first = true;
  for_each_bit(m, [&](int v) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  });
  return s;
}

/// "A=<sorted list>;B=<sorted list>;size=<k>".
inline std::string format_set(const SignedIndependentSet& j) {
  return "A=" + format_vertex_list(j.a) + ";B=" + format_vertex_list(j.b) +
         ";size=" + std::to_string(j.size());
}

inline std::string format_sets(std::span<const SignedIndependentSet> sets) {
  std::string out;
  for (const auto& j : sets) out += format_set(j) + "\n";
  return out;
}

/// Rows are vertices, columns are sets; entries 0, 1/2, 1.
inline std::string incidence_csv(int n, std::span<const SignedIndependentSet> sets) {
  std::ostringstream out;
  out << "vertex";
  for (std::size_t c = 0; c < sets.size(); ++c) out << ",J" << c;
  out << "\n";
  for (Vertex v = 0; v < n; ++v) {
    out << v;
    for (const auto& j : sets) {
      Rational d = incidence(j, v);
      out << "," << (d.get_den() == 1 ? d.get_num().get_str() : d.get_str());
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sigfrac
