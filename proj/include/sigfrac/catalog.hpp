#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sigfrac/errors.hpp"
#include "sigfrac/signed_graph.hpp"

namespace sigfrac {

/// One representative per signed-isomorphism class (vertex relabelings
/// preserving signs; switching is not quotiented out) of signed graphs on
/// exactly n vertices. Brute force over all 3^(n choose 2) labelings and n!
/// permutations, so n <= 5. Representatives are the first labeling of each
/// class in base-3 code order.
inline std::vector<SignedGraph> signed_graph_catalog(int n) {
  if (n < 0 || n > 5) throw Error(Errc::SizeLimitExceeded, "catalog supports n <= 5");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pair_index[static_cast<std::size_t>(pairs[i].first)][static_cast<std::size_t>(pairs[i].second)] = static_cast<int>(i);
    pair_index[static_cast<std::size_t>(pairs[i].second)][static_cast<std::size_t>(pairs[i].first)] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;

  std::set<std::uint64_t> seen;
  std::vector<SignedGraph> out;
  std::vector<int> state(pairs.size()), image(pairs.size());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& s : state) {
      s = static_cast<int>(c % 3);
      c /= 3;
    }
    std::uint64_t canonical = ~std::uint64_t{0};
    for (const auto& pm : perms) {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        int j = pair_index[static_cast<std::size_t>(pm[static_cast<std::size_t>(pairs[i].first)])]
                          [static_cast<std::size_t>(pm[static_cast<std::size_t>(pairs[i].second)])];
        image[static_cast<std::size_t>(j)] = state[i];
      }
      std::uint64_t k = 0;
      for (std::size_t i = pairs.size(); i-- > 0;) k = k * 3 + static_cast<std::uint64_t>(image[i]);
      canonical = std::min(canonical, k);
    }
    if (!seen.insert(canonical).second) continue;
    std::vector<SignedEdge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (state[i] == 0) continue;
      edges.push_back({pairs[i].first, pairs[i].second, state[i] == 1 ? Sign::Positive : Sign::Negative});
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

/// Catalog graphs on 1..max_n vertices, by vertex count.
inline std::vector<SignedGraph> signed_graph_catalog_upto(int max_n) {
  std::vector<SignedGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = signed_graph_catalog(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// One-line edge description, e.g. "n=3 +0-1 -1-2".
inline std::string describe(const SignedGraph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count());
  for (const auto& e : g.edges()) {
    s += " ";
    s += sign_char(e.sign);
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

}  // namespace sigfrac
