#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "sigfrac/errors.hpp"
#include "sigfrac/signed_graph.hpp"

namespace sigfrac {

/// G(n, S, T): positive edges at circular distance in S, negative at
/// distance in T. S and T are kept sorted and duplicate-free.
struct CirculantSpec {
  int n = 3;
  std::vector<int> positive;
  std::vector<int> negative;

  CirculantSpec() = default;
  CirculantSpec(int n_, std::vector<int> s, std::vector<int> t)
      : n(n_), positive(std::move(s)), negative(std::move(t)) {
    normalize(positive);
    normalize(negative);
  }

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

 private:
  static void normalize(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
};

/// |x|_n = min(|x|, n - |x|).
inline int circular_distance(int x, int n) noexcept {
  int a = std::abs(x) % n;
  return std::min(a, n - a);
}

inline void validate(const CirculantSpec& spec) {
  if (spec.n < 3) throw Error(Errc::NTooSmall, "n=" + std::to_string(spec.n) + " < 3");
  const int half = spec.n / 2;
  for (const auto* side : {&spec.positive, &spec.negative}) {
    for (int d : *side) {
      if (d < 1 || d > half) {
        throw Error(Errc::DistanceOutOfRange,
                    "distance " + std::to_string(d) + " outside 1.." + std::to_string(half));
      }
    }
  }
  for (int d : spec.positive) {
    if (std::binary_search(spec.negative.begin(), spec.negative.end(), d)) {
      throw Error(Errc::OverlappingDistanceSets,
                  "distance " + std::to_string(d) + " is in both S and T");
    }
  }
}

inline SignedGraph circulant(const CirculantSpec& spec) {
  validate(spec);
  std::vector<SignedEdge> edges;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u + 1; v < spec.n; ++v) {
      int d = circular_distance(v - u, spec.n);
      if (std::binary_search(spec.positive.begin(), spec.positive.end(), d)) {
        edges.push_back({u, v, Sign::Positive});
      } else if (std::binary_search(spec.negative.begin(), spec.negative.end(), d)) {
        edges.push_back({u, v, Sign::Negative});
      }
    }
  }
  return SignedGraph(spec.n, std::move(edges));
}

inline std::string describe(const CirculantSpec& spec) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "}";
  };
  return "G(" + std::to_string(spec.n) + "," + list(spec.positive) + "," + list(spec.negative) + ")";
}

/// All valid specs with n in [min_n, max_n], ordered by n, then S, then T
/// (lexicographic on the sorted distance lists). max_generators < 0 means
/// no bound on |S| + |T|.
inline std::vector<CirculantSpec> circulant_sweep(int min_n, int max_n, int max_generators = -1) {
  std::vector<CirculantSpec> out;
  for (int n = std::max(min_n, 3); n <= max_n; ++n) {
    const int half = n / 2;
    int states = 1;
    for (int i = 0; i < half; ++i) states *= 3;
    std::vector<CirculantSpec> level;
    for (int code = 0; code < states; ++code) {
      std::vector<int> s, t;
      int c = code;
      for (int d = 1; d <= half; ++d, c /= 3) {
        if (c % 3 == 1) s.push_back(d);
        if (c % 3 == 2) t.push_back(d);
      }
      if (max_generators >= 0 && static_cast<int>(s.size() + t.size()) > max_generators) continue;
      level.emplace_back(n, std::move(s), std::move(t));
    }
    std::sort(level.begin(), level.end(), [](const CirculantSpec& a, const CirculantSpec& b) {
      if (a.positive != b.positive) return a.positive < b.positive;
      return a.negative < b.negative;
    });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace sigfrac
