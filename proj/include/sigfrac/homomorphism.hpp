#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigfrac/coloring.hpp"
#include "sigfrac/errors.hpp"
#include "sigfrac/report.hpp"
#include "sigfrac/signed_graph.hpp"

namespace sigfrac {

struct VertexMap {
  int domain_size = 0;
  int codomain_size = 0;
  std::vector<Vertex> image;

  static VertexMap identity(int n) {
    VertexMap m{n, n, std::vector<Vertex>(static_cast<std::size_t>(n))};
    for (Vertex v = 0; v < n; ++v) m.image[static_cast<std::size_t>(v)] = v;
    return m;
  }

  void check() const {
    if (image.size() != static_cast<std::size_t>(domain_size)) {
      throw Error(Errc::VertexOutOfRange, "map is not total on its domain");
    }
    for (Vertex v : image) {
      if (v < 0 || v >= codomain_size) {
        throw Error(Errc::VertexOutOfRange, "image vertex " + std::to_string(v) + " outside codomain");
      }
    }
  }
};

/// Every edge uv of G lands on an edge of H with the same sign.
inline bool is_sign_hom(const SignedGraph& g, const SignedGraph& h, const VertexMap& map) {
  map.check();
  if (map.domain_size != g.vertex_count() || map.codomain_size != h.vertex_count()) {
    throw Error(Errc::VertexOutOfRange, "map dimensions do not match the graphs");
  }
  for (const auto& e : g.edges()) {
    Vertex a = map.image[static_cast<std::size_t>(e.u)];
    Vertex b = map.image[static_cast<std::size_t>(e.v)];
    if (a == b || h.sign(a, b) != static_cast<int>(e.sign)) return false;
  }
  return true;
}

struct SwitchingHom {
  std::vector<Vertex> switch_set;
  VertexMap map;
};

struct HomSearchOptions {
  int max_domain = 20;
  std::size_t node_budget = 50'000'000;
};

namespace detail {

// Assigns each vertex of G, in index order, a switch bit and an image. The
// switch bit of vertex 0 is fixed to 0 since X and V \ X give the same graph.
class SwitchingHomSearch {
 public:
  SwitchingHomSearch(const SignedGraph& g, const SignedGraph& h, HomSearchOptions opts)
      : g_(g), h_(h), opts_(opts) {
    const int n = g.vertex_count();
    earlier_.resize(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) earlier_[static_cast<std::size_t>(e.v)].push_back(e.u);
    image_.assign(static_cast<std::size_t>(n), 0);
    flip_.assign(static_cast<std::size_t>(n), 0);
  }

  std::optional<SwitchingHom> run() {
    if (!extend(0)) return std::nullopt;
    SwitchingHom out;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (flip_[static_cast<std::size_t>(v)]) out.switch_set.push_back(v);
    out.map = VertexMap{g_.vertex_count(), h_.vertex_count(), image_};
    return out;
  }

 private:
  bool extend(Vertex v) {
    if (v == g_.vertex_count()) return true;
    if (++nodes_ > opts_.node_budget) {
      throw Error(Errc::SizeLimitExceeded, "switching homomorphism search budget exhausted");
    }
    const auto vi = static_cast<std::size_t>(v);
    for (int s = 0; s <= (v == 0 ? 0 : 1); ++s) {
      for (Vertex x = 0; x < h_.vertex_count(); ++x) {
        bool ok = true;
        for (Vertex u : earlier_[vi]) {
          const auto ui = static_cast<std::size_t>(u);
          int sign = g_.sign(u, v);
          if (flip_[ui] != s) sign = -sign;
          if (image_[ui] == x || h_.sign(image_[ui], x) != sign) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        image_[vi] = x;
        flip_[vi] = static_cast<char>(s);
        if (extend(v + 1)) return true;
      }
    }
    return false;
  }

  const SignedGraph& g_;
  const SignedGraph& h_;
  HomSearchOptions opts_;
  std::vector<std::vector<Vertex>> earlier_;
  std::vector<Vertex> image_;
  std::vector<char> flip_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// A switching set X and a map with is_sign_hom(switch_at(G, X), H, map),
/// or nothing when no such pair exists.
inline std::optional<SwitchingHom> find_switching_hom(const SignedGraph& g, const SignedGraph& h,
                                                      HomSearchOptions opts = {}) {
  if (g.vertex_count() > opts.max_domain) {
    throw Error(Errc::SizeLimitExceeded, "switching homomorphism search limited to " +
                                             std::to_string(opts.max_domain) + " domain vertices");
  }
  if (g.vertex_count() > 0 && h.vertex_count() == 0) return std::nullopt;
  return detail::SwitchingHomSearch(g, h, opts).run();
}

inline std::string format_map(const VertexMap& m) {
  std::string out = "map:";
  for (std::size_t v = 0; v < m.image.size(); ++v) out += " " + std::to_string(v) + "->" + std::to_string(m.image[v]);
  return out;
}

inline std::string format_switch(const std::vector<Vertex>& x) {
  std::string out = "switch: {";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + "}";
}

struct LexLemmaOptions {
  bool compute_chromatic = false;
  ColoringSearchOptions search{2'000'000};
};

struct LexLemmaResult {
  bool hom = false;
  /// chi_signed of (G x H)[K_k] and of G[K_k] x H[K_k], when computed
  /// within budget.
  std::optional<int> chi_left;
  std::optional<int> chi_right;
  ReportCase report;
};

/// Builds (G x H)[K_k] and G[K_k] x H[K_k] and checks that
/// (g, h, i) -> (g, i, h, i) is a sign-preserving homomorphism between them.
inline LexLemmaResult verify_lex_lemma_map(const SignedGraph& g, const SignedGraph& h, int k,
                                           LexLemmaOptions opts = {}) {
  const SignedGraph left = blowup_complete(direct_product(g, h), k);
  const SignedGraph right = direct_product(blowup_complete(g, k), blowup_complete(h, k));
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();

  VertexMap map{left.vertex_count(), right.vertex_count(), std::vector<Vertex>(static_cast<std::size_t>(left.vertex_count()))};
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b)
      for (int i = 0; i < k; ++i)
        map.image[static_cast<std::size_t>((a * nh + b) * k + i)] = (a * k + i) * (nh * k) + (b * k + i);

  LexLemmaResult r;
  r.hom = is_sign_hom(left, right, map);
  r.report.add("k", std::to_string(k));
  r.report.add("left_vertices", std::to_string(left.vertex_count()));
  r.report.add("right_vertices", std::to_string(right.vertex_count()));
  r.report.add("hom", r.hom ? "true" : "false");
  if (opts.compute_chromatic) {
    try {
      r.chi_left = chi_signed(left, opts.search);
      r.chi_right = chi_signed(right, opts.search);
      r.report.add("chi_left", std::to_string(*r.chi_left));
      r.report.add("chi_right", std::to_string(*r.chi_right));
      r.report.add("chi_left<=chi_right", *r.chi_left <= *r.chi_right ? "true" : "false");
    } catch (const Error& e) {
      if (e.code() != Errc::SizeLimitExceeded) throw;
      r.report.add("chi", "not computed (search budget)");
    }
  }
  r.report.pass = r.hom && (!r.chi_left || !r.chi_right || *r.chi_left <= *r.chi_right);
  return r;
}

}  // namespace sigfrac
