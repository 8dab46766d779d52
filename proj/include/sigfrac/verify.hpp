#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "sigfrac/catalog.hpp"
#include "sigfrac/circulant.hpp"
#include "sigfrac/fractional.hpp"
#include "sigfrac/homomorphism.hpp"
#include "sigfrac/independent_sets.hpp"
#include "sigfrac/persistence.hpp"
#include "sigfrac/report.hpp"

namespace sigfrac {

struct ProductTheoremResult {
  FractionalResult left;     // G
  FractionalResult right;    // the circulant
  FractionalResult product;  // G x circulant
  Rational expected;         // min of the factors
  bool pass = false;
  ReportCase report;
};

/// chi_f(G x G(n,S,T)) against min{chi_f(G), chi_f(G(n,S,T))}, all exact.
inline ProductTheoremResult verify_product_theorem(const SignedGraph& g, const CirculantSpec& spec) {
  const SignedGraph h = circulant(spec);
  require_enumerable(g.vertex_count() * h.vertex_count(), "product theorem");
  ProductTheoremResult r;
  r.left = solve_fractional(g);
  r.right = solve_fractional(h);
  r.product = solve_fractional(direct_product(g, h));
  r.expected = std::min(r.left.chi_f, r.right.chi_f);
  r.pass = r.product.chi_f == r.expected;
  auto& c = r.report;
  c.name = "theorem G=[" + describe(g) + "] H=" + describe(spec);
  c.add("chi_f(G)", to_string(r.left.chi_f));
  c.add("chi_f(H)", to_string(r.right.chi_f));
  c.add("chi_f(product)", to_string(r.product.chi_f));
  c.add("min", to_string(r.expected));
  c.add("certified", r.left.certified && r.right.certified && r.product.certified ? "true" : "false");
  c.add("witness(G)", std::to_string(r.left.coloring.weights.size()) + " weighted sets");
  c.add("witness(product)", std::to_string(r.product.coloring.weights.size()) + " weighted sets");
  c.pass = r.pass;
  return r;
}

struct AlphaProductResult {
  int alpha_g = 0;
  int alpha_h = 0;
  int alpha_product = 0;
  int formula = 0;
  SignedIndependentSet witness;  // a maximum set of the product
  bool pass = false;
  ReportCase report;
};

/// Brute-force alpha_s(G x H) against max{alpha_s(G)|V(H)|, alpha_s(H)|V(G)|}.
inline AlphaProductResult verify_alpha_product(const CirculantSpec& spec_g, const CirculantSpec& spec_h) {
  const SignedGraph g = circulant(spec_g);
  const SignedGraph h = circulant(spec_h);
  require_enumerable(g.vertex_count() * h.vertex_count(), "alpha product");
  AlphaProductResult r;
  r.alpha_g = alpha_s(g);
  r.alpha_h = alpha_s(h);
  r.witness = maximum_signed_independent_set(direct_product(g, h));
  r.alpha_product = r.witness.size();
  r.formula = std::max(r.alpha_g * h.vertex_count(), r.alpha_h * g.vertex_count());
  r.pass = r.alpha_product == r.formula;
  auto& c = r.report;
  c.name = "alpha-product " + describe(spec_g) + " x " + describe(spec_h);
  c.add("alpha_s(G)", std::to_string(r.alpha_g));
  c.add("alpha_s(H)", std::to_string(r.alpha_h));
  c.add("alpha_s(product)", std::to_string(r.alpha_product));
  c.add("formula", std::to_string(r.formula));
  c.add("witness", format_set(r.witness));
  c.pass = r.pass;
  return r;
}

inline ReportCase verify_lemma1_case(const CirculantSpec& spec) {
  const SignedGraph g = circulant(spec);
  auto fr = solve_fractional(g);
  const int a = alpha_s(g);
  Rational closed(2 * spec.n, a);
  closed.canonicalize();
  ReportCase c;
  c.name = "lemma1 " + describe(spec);
  c.add("alpha_s", std::to_string(a));
  c.add("2n/alpha_s", to_string(closed));
  c.add("chi_f", to_string(fr.chi_f));
  c.add("certified", fr.certified ? "true" : "false");
  c.pass = fr.chi_f == closed && fr.certified;
  return c;
}

inline ReportCase verify_duality_case(const SignedGraph& g, const std::string& name) {
  auto fr = solve_fractional(g);
  const Rational w = fr.clique.weight();
  const bool coloring_ok = validate_coloring(g, fr.coloring);
  const bool clique_ok = validate_clique(g, fr.clique);
  ReportCase c;
  c.name = "duality " + name;
  c.add("chi_f", to_string(fr.chi_f));
  c.add("w_f", to_string(w));
  c.add("coloring_valid", coloring_ok ? "true" : "false");
  c.add("clique_valid", clique_ok ? "true" : "false");
  c.add("certified", fr.certified ? "true" : "false");
  c.pass = fr.chi_f == w && coloring_ok && clique_ok && fr.certified;
  return c;
}

// Sweeps, each in canonical order. The optional sink sees every case as
// soon as it is decided.

using CaseSink = std::function<void(const ReportCase&)>;

namespace detail {

inline void emit(Report& r, ReportCase c, const CaseSink& sink) {
  if (sink) sink(c);
  r.cases.push_back(std::move(c));
}

}  // namespace detail

inline Report sweep_lemma1(int max_n, int max_generators = -1, const CaseSink& sink = {}) {
  Report r{"lemma1", {}};
  for (const auto& spec : circulant_sweep(3, max_n, max_generators)) detail::emit(r, verify_lemma1_case(spec), sink);
  return r;
}

inline Report sweep_duality(int max_circulant_n, int max_catalog_n, const CaseSink& sink = {}) {
  Report r{"duality", {}};
  for (const auto& spec : circulant_sweep(3, max_circulant_n))
    detail::emit(r, verify_duality_case(circulant(spec), describe(spec)), sink);
  for (const auto& g : signed_graph_catalog_upto(max_catalog_n))
    detail::emit(r, verify_duality_case(g, "[" + describe(g) + "]"), sink);
  return r;
}

inline Report sweep_theorem(int max_catalog_n, int max_circulant_n, const CaseSink& sink = {}) {
  Report r{"theorem", {}};
  const auto family = signed_graph_catalog_upto(max_catalog_n);
  for (const auto& spec : circulant_sweep(3, max_circulant_n))
    for (const auto& g : family) detail::emit(r, verify_product_theorem(g, spec).report, sink);
  return r;
}

inline Report sweep_alpha_product(int max_product, const CaseSink& sink = {}) {
  Report r{"alpha-product", {}};
  const auto specs = circulant_sweep(3, max_product / 3);
  for (const auto& a : specs)
    for (const auto& b : specs)
      if (a.n * b.n <= max_product) detail::emit(r, verify_alpha_product(a, b).report, sink);
  return r;
}

inline Report sweep_lex_lemma(int max_catalog_n, int max_k, LexLemmaOptions opts = {}, const CaseSink& sink = {}) {
  Report r{"lex-lemma", {}};
  const auto family = signed_graph_catalog_upto(max_catalog_n);
  for (const auto& g : family) {
    for (const auto& h : family) {
      for (int k = 1; k <= max_k; ++k) {
        auto res = verify_lex_lemma_map(g, h, k, opts);
        res.report.name = "lex-lemma G=[" + describe(g) + "] H=[" + describe(h) + "] k=" + std::to_string(k);
        detail::emit(r, std::move(res.report), sink);
      }
    }
  }
  return r;
}

/// Optimal dual clique of each circulant with n <= max_circulant_n against
/// the catalog on <= max_catalog_n vertices.
inline Report sweep_persistence(int max_circulant_n, int max_catalog_n, CountMode mode = CountMode::Double,
                                const CaseSink& sink = {}) {
  Report r{"persistence", {}};
  const auto family = signed_graph_catalog_upto(max_catalog_n);
  for (const auto& spec : circulant_sweep(3, max_circulant_n)) {
    const SignedGraph h = circulant(spec);
    auto psi = solve_fractional(h).clique;
    auto res = verify_persistence(h, psi, family, mode);
    for (std::size_t i = 0; i < res.cases.size(); ++i) {
      auto& c = res.report.cases[i];
      c.name = "persistence H=" + describe(spec) + " G=[" + describe(res.cases[i].g) + "]";
      detail::emit(r, std::move(c), sink);
    }
  }
  return r;
}

}  // namespace sigfrac
