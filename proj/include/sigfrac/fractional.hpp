#pragma once

#include <string>
#include <vector>

#include "sigfrac/circulant.hpp"
#include "sigfrac/errors.hpp"
#include "sigfrac/independent_sets.hpp"
#include "sigfrac/lp.hpp"
#include "sigfrac/rational.hpp"
#include "sigfrac/signed_graph.hpp"

namespace sigfrac {

struct WeightedSet {
  SignedIndependentSet set;
  Rational weight;
};

/// Weights on signed independent sets. Feasible iff every vertex v has
/// sum_J d_{v,J} w(J) >= 1.
struct FractionalColoring {
  int vertex_count = 0;
  std::vector<WeightedSet> weights;

  Rational total() const {
    Rational t = 0;
    for (const auto& w : weights) t += w.weight;
    return t;
  }
};

/// Vertex weights theta in [0, 1]. Feasible iff sum_v d_{v,J} theta(v) <= 1
/// for every signed independent set J.
struct FractionalClique {
  std::vector<Rational> theta;

  Rational weight() const {
    Rational t = 0;
    for (const auto& x : theta) t += x;
    return t;
  }
};

struct FractionalResult {
  Rational chi_f;
  FractionalColoring coloring;
  FractionalClique clique;
  std::size_t columns = 0;
  std::size_t pivots = 0;
  /// verify_certificate passed on the underlying LP solve.
  bool certified = false;
};

/// The covering LP: one variable per deduplicated maximal pair, one >= 1
/// row per vertex with incidence coefficients.
inline lp::LpProblem covering_lp(const SignedGraph& g, const std::vector<SignedIndependentSet>& columns) {
  const int n = g.vertex_count();
  lp::LpProblem p;
  p.objective.assign(columns.size(), Rational(1));
  p.rows.assign(static_cast<std::size_t>(n), std::vector<Rational>(columns.size(), Rational(0)));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for_each_bit(columns[c].support(), [&](int v) {
      p.rows[static_cast<std::size_t>(v)][c] = incidence(columns[c], v);
    });
  }
  p.senses.assign(static_cast<std::size_t>(n), lp::Sense::GreaterEqual);
  p.rhs.assign(static_cast<std::size_t>(n), Rational(1));
  return p;
}

/// Solves the covering LP once; the primal is an optimal fractional
/// coloring and the duals are an optimal fractional clique.
inline FractionalResult solve_fractional(const SignedGraph& g) {
  auto columns = lp_columns(g);
  auto problem = covering_lp(g, columns);
  auto sol = lp::solve(problem);
  if (sol.status != lp::Status::Optimal) {
    // Unreachable for a well-formed graph: (V, V) minus conflicts always
    // yields a column covering every vertex.
    throw Error(Errc::BadParameters, std::string("covering LP ended ") + lp::to_string(sol.status));
  }
  FractionalResult r;
  r.chi_f = sol.objective;
  r.coloring.vertex_count = g.vertex_count();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (sol.primal[c] != 0) r.coloring.weights.push_back({columns[c], sol.primal[c]});
  }
  r.clique.theta = sol.dual;
  r.columns = columns.size();
  r.pivots = sol.pivots;
  r.certified = lp::verify_certificate(problem, sol);
  return r;
}

inline Rational chi_f(const SignedGraph& g) { return solve_fractional(g).chi_f; }

inline Rational w_f(const SignedGraph& g) { return solve_fractional(g).clique.weight(); }

inline Rational coverage(const FractionalColoring& w, Vertex v) {
  Rational c = 0;
  for (const auto& ws : w.weights) {
    int count = static_cast<int>((ws.set.a >> v) & 1) + static_cast<int>((ws.set.b >> v) & 1);
    if (count) c += ws.weight * count / 2;
  }
  return c;
}

/// Throws UnknownSet if a support set is not signed-independent in G.
inline bool validate_coloring(const SignedGraph& g, const FractionalColoring& w) {
  if (w.vertex_count != g.vertex_count()) throw Error(Errc::HostMismatch, "coloring is for another graph");
  for (const auto& ws : w.weights) {
    if (!is_signed_independent(g, ws.set)) throw Error(Errc::UnknownSet, format_set(ws.set));
    if (ws.weight < 0) return false;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (coverage(w, v) < 1) return false;
  return true;
}

/// sum_v d_{v,J} theta(v) for one pair.
inline Rational clique_load(const FractionalClique& c, const SignedIndependentSet& j) {
  Rational s = 0;
  for_each_bit(j.a, [&](int v) { s += c.theta[static_cast<std::size_t>(v)]; });
  for_each_bit(j.b, [&](int v) { s += c.theta[static_cast<std::size_t>(v)]; });
  return s / 2;
}

/// Checking maximal pairs suffices since loads only grow with the pair.
inline bool validate_clique(const SignedGraph& g, const FractionalClique& c) {
  if (c.theta.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw Error(Errc::HostMismatch, "clique is for another graph");
  }
  for (const auto& t : c.theta)
    if (t < 0 || t > 1) return false;
  for (const auto& j : enumerate_maximal(g))
    if (clique_load(c, j) > 1) return false;
  return true;
}

/// 2n / alpha_s for a signed circulant.
inline Rational chi_f_circulant(const CirculantSpec& spec) {
  auto g = circulant(spec);
  Rational r(2 * spec.n, alpha_s(g));
  r.canonicalize();
  return r;
}

inline std::string format_coloring(const FractionalColoring& w) {
  std::string out;
  for (const auto& ws : w.weights) out += "w " + format_set(ws.set) + " = " + to_string(ws.weight) + "\n";
  return out;
}

inline std::string format_clique(const FractionalClique& c) {
  std::string out = "theta:";
  for (std::size_t v = 0; v < c.theta.size(); ++v) out += " " + std::to_string(v) + "=" + to_string(c.theta[v]);
  return out + "\n";
}

}  // namespace sigfrac
