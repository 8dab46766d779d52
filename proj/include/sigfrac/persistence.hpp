#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sigfrac/bits.hpp"
#include "sigfrac/catalog.hpp"
#include "sigfrac/errors.hpp"
#include "sigfrac/fractional.hpp"
#include "sigfrac/independent_sets.hpp"
#include "sigfrac/rational.hpp"
#include "sigfrac/report.hpp"
#include "sigfrac/signed_graph.hpp"

namespace sigfrac {

/// How a product vertex lying in both A and B contributes to f_{phi,psi}.
enum class CountMode {
  Double,     // once per side, matching |J| = |A| + |B|
  Single,     // once, as a member of A ∪ B
  Incidence,  // weighted by d_{v,J}: half the Double value
};

inline const char* to_string(CountMode m) noexcept {
  switch (m) {
    case CountMode::Double: return "double";
    case CountMode::Single: return "single";
    case CountMode::Incidence: return "incidence";
  }
  return "?";
}

inline Rational mask_weight(const std::vector<Rational>& theta, VertexMask m) {
  Rational s = 0;
  for_each_bit(m, [&](int v) { s += theta[static_cast<std::size_t>(v)]; });
  return s;
}

inline Rational mask_weight(const FractionalClique& c, VertexMask m) { return mask_weight(c.theta, m); }

inline void check_product_host(const SignedIndependentSet& j, std::size_t ng, std::size_t nh) {
  const std::size_t n = ng * nh;
  if (n > 64) throw Error(Errc::SizeLimitExceeded, "product exceeds 64 vertices");
  const VertexMask outside = ~low_bits(static_cast<int>(n));
  if ((j.a & outside) || (j.b & outside)) {
    throw Error(Errc::HostMismatch, "set reaches past the " + std::to_string(n) + "-vertex product");
  }
}

/// phi(u) psi(x) for each product vertex u * |V(H)| + x.
inline std::vector<Rational> product_weights(const FractionalClique& phi, const FractionalClique& psi) {
  std::vector<Rational> rho;
  rho.reserve(phi.theta.size() * psi.theta.size());
  for (const auto& a : phi.theta)
    for (const auto& b : psi.theta) rho.push_back(a * b);
  return rho;
}

inline Rational f_phi_psi(const SignedIndependentSet& j, const std::vector<Rational>& rho,
                          CountMode mode = CountMode::Double) {
  switch (mode) {
    case CountMode::Single: return mask_weight(rho, j.a | j.b);
    case CountMode::Double: return mask_weight(rho, j.a) + mask_weight(rho, j.b);
    case CountMode::Incidence: return (mask_weight(rho, j.a) + mask_weight(rho, j.b)) / 2;
  }
  return 0;
}

/// f_{phi,psi}(J) = sum over (u, x) in J of phi(u) psi(x), J over G x H.
inline Rational f_phi_psi(const SignedIndependentSet& j, const FractionalClique& phi,
                          const FractionalClique& psi, CountMode mode = CountMode::Double) {
  check_product_host(j, phi.theta.size(), psi.theta.size());
  return f_phi_psi(j, product_weights(phi, psi), mode);
}

inline void require_feasible_clique(const SignedGraph& h, const FractionalClique& psi) {
  if (!validate_clique(h, psi)) throw Error(Errc::InfeasibleClique, "psi is not a fractional clique");
}

inline VertexMask neighborhood_mask(const SignMasks& masks, VertexMask k) {
  VertexMask out = 0;
  for_each_bit(k, [&](int v) {
    out |= masks.positive[static_cast<std::size_t>(v)] | masks.negative[static_cast<std::size_t>(v)];
  });
  return out;
}

/// psi(N(u)) = s - psi(u) for every u with psi(u) > 0.
inline bool is_local_clique(const SignedGraph& h, const FractionalClique& psi) {
  require_feasible_clique(h, psi);
  const Rational s = psi.weight();
  const auto masks = sign_masks(h);
  for (Vertex u = 0; u < h.vertex_count(); ++u) {
    const Rational& pu = psi.theta[static_cast<std::size_t>(u)];
    if (pu <= 0) continue;
    if (mask_weight(psi, neighborhood_mask(masks, bit(u))) != s - pu) return false;
  }
  return true;
}

inline constexpr int kRestrictedSupportLimit = 20;

/// First K (as a mask over subsets of the support, in increasing order)
/// with psi(N(K)) < min{s, s - 2 + psi(K)}, if any. Subsets of the support
/// suffice: extra zero-weight vertices leave psi(K) unchanged and only
/// enlarge N(K).
inline std::optional<VertexMask> restricted_clique_violation(const SignedGraph& h, const FractionalClique& psi) {
  require_feasible_clique(h, psi);
  VertexMask support = 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (psi.theta[static_cast<std::size_t>(v)] > 0) support |= bit(v);
  if (popcount(support) > kRestrictedSupportLimit) {
    throw Error(Errc::SizeLimitExceeded, "support of psi exceeds " + std::to_string(kRestrictedSupportLimit));
  }
  const Rational s = psi.weight();
  const auto masks = sign_masks(h);
  // Walk the nonempty submasks of support in increasing order.
  for (VertexMask k = support & (~support + 1); k != 0; k = (k - support) & support) {
    const Rational pk = mask_weight(psi, k);
    const Rational need = std::min(s, Rational(s - 2 + pk));
    if (mask_weight(psi, neighborhood_mask(masks, k)) < need) return k;
  }
  return std::nullopt;
}

inline bool is_restricted_clique(const SignedGraph& h, const FractionalClique& psi) {
  return !restricted_clique_violation(h, psi).has_value();
}

struct FiberViolation {
  Vertex u = 0;
  Vertex u2 = 0;
  Rational value;  // psi(J_u) + psi(J_u2)
};

namespace detail {

inline std::vector<FiberViolation> fiber_violations(const SignedGraph& g, int nh, const SignedIndependentSet& j,
                                                   const std::vector<Rational>& psi) {
  std::vector<Rational> load(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto slice = fiber(j, g.vertex_count(), nh, u);
    load[static_cast<std::size_t>(u)] = mask_weight(psi, slice.a) + mask_weight(psi, slice.b);
  }
  std::vector<FiberViolation> out;
  for (const auto& e : g.edges()) {
    Rational sum = load[static_cast<std::size_t>(e.u)] + load[static_cast<std::size_t>(e.v)];
    if (sum > 2) {
      out.push_back({e.u, e.v, sum});
      out.push_back({e.v, e.u, sum});
    }
  }
  std::sort(out.begin(), out.end(), [](const FiberViolation& a, const FiberViolation& b) {
    return std::pair(a.u, a.u2) < std::pair(b.u, b.u2);
  });
  return out;
}

}  // namespace detail

/// Ordered pairs (u, u') adjacent in G with psi(J_u) + psi(J_u') > 2,
/// where psi(J_u) sums psi over the A-part and the B-part of the fiber.
/// Throws InvalidSignedSet if J is not valid in G x H.
inline std::vector<FiberViolation> check_fiber_condition(const SignedGraph& g, const SignedGraph& h,
                                                         const SignedIndependentSet& j,
                                                         const FractionalClique& psi) {
  if (psi.theta.size() != static_cast<std::size_t>(h.vertex_count())) {
    throw Error(Errc::HostMismatch, "psi does not match H");
  }
  check_product_host(j, static_cast<std::size_t>(g.vertex_count()), static_cast<std::size_t>(h.vertex_count()));
  if (!is_signed_independent(direct_product(g, h), j)) {
    throw Error(Errc::InvalidSignedSet, format_set(j) + " is not signed-independent in G x H");
  }
  return detail::fiber_violations(g, h.vertex_count(), j, psi.theta);
}

struct PersistenceCase {
  SignedGraph g;
  Rational w_f_g;
  Rational bound;  // max{w_f(G), w_f(H)}
  Rational max_f;
  SignedIndependentSet worst;
  std::size_t sets_checked = 0;
  std::size_t violations = 0;
  std::size_t fiber_violations = 0;
  bool pass = false;
};

struct PersistenceResult {
  Rational w_f_h;
  std::vector<PersistenceCase> cases;
  Report report;

  bool all_pass() const { return report.all_pass(); }
  std::size_t total_violations() const {
    std::size_t k = 0;
    for (const auto& c : cases) k += c.violations;
    return k;
  }
  std::size_t total_fiber_violations() const {
    std::size_t k = 0;
    for (const auto& c : cases) k += c.fiber_violations;
    return k;
  }
};

/// Desk-scale persistence check of psi: for each G of the family, with phi
/// the optimal dual clique of G, every maximal J of G x H must satisfy
/// f_{phi,psi}(J) <= max{w_f(G), w_f(H)}. Maximal J suffice since f only
/// grows with the pair. Fiber-condition violations are counted alongside.
inline PersistenceResult verify_persistence(const SignedGraph& h, const FractionalClique& psi,
                                            const std::vector<SignedGraph>& family,
                                            CountMode mode = CountMode::Double) {
  if (psi.theta.size() != static_cast<std::size_t>(h.vertex_count())) {
    throw Error(Errc::HostMismatch, "psi does not match H");
  }
  PersistenceResult out;
  out.w_f_h = solve_fractional(h).clique.weight();
  out.report.suite = "persistence";
  for (const auto& g : family) {
    auto gp = solve_fractional(g);
    const SignedGraph product = direct_product(g, h);
    const auto rho = product_weights(gp.clique, psi);

    PersistenceCase c{g, gp.chi_f, std::max(gp.chi_f, out.w_f_h), Rational(0), {}, 0, 0, 0, false};
    for (const auto& j : enumerate_maximal(product)) {
      ++c.sets_checked;
      Rational f = f_phi_psi(j, rho, mode);
      if (c.sets_checked == 1 || f > c.max_f) {
        c.max_f = f;
        c.worst = j;
      }
      if (f > c.bound) ++c.violations;
      c.fiber_violations += detail::fiber_violations(g, h.vertex_count(), j, psi.theta).size();
    }
    c.pass = c.violations == 0;

    ReportCase rc;
    rc.name = "persistence G=[" + describe(g) + "] H=[" + describe(h) + "]";
    rc.add("mode", to_string(mode));
    rc.add("w_f(G)", sigfrac::to_string(c.w_f_g));
    rc.add("w_f(H)", sigfrac::to_string(out.w_f_h));
    rc.add("bound", sigfrac::to_string(c.bound));
    rc.add("max_f", sigfrac::to_string(c.max_f));
    rc.add("worst_J", format_set(c.worst));
    rc.add("sets_checked", std::to_string(c.sets_checked));
    rc.add("violations", std::to_string(c.violations));
    rc.add("fiber_violations", std::to_string(c.fiber_violations));
    rc.pass = c.pass;
    out.report.cases.push_back(std::move(rc));
    out.cases.push_back(std::move(c));
  }
  return out;
}

}  // namespace sigfrac
