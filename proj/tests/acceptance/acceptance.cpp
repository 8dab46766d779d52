// Acceptance suite: one line per criterion, exact rational checks only.
// Exit status is nonzero when any criterion other than the persistence
// sweep (8) fails; 8 reports its violations as findings.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "sigfrac/sigfrac.hpp"

namespace {

using namespace sigfrac;

struct Line {
  int criterion;
  bool pass;
  std::string detail;
};

std::vector<Line> lines;
bool all_certified = true;
std::size_t solves_seen = 0;

void report(int criterion, bool pass, std::string detail, const char* verdict = nullptr) {
  std::printf("criterion %d: %s %s\n", criterion, verdict ? verdict : (pass ? "PASS" : "FAIL"), detail.c_str());
  std::fflush(stdout);
  lines.push_back({criterion, pass, std::move(detail)});
}

std::string field(const ReportCase& c, const std::string& key) {
  for (const auto& [k, v] : c.fields)
    if (k == key) return v;
  return "";
}

// Every report case that came from an LP solve carries a certified field.
void note_certified(const Report& r) {
  for (const auto& c : r.cases) {
    const auto f = field(c, "certified");
    if (f.empty()) continue;
    ++solves_seen;
    all_certified = all_certified && f == "true";
  }
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.cases) {
    if (c.pass) continue;
    std::string s = c.name;
    for (const auto& [k, v] : c.fields)
      if (k.rfind("witness", 0) != 0) s += "; " + k + "=" + v;
    return s;
  }
  return "none";
}

std::string tally(const Report& r) {
  return std::to_string(r.passed()) + "/" + std::to_string(r.cases.size()) + " cases hold";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string timing(std::chrono::steady_clock::time_point t0) {
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.1fs)", seconds_since(t0));
  return buf;
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  auto r = sweep_duality(8, 4);
  note_certified(r);
  report(1, r.all_pass(), "chi_f = w_f on circulants n<=8 and catalog n<=4: " + tally(r) + timing(t0));
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  auto r = sweep_lemma1(10, 3);
  note_certified(r);
  report(2, r.all_pass(), "chi_f = 2n/alpha_s for 3<=n<=10, |S|+|T|<=3: " + tally(r) + timing(t0));
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  const auto neg_tri = circulant({3, {}, {1}});
  const auto c5 = circulant({5, {1}, {}});
  auto spot1 = verify_product_theorem(neg_tri, {3, {1}, {}});
  auto spot2 = verify_product_theorem(c5, {3, {1}, {}});
  const bool spots = spot1.product.chi_f == 2 && spot2.product.chi_f == make_rational(5, 2) && spot1.pass &&
                     spot2.pass;
  auto r = sweep_theorem(4, 5);
  note_certified(r);
  report(3, spots && r.all_pass(),
         "chi_f(G x G(n,S,T)) = min, catalog n<=4 x circulant n<=5: " + tally(r) +
             "; spot negTri x K3+ = " + to_string(spot1.product.chi_f) + ", C5+ x K3+ = " +
             to_string(spot2.product.chi_f) + "; first counterexample: " + first_failure(r) + timing(t0));
}

void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  auto named = verify_alpha_product({3, {}, {1}}, {3, {1}, {}});
  auto r = sweep_alpha_product(20);
  report(4, named.alpha_product == 9 && named.pass && r.all_pass(),
         "alpha_s(G x H) = max{alpha_s(G)|V(H)|, alpha_s(H)|V(G)|} for circulants, nm<=20: " + tally(r) +
             "; named G(3,{},{1}) x G(3,{1},{}) = " + std::to_string(named.alpha_product) +
             "; first counterexample: " + first_failure(r) + timing(t0));
}

void criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(20240605);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int held = 0;
  std::string bad = "none";
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < 0.5) edges.push_back({u, v, coin(rng) < 0.5 ? Sign::Positive : Sign::Negative});
    const SignedGraph g(n, std::move(edges));
    std::vector<Vertex> x;
    for (int v = 0; v < n; ++v)
      if (rng() & 1) x.push_back(v);
    const SignedGraph gx = switch_at(g, x);
    auto a = solve_fractional(g), b = solve_fractional(gx);
    ++solves_seen;
    ++solves_seen;
    all_certified = all_certified && a.certified && b.certified;
    if (alpha_s(g) == alpha_s(gx) && a.chi_f == b.chi_f) {
      ++held;
    } else if (bad == "none") {
      bad = describe(g);
    }
  }
  report(5, held == 100, "alpha_s and chi_f unchanged under switching: " + std::to_string(held) +
                             "/100 random pairs; first failure: " + bad + timing(t0));
}

// Replaces one color of a vertex by a color its neighbor forbids.
SetColoring mutate(const SignedGraph& g, const SetColoring& c, std::mt19937& rng) {
  const auto& e = g.edges()[rng() % g.edges().size()];
  const bool flip = rng() & 1;
  const Vertex v = flip ? e.u : e.v, u = flip ? e.v : e.u;
  const ColorSet fu = c.sets[static_cast<std::size_t>(u)];
  const ColorSet forbidden = e.sign == Sign::Positive ? fu : antipode(fu, c.p);
  auto pick = [&](ColorSet s) {
    auto vs = vertices_of(s);
    return vs[rng() % vs.size()];
  };
  SetColoring out = c;
  auto& fv = out.sets[static_cast<std::size_t>(v)];
  fv = (fv & ~bit(pick(fv))) | bit(pick(forbidden));
  return out;
}

void criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, SignedGraph>> graphs;
  for (const auto& g : signed_graph_catalog_upto(4)) graphs.emplace_back("[" + describe(g) + "]", g);
  for (const auto& spec : circulant_sweep(3, 6)) graphs.emplace_back(describe(spec), circulant(spec));

  std::mt19937 rng(6);
  int tested = 0, colored = 0, rejected = 0, mutations = 0;
  std::vector<std::string> failures;
  for (const auto& [name, g] : graphs) {
    if (g.edge_count() == 0) continue;
    auto fr = solve_fractional(g);
    ++solves_seen;
    all_certified = all_certified && fr.certified;
    long p = fr.chi_f.get_num().get_si(), q = fr.chi_f.get_den().get_si();
    if (p % 2) {
      p *= 2;
      q *= 2;
    }
    if (p > 12) continue;
    ++tested;
    auto c = find_pq_coloring(g, static_cast<int>(p), static_cast<int>(q));
    if (!c || !validate_pq(g, *c)) {
      auto doubled = find_pq_coloring(g, static_cast<int>(2 * p), static_cast<int>(2 * q));
      failures.push_back(name + " at " + std::to_string(p) + "/" + std::to_string(q) +
                         (doubled ? " (colorable at " + std::to_string(2 * p) + "/" + std::to_string(2 * q) + ")"
                                  : ""));
      continue;
    }
    ++colored;
    for (int m = 0; m < 100; ++m, ++mutations)
      if (!validate_pq(g, mutate(g, *c, rng))) ++rejected;
  }
  std::string detail = "find_pq_coloring at evenized (p*, q*): " + std::to_string(colored) + "/" +
                       std::to_string(tested) + " graphs; mutations rejected " + std::to_string(rejected) + "/" +
                       std::to_string(mutations) + "; no witness: ";
  for (std::size_t i = 0; i < failures.size(); ++i) detail += (i ? ", " : "") + failures[i];
  if (failures.empty()) detail += "none";
  report(6, failures.empty() && colored == tested && rejected == mutations, detail + timing(t0));
}

void criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  auto r = sweep_lex_lemma(3, 2);
  report(7, r.all_pass(), "(g,h,i) -> (g,i,h,i) is a sign-preserving homomorphism, catalog n<=3, k<=2: " + tally(r) +
                              timing(t0));
}

void criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  const auto family = signed_graph_catalog_upto(3);
  std::size_t cases = 0, failing_cases = 0, sets = 0, violations = 0, fiber = 0;
  std::size_t single_violations = 0, incidence_violations = 0;
  std::string first = "none";
  for (const auto& spec : circulant_sweep(3, 6)) {
    const auto h = circulant(spec);
    const auto hr = solve_fractional(h);
    ++solves_seen;
    all_certified = all_certified && hr.certified;
    auto res = verify_persistence(h, hr.clique, family, CountMode::Double);
    for (std::size_t i = 0; i < res.cases.size(); ++i) {
      const auto& c = res.cases[i];
      ++cases;
      sets += c.sets_checked;
      violations += c.violations;
      fiber += c.fiber_violations;
      if (!c.pass) {
        ++failing_cases;
        if (first == "none") {
          first = "H=" + describe(spec) + " G=[" + describe(c.g) + "] max_f=" + to_string(c.max_f) +
                  " bound=" + to_string(c.bound) + " J=" + format_set(c.worst);
        }
      }
    }
    single_violations += verify_persistence(h, hr.clique, family, CountMode::Single).total_violations();
    incidence_violations += verify_persistence(h, hr.clique, family, CountMode::Incidence).total_violations();
  }
  const bool pass = failing_cases == 0 && fiber == 0;
  report(8, pass,
         "persistence of optimal circulant cliques (n<=6) against catalog n<=3: " +
             std::to_string(cases - failing_cases) + "/" + std::to_string(cases) + " cases hold, " +
             std::to_string(sets) + " maximal J checked, f > bound on " + std::to_string(violations) +
             " (single count " + std::to_string(single_violations) + ", incidence-weighted count " +
             std::to_string(incidence_violations) + "), fiber-condition violations " + std::to_string(fiber) +
             "; first: " + first + timing(t0),
         pass ? "PASS" : "FAIL [finding, not counted in exit status]");
}

void criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  auto q = [](long n, long d = 1) { return make_rational(n, d); };
  lp::LpProblem beale;
  beale.objective = {q(-3, 4), q(20), q(-1, 2), q(6)};
  beale.rows = {{q(1, 4), q(-8), q(-1), q(9)}, {q(1, 2), q(-12), q(-1, 2), q(3)}, {q(0), q(0), q(1), q(0)}};
  beale.senses.assign(3, lp::Sense::LessEqual);
  beale.rhs = {q(0), q(0), q(1)};
  auto s = lp::solve(beale);
  const bool beale_ok = s.status == lp::Status::Optimal && s.objective == q(-5, 4) && s.pivots <= 35 &&
                        lp::verify_certificate(beale, s);
  report(9, beale_ok && all_certified,
         "verify_certificate accepted every solve (" + std::to_string(solves_seen) + " solves, all " +
             (all_certified ? "certified" : "NOT certified") + "); Beale instance optimum " + to_string(s.objective) +
             " after " + std::to_string(s.pivots) + " pivots (bound C(7,3) = 35)" + timing(t0));
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
  } catch (const Error& e) {
    std::printf("aborted: %s: %s\n", std::string(to_string(e.code())).c_str(), e.what());
    return 2;
  }
  int failed = 0;
  for (const auto& l : lines)
    if (!l.pass && l.criterion != 8) ++failed;
  std::printf("%d of 9 criteria pass\n", static_cast<int>(std::count_if(lines.begin(), lines.end(),
                                                                        [](const Line& l) { return l.pass; })));
  return failed == 0 ? 0 : 1;
}
