// sigfrac: exact fractional coloring of signed graphs.
//
// Exit status: 0 success, 1 a verification case failed, 2 bad input,
// 3 size or search limit exceeded.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sigfrac/sigfrac.hpp"

namespace {

using namespace sigfrac;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

// A graph given either as an SG file or as circulant parameters.
struct GraphInput {
  std::string file;
  int circulant_n = 0;
  std::vector<int> pos;
  std::vector<int> neg;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "SG v1 input file");
    cmd->add_option("--circulant", circulant_n, "build G(n, S, T) instead of reading a file");
    cmd->add_option("--pos", pos, "positive distances S")->delimiter(',');
    cmd->add_option("--neg", neg, "negative distances T")->delimiter(',');
  }

  SignedGraph load() const {
    if (!file.empty() && circulant_n != 0) throw Error(Errc::ParseError, "give a file or --circulant, not both");
    if (!file.empty()) return read_sg_file(file);
    if (circulant_n == 0) throw Error(Errc::ParseError, "no graph given (file or --circulant N)");
    return circulant({circulant_n, pos, neg});
  }
};

void write_graph(const SignedGraph& g, const std::string& out) {
  if (out.empty()) {
    std::cout << to_sg(g);
  } else {
    write_sg_file(out, g);
  }
}

int finish(const Report& r) {
  std::cout << (r.all_pass() ? "PASS " : "FAIL ") << r.passed() << "/" << r.cases.size() << "\n";
  return r.all_pass() ? 0 : kExitFail;
}

void print_case(const ReportCase& c) { std::cout << to_text(c) << std::flush; }

CountMode parse_mode(const std::string& s) {
  if (s == "double") return CountMode::Double;
  if (s == "single") return CountMode::Single;
  if (s == "incidence") return CountMode::Incidence;
  throw Error(Errc::ParseError, "unknown count mode '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fractional coloring of signed graphs"};
  app.require_subcommand(1);
  int status = 0;

  // chi-f
  GraphInput chi_in;
  bool chi_witness = false, chi_dump = false;
  auto* chi_cmd = app.add_subcommand("chi-f", "fractional chromatic number");
  chi_in.attach(chi_cmd);
  chi_cmd->add_flag("--witness", chi_witness, "print the optimal weighting and dual clique");
  chi_cmd->add_flag("--dump-lp", chi_dump, "print the covering LP");
  chi_cmd->callback([&] {
    const auto g = chi_in.load();
    if (chi_dump) std::cout << lp::to_text(covering_lp(g, lp_columns(g)));
    const auto r = solve_fractional(g);
    std::cout << "chi_f=" << to_string(r.chi_f) << "\n";
    if (chi_witness) std::cout << format_coloring(r.coloring) << format_clique(r.clique);
  });

  // alpha-s
  GraphInput alpha_in;
  bool alpha_witness = false;
  auto* alpha_cmd = app.add_subcommand("alpha-s", "signed independence number");
  alpha_in.attach(alpha_cmd);
  alpha_cmd->add_flag("--witness", alpha_witness, "print a maximum signed independent set");
  alpha_cmd->callback([&] {
    const auto j = maximum_signed_independent_set(alpha_in.load());
    std::cout << "alpha_s=" << j.size() << "\n";
    if (alpha_witness) std::cout << format_set(j) << "\n";
  });

  // circulant
  CirculantSpec circ_spec;
  std::string circ_out;
  auto* circ_cmd = app.add_subcommand("circulant", "write G(n, S, T) in SG v1");
  circ_cmd->add_option("n", circ_spec.n, "vertex count")->required();
  circ_cmd->add_option("--pos", circ_spec.positive, "positive distances S")->delimiter(',');
  circ_cmd->add_option("--neg", circ_spec.negative, "negative distances T")->delimiter(',');
  circ_cmd->add_option("-o,--output", circ_out, "output file (default stdout)");
  circ_cmd->callback([&] {
    write_graph(circulant({circ_spec.n, circ_spec.positive, circ_spec.negative}), circ_out);
  });

  // product
  std::string prod_kind = "direct", prod_a, prod_b, prod_out;
  int prod_k = 2;
  auto* prod_cmd = app.add_subcommand("product", "direct, lexicographic or K_k blow-up product");
  prod_cmd->add_option("--kind", prod_kind, "direct | lex | blowup")
      ->check(CLI::IsMember({"direct", "lex", "blowup"}));
  prod_cmd->add_option("-k", prod_k, "blow-up size");
  prod_cmd->add_option("a", prod_a, "left SG file")->required();
  prod_cmd->add_option("b", prod_b, "right SG file (direct, lex)");
  prod_cmd->add_option("-o,--output", prod_out, "output file (default stdout)");
  prod_cmd->callback([&] {
    const auto a = read_sg_file(prod_a);
    if (prod_kind == "blowup") {
      write_graph(blowup_complete(a, prod_k), prod_out);
      return;
    }
    if (prod_b.empty()) throw Error(Errc::ParseError, prod_kind + " product needs two graphs");
    const auto b = read_sg_file(prod_b);
    write_graph(prod_kind == "direct" ? direct_product(a, b) : lex_product(a, b), prod_out);
  });

  // coloring
  std::string col_file;
  int col_p = 2, col_q = 1;
  auto* col_cmd = app.add_subcommand("coloring", "search for a (p/q)-coloring");
  col_cmd->add_option("file", col_file, "SG v1 input file")->required();
  col_cmd->add_option("-p", col_p, "number of colors (even)")->required();
  col_cmd->add_option("-q", col_q, "colors per vertex")->required();
  col_cmd->callback([&] {
    const auto c = find_pq_coloring(read_sg_file(col_file), col_p, col_q);
    std::cout << (c ? format_set_coloring(*c) : std::string("NONE")) << "\n";
  });

  // sets
  GraphInput sets_in;
  bool sets_csv = false, sets_columns = false;
  auto* sets_cmd = app.add_subcommand("sets", "list maximal signed independent sets");
  sets_in.attach(sets_cmd);
  sets_cmd->add_flag("--csv", sets_csv, "print the incidence matrix instead");
  sets_cmd->add_flag("--columns", sets_columns, "only sets with distinct incidence vectors");
  sets_cmd->callback([&] {
    const auto g = sets_in.load();
    const auto sets = sets_columns ? lp_columns(g) : enumerate_maximal(g);
    std::cout << (sets_csv ? incidence_csv(g.vertex_count(), sets) : format_sets(sets));
  });

  // hom
  std::string hom_g, hom_h;
  auto* hom_cmd = app.add_subcommand("hom", "search for a switching homomorphism G -> H");
  hom_cmd->add_option("source", hom_g, "source SG file")->required();
  hom_cmd->add_option("target", hom_h, "target SG file")->required();
  hom_cmd->callback([&] {
    const auto hom = find_switching_hom(read_sg_file(hom_g), read_sg_file(hom_h));
    if (!hom) {
      std::cout << "NONE\n";
      return;
    }
    std::cout << format_switch(hom->switch_set) << "\n" << format_map(hom->map) << "\n";
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
  verify_cmd->require_subcommand(1);

  int th_max_n = 5, th_catalog_n = 4, th_n = 0;
  std::string th_left;
  std::vector<int> th_pos, th_neg;
  auto* th_cmd = verify_cmd->add_subcommand("theorem", "chi_f(G x G(n,S,T)) = min of the factors");
  th_cmd->add_option("--max-n", th_max_n, "largest circulant n in the sweep");
  th_cmd->add_option("--catalog-n", th_catalog_n, "largest catalog graph in the sweep");
  th_cmd->add_option("--left-file", th_left, "single case: G from an SG file");
  th_cmd->add_option("--n", th_n, "single case: circulant n");
  th_cmd->add_option("--pos", th_pos, "single case: positive distances")->delimiter(',');
  th_cmd->add_option("--neg", th_neg, "single case: negative distances")->delimiter(',');
  th_cmd->callback([&] {
    if (th_left.empty() != (th_n == 0)) throw Error(Errc::ParseError, "--left-file and --n go together");
    if (!th_left.empty()) {
      Report r{"theorem", {}};
      r.cases.push_back(verify_product_theorem(read_sg_file(th_left), {th_n, th_pos, th_neg}).report);
      print_case(r.cases.back());
      status = finish(r);
      return;
    }
    status = finish(sweep_theorem(th_catalog_n, th_max_n, print_case));
  });

  int l1_max_n = 10, l1_max_gen = -1;
  auto* l1_cmd = verify_cmd->add_subcommand("lemma1", "chi_f(G(n,S,T)) = 2n / alpha_s");
  l1_cmd->add_option("--max-n", l1_max_n, "largest n");
  l1_cmd->add_option("--max-generators", l1_max_gen, "bound on |S| + |T| (default none)");
  l1_cmd->callback([&] { status = finish(sweep_lemma1(l1_max_n, l1_max_gen, print_case)); });

  int ap_max_product = 20;
  auto* ap_cmd = verify_cmd->add_subcommand("alpha-product", "alpha_s of circulant products");
  ap_cmd->add_option("--max-product", ap_max_product, "bound on nm");
  ap_cmd->callback([&] { status = finish(sweep_alpha_product(ap_max_product, print_case)); });

  int du_max_n = 8, du_catalog_n = 4;
  std::string du_file;
  auto* du_cmd = verify_cmd->add_subcommand("duality", "chi_f = w_f with both witnesses checked");
  du_cmd->add_option("--max-n", du_max_n, "largest circulant n in the sweep");
  du_cmd->add_option("--catalog-n", du_catalog_n, "largest catalog graph in the sweep");
  du_cmd->add_option("--graph-file", du_file, "single case from an SG file");
  du_cmd->callback([&] {
    if (!du_file.empty()) {
      Report r{"duality", {}};
      r.cases.push_back(verify_duality_case(read_sg_file(du_file), du_file));
      print_case(r.cases.back());
      status = finish(r);
      return;
    }
    status = finish(sweep_duality(du_max_n, du_catalog_n, print_case));
  });

  int lex_catalog_n = 3, lex_max_k = 2;
  bool lex_chromatic = false;
  auto* lex_cmd = verify_cmd->add_subcommand("lex-lemma", "(G x H)[K_k] -> G[K_k] x H[K_k]");
  lex_cmd->add_option("--catalog-n", lex_catalog_n, "largest catalog graph");
  lex_cmd->add_option("--max-k", lex_max_k, "largest blow-up size");
  lex_cmd->add_flag("--chromatic", lex_chromatic, "also compare chi_signed of both sides");
  lex_cmd->callback([&] {
    LexLemmaOptions opts;
    opts.compute_chromatic = lex_chromatic;
    status = finish(sweep_lex_lemma(lex_catalog_n, lex_max_k, opts, print_case));
  });

  int pe_max_n = 6, pe_catalog_n = 3;
  std::string pe_mode = "double";
  auto* pe_cmd = verify_cmd->add_subcommand("persistence", "optimal circulant cliques against the catalog");
  pe_cmd->add_option("--max-n", pe_max_n, "largest circulant n");
  pe_cmd->add_option("--catalog-n", pe_catalog_n, "largest catalog graph");
  pe_cmd->add_option("--count-mode", pe_mode, "double | single | incidence");
  pe_cmd->callback([&] {
    status = finish(sweep_persistence(pe_max_n, pe_catalog_n, parse_mode(pe_mode), print_case));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  } catch (const Error& e) {
    std::cout << std::flush;
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::SizeLimitExceeded ? kExitLimit : kExitInput;
  }
  return status;
}
