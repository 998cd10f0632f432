// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "gds/charts.hpp"
#include "gds/corpus.hpp"
#include "gds/derivations.hpp"
#include "gds/dsl.hpp"
#include "gds/emit.hpp"
#include "gds/mlcomb.hpp"
#include "gds/presentation.hpp"
#include "gds/transform.hpp"

namespace {

using namespace gds;
using json = nlohmann::json;

constexpr std::uint64_t kCorpusSeed = 2024;
constexpr int kCorpusSize = 100;

struct Failures {
  std::vector<std::string> items;
  void expect(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
  void absorb(const CheckReport& r, const std::string& where) {
    for (const auto& f : r.failures) items.push_back(where + ": " + r.name + ": " + f);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string tmp_path(const std::string& stem) {
  return (std::string(GDS_BINARY_DIR) + "/acceptance_" + stem);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + GDS_CLI_PATH + "\" " + args;
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string corpus_file(const std::string& name) { return std::string(GDS_CORPUS_DIR) + "/" + name; }

LabelledTree doc_labelled(const std::string& name) { return parse_tree(corpus_entry(name).text).labelled(); }

Poly poly_in(const RootedTree& t, const std::string& text) { return parse_poly(text, tree_resolver(t)); }

bool same_polys(std::vector<Poly> a, std::vector<Poly> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    auto it = std::find(b.begin(), b.end(), p);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

struct Corpus {
  std::vector<LabelledTree> labelled;
  std::vector<WeightedTree> weighted;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    TreeGenerator lg(kCorpusSeed);
    TreeGenerator wg(kCorpusSeed + 1);
    for (int i = 0; i < kCorpusSize; ++i) {
      out.labelled.push_back(lg.labelled());
      out.weighted.push_back(wg.weighted());
    }
    return out;
  }();
  return c;
}

std::string tag(const LabelledTree& lt) { return print_tree(TreeDocument::of(lt, "t")); }

void golden_bml(Failures& f) {
  const std::string out = tmp_path("bml_equations.json");
  f.expect(run_cli("equations \"" + corpus_file("bml.tree") + "\" --format json --out \"" + out + "\"") == 0,
           "equations exited nonzero");
  const auto t = doc_labelled("bml").tree;
  const json j = json::parse(slurp(out), nullptr, false);
  std::vector<Poly> got;
  if (j.is_object() && j.contains("polynomials")) {
    for (const auto& [name, text] : j["polynomials"].items()) got.push_back(poly_in(t, text.get<std::string>()));
  }
  const std::vector<Poly> want = {poly_in(t, "h*X_e0 - X_0*(X_0^2 - 1)"),
                                  poly_in(t, "X_0*X_e1 - X_e0*(X_e0^2 - 1)"),
                                  poly_in(t, "h*X_e1 - (X_0^2 - 1)*(X_e0^2 - 1)")};
  f.expect(same_polys(got, want), "generators differ from the three displayed equations");
}

void golden_strange(Failures& f) {
  const auto lt = doc_labelled("strange_labelled");
  const auto& t = lt.tree;
  std::vector<Poly> got;
  for (const auto& g : build_presentation(lt).generators()) got.push_back(g.poly);
  const std::vector<Poly> want = {poly_in(t, "h*X_e0 - (X_0^2 - 1)"),
                                  poly_in(t, "h*X_e1 - (X_0 + 1)*(X_e0 - 2)"),
                                  poly_in(t, "h*X_e2 - (X_0 - 1)*(X_e0 + 2)"),
                                  poly_in(t, "(X_0 - 1)*X_e1 - X_e0*(X_e0 - 2)"),
                                  poly_in(t, "(X_0 + 1)*X_e2 - X_e0*(X_e0 + 2)")};
  f.expect(same_polys(got, want), "labelled tree does not give the five displayed generators");
  const auto wt = parse_tree(corpus_entry("strange_weighted").text).weighted();
  const auto conv = weighted_to_labelled(wt);
  const std::map<NodeId, Rat> labels = {{"e1", Rat(1)}, {"e2", Rat(-1)}, {"f1", Rat(2)}, {"f2", Rat(-2)}};
  f.expect(conv.lt.labels == labels, "weighted tree does not convert to labels 1, -1, 2, -2");
  f.expect(conv.lt == lt, "converted weighted tree differs from the labelled document");
}

void golden_derivation(Failures& f) {
  const std::string out = tmp_path("bml_derivation.json");
  f.expect(run_cli("derivation --m 2 \"" + corpus_file("bml.tree") + "\" --format json --out \"" + out + "\"") == 0,
           "derivation exited nonzero");
  const auto t = doc_labelled("bml").tree;
  const json j = json::parse(slurp(out), nullptr, false);
  if (!j.is_object() || !j.contains("images")) {
    f.expect(false, "no images in the derivation output");
    return;
  }
  const auto& im = j["images"];
  auto image = [&](const char* v) { return im.contains(v) ? poly_in(t, im[v].get<std::string>()) : Poly(-999); };
  f.expect(image("h").is_zero(), "D(h) != 0");
  f.expect(image("X_0") == poly_in(t, "h^2"), "D(X_0) != h^2");
  f.expect(image("X_e0") == poly_in(t, "h*(3*X_0^2 - 1)"), "D(X_e0) differs");
  f.expect(image("X_e1") == poly_in(t, "2*h*X_0*(X_e0^2 - 1) + 2*(X_0^2 - 1)*(3*X_0^2 - 1)*X_e0"),
           "D(X_e1) differs");
}

void syzygies(Failures& f) {
  for (const auto& lt : corpus().labelled) {
    f.expect(lt.tree.height() <= 4 && lt.tree.size() <= 15 && is_fine(lt), "corpus tree out of bounds: " + tag(lt));
    const auto p = build_presentation(lt);
    // Direct expansion of both sides for every pair.
    const Poly h = Poly::var(VarId::h());
    for (const auto& [key, delta] : p.gensA) {
      const auto& [a, e] = key;
      const NodeId mid = lt.tree.child_on_path(a, e);
      const Poly q = divide_exact(q_poly(lt, e), root_poly(lt, mid));
      const Poly rhs = Poly::linear(parent_var(lt.tree, a), lt.label(mid)) * p.gens0.at(e) - q * p.gens0.at(a);
      f.expect(h * delta == rhs, "syzygy (" + a + ", " + e + ") on " + tag(lt));
    }
    f.absorb(syzygy_check(p), tag(lt));
    f.absorb(incomparable_check(p), tag(lt));
  }
}

void embedding(Failures& f) {
  for (const auto& lt : corpus().labelled) {
    const auto p = build_presentation(lt);
    const auto wt = labelled_to_weighted(lt).wt;
    const auto charts = weighted_to_labelled(wt).charts;
    f.absorb(verify_embedding(p, charts), tag(lt));
    f.absorb(chart_shape_check(wt, charts), tag(lt));
    f.absorb(verify_generic_trivialization(p), tag(lt));
    const auto comps = fiber_components(p, charts);
    f.expect(comps.size() == lt.tree.leaves().size(), "component count differs on " + tag(lt));
    f.absorb(fiber_check(p, comps), tag(lt));
    f.absorb(leaf_cover_check(p, comps), tag(lt));
  }
}

void round_trips(Failures& f) {
  for (const auto& lt : corpus().labelled) {
    f.expect(weighted_to_labelled(labelled_to_weighted(lt).wt).lt == lt, "labelled round-trip on " + tag(lt));
  }
  for (const auto& wt : corpus().weighted) {
    const auto back = labelled_to_weighted(weighted_to_labelled(wt).lt).wt;
    f.expect(back == wt, "weighted round-trip on " + print_tree(TreeDocument::of(wt, "t")));
  }
}

void derivations(Failures& f) {
  for (const auto& lt : corpus().labelled) {
    const auto p = build_presentation(lt);
    const auto comps = fiber_components(p, weighted_to_labelled(labelled_to_weighted(lt).wt).charts);
    const int height = lt.tree.height();
    for (int m = height; m <= height + 2; ++m) {
      const auto d = build_derivation(lt, m);
      for (const auto& r : derivation_suite(d, p, comps)) f.absorb(r, tag(lt) + " m=" + std::to_string(m));
      for (const auto& c : comps) {
        f.expect(fixed_point_order(d, c) == m - lt.tree.level(c.leaf),
                 "fixed point order on " + c.leaf + " of " + tag(lt));
      }
    }
  }
}

void ml_comb(Failures& f) {
  for (const auto& lt : corpus().labelled) {
    f.expect(ml_trivial(lt) == lt.tree.is_comb(), "ML verdict differs on " + tag(lt));
  }
  const auto bml = doc_labelled("bml");
  f.expect(ml_trivial(bml), "BML not reported trivial");
  f.expect(!ordinary_danielewski_form(bml).has_value(), "BML has an ordinary form");
  const auto comb = parse_tree("labelled c (e0 (a:0) (b:1) (c:-1))").labelled();
  const auto form = ordinary_danielewski_form(comb);
  const auto sym = [](std::string_view n) { return VarId::sym(n); };
  f.expect(form && danielewski_surface(form->p) == parse_poly("x*z - (y^3 - y)", sym),
           "height-1 comb does not give xz - (y^3 - y)");
  const auto nf = comb_normal_form(bml);
  const auto s = comb_renaming(bml);
  std::vector<Poly> renamed;
  for (const auto& g : comb_equations(nf)) renamed.push_back(substitute(g.poly, s));
  std::vector<Poly> gens;
  for (const auto& g : build_presentation(bml).generators()) gens.push_back(g.poly);
  f.expect(nf.n == 2 && same_polys(renamed, gens), "BML normal form does not re-emit the presentation");
}

void qhp(Failures& f) {
  const auto a = qhp_quotient_data(3, 3, 1);
  f.expect(a.invariant, "(3,3,1) invariance fails");
  const std::string out = tmp_path("qhp.json");
  f.expect(run_cli("qhp --m 4 --n 2 --q 1 --format json --out \"" + out + "\"") == 0, "qhp (4,2,1) exited nonzero");
  const json j = json::parse(slurp(out), nullptr, false);
  f.expect(j.is_object() && j.value("n_divides_m", false) && j.value("gcd_condition", false),
           "(4,2,1) stated conditions not reported as passing");
  f.expect(j.is_object() && !j.value("invariant", true) && j.value("invariance_residue", 0) == 2,
           "(4,2,1) invariance congruence not flagged");
  f.expect(emit_qhp(qhp_quotient_data(4, 2, 1), Format::kText).find("FLAGGED") != std::string::npos,
           "text report does not flag (4,2,1)");
}

void determinism(Failures& f) {
  const std::string a = tmp_path("fuzz_a.txt");
  const std::string b = tmp_path("fuzz_b.txt");
  f.expect(run_cli("verify --fuzz 100 --seed 7 --out \"" + a + "\"") == 0, "first fuzz run failed");
  f.expect(run_cli("verify --fuzz 100 --seed 7 --out \"" + b + "\"") == 0, "second fuzz run failed");
  const std::string x = slurp(a);
  f.expect(!x.empty() && x == slurp(b), "fuzz reports differ");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Failures&)>>> criteria = {
      {"golden equations (BML)", golden_bml},
      {"golden equations and conversion (Strange)", golden_strange},
      {"golden derivation (BML, m = 2)", golden_derivation},
      {"syzygy suite", syzygies},
      {"embedding and chart suite", embedding},
      {"round-trips", round_trips},
      {"derivation suite", derivations},
      {"ML and comb", ml_comb},
      {"QHP validator", qhp},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Failures f;
    try {
      criteria[i].second(f);
    } catch (const std::exception& e) {
      f.items.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (f.items.empty() ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << "\n";
    for (std::size_t k = 0; k < f.items.size() && k < 10; ++k) std::cerr << "  " << f.items[k] << "\n";
    failed += f.items.empty() ? 0 : 1;
  }
  std::cout.flush();
  return failed == 0 ? 0 : 1;
}
