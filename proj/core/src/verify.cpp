#include "gds/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "gds/charts.hpp"
#include "gds/corpus.hpp"
#include "gds/derivations.hpp"
#include "gds/error.hpp"
#include "gds/mlcomb.hpp"
#include "gds/presentation.hpp"
#include "gds/transform.hpp"

namespace gds {

bool DocumentReport::ok() const {
  return error.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.ok(); });
}

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(documents.begin(), documents.end(), [](const DocumentReport& d) { return !d.ok(); }));
}

namespace {

void run_checks(const TreeDocument& doc, int extra_m, DocumentReport& out) {
  auto add = [&](CheckReport r) { out.checks.push_back(std::move(r)); };

  CheckReport rt{"dsl-round-trip", 0, {}};
  rt.expect(parse_tree(print_tree(doc)) == doc && parse_tree(out.source) == doc, "printed document does not parse back to itself");
  add(std::move(rt));

  LabelledTree lt;
  WeightedTree wt;
  std::vector<ChartExpansion> charts;
  CheckReport conv{"round-trip", 0, {}};
  if (doc.kind == TreeKind::kLabelled) {
    lt = doc.labelled();
    wt = labelled_to_weighted(lt).wt;
    auto back = weighted_to_labelled(wt);
    conv.expect(back.lt == lt, "labelled -> weighted -> labelled changes the labels");
    charts = std::move(back.charts);
  } else {
    wt = doc.weighted();
    auto fwd = weighted_to_labelled(wt);
    lt = fwd.lt;
    charts = std::move(fwd.charts);
    conv.expect(labelled_to_weighted(lt).wt == wt, "weighted -> labelled -> weighted changes the weights");
  }
  add(std::move(conv));

  const Presentation p = build_presentation(lt);
  add(syzygy_check(p));
  add(minor_check(p));
  add(incomparable_check(p));
  add(verify_embedding(p, charts));
  add(chart_shape_check(wt, charts));
  add(verify_generic_trivialization(p));
  const auto comps = fiber_components(p, charts);
  add(fiber_check(p, comps));
  add(leaf_cover_check(p, comps));

  const int height = lt.tree.height();
  for (int m = height; m <= height + extra_m; ++m) {
    for (auto& r : derivation_suite(build_derivation(lt, m), p, comps)) {
      if (extra_m > 0) r.name += " m=" + std::to_string(m);
      add(std::move(r));
    }
  }

  CheckReport ml{"ml-comb", 0, {}};
  ml.expect(ml_trivial(lt) == lt.tree.is_comb(), "ML verdict differs from the comb criterion");
  add(std::move(ml));
  if (lt.tree.is_comb() && height > 0) add(comb_presentation_check(lt));
  if (ordinary_danielewski_form(lt)) add(collapsed_surface_check(lt, charts));
}

}  // namespace

DocumentReport verify_document(const TreeDocument& doc, int extra_m) {
  DocumentReport out;
  out.name = doc.name;
  for (char ch : print_tree(doc)) {
    if (ch != '\n') {
      out.source += ch;
    } else if (!out.source.empty() && out.source.back() != ' ') {
      out.source += ' ';
    }
  }
  while (!out.source.empty() && out.source.back() == ' ') out.source.pop_back();
  try {
    run_checks(doc, extra_m, out);
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

VerifyReport verify_documents(const std::string& title, const std::vector<TreeDocument>& docs, bool parallel,
                              int extra_m) {
  VerifyReport report{title, std::vector<DocumentReport>(docs.size())};
  if (!parallel || docs.size() < 2) {
    for (std::size_t i = 0; i < docs.size(); ++i) report.documents[i] = verify_document(docs[i], extra_m);
    return report;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::min<std::size_t>(docs.size(), std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < docs.size(); i = next++) {
        report.documents[i] = verify_document(docs[i], extra_m);
      }
    });
  }
  for (auto& t : pool) t.join();
  return report;
}

std::vector<TreeDocument> fuzz_documents(std::size_t count, std::uint64_t seed) {
  TreeGenerator gen(seed);
  std::vector<TreeDocument> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string name = "fuzz" + std::to_string(i);
    out.push_back(i % 2 == 0 ? TreeDocument::of(gen.labelled(), name) : TreeDocument::of(gen.weighted(), name));
  }
  return out;
}

}  // namespace gds
