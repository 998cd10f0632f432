#include "gds/corpus.hpp"

#include <algorithm>
#include <deque>

#include "gds/error.hpp"

namespace gds {

namespace {

struct RawDocument {
  const char* file;
  const char* text;
};

#include "corpus_data.inc"

}  // namespace

const std::vector<CorpusEntry>& embedded_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const auto& raw : kRawCorpus) {
      bool valid = true;
      try {
        parse_tree(raw.text);
      } catch (const Error&) {
        valid = false;
      }
      out.push_back(CorpusEntry{raw.file, raw.text, valid});
    }
    return out;
  }();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : embedded_corpus()) {
    if (e.file == name || e.file == name + ".tree") return e;
  }
  throw Error(ErrorCode::kInvalidArgument, "no corpus document named '" + name + "'");
}

TreeGenerator::TreeGenerator(std::uint64_t seed, RandomTreeOptions options)
    : rng_(seed), options_(options) {}

int chart_degree_bound(const RootedTree& t) {
  std::map<NodeId, int> deg;  // bound for X_e
  std::map<NodeId, int> root_deg;  // bound for R_e
  int best = 1;
  for (const auto& e : t.nodes()) {
    const auto par = t.parent(e);
    const int parent_deg = par ? deg.at(*par) : 1;
    if (par) {
      const int grand_deg = t.parent(*par) ? deg.at(*t.parent(*par)) : 1;
      root_deg[e] = root_deg.at(*par) + static_cast<int>(t.children(*par).size() - 1) * grand_deg;
    } else {
      root_deg[e] = 0;
    }
    if (t.is_leaf(e)) continue;
    deg[e] = static_cast<int>(t.children(e).size()) * parent_deg + root_deg[e];
    best = std::max(best, deg[e]);
  }
  return best;
}

RootedTree TreeGenerator::shape() {
  while (true) {
    RootedTree t = draw_shape();
    if (chart_degree_bound(t) <= options_.max_chart_degree) return t;
  }
}

RootedTree TreeGenerator::draw_shape() {
  RootedTree t("e0");
  std::deque<NodeId> frontier{"e0"};
  int count = 1;
  while (!frontier.empty() && count < options_.max_nodes) {
    const NodeId e = frontier.front();
    frontier.pop_front();
    const int lvl = t.level(e);
    if (lvl >= options_.max_height) continue;
    // The root always branches; deeper nodes thin out.
    int k = e == t.root() ? 1 + static_cast<int>(draw(static_cast<std::uint64_t>(options_.max_children)))
                          : static_cast<int>(draw(static_cast<std::uint64_t>(options_.max_children + 1 + lvl)));
    k = std::min({k, options_.max_children, options_.max_nodes - count});
    for (int i = 0; i < k; ++i) {
      const NodeId c = "e" + std::to_string(count++);
      t.add_child(e, c);
      frontier.push_back(c);
    }
  }
  return t;
}

std::map<NodeId, Rat> TreeGenerator::decorate(const RootedTree& t) {
  static const std::vector<Rat> pool = {Rat(0),     Rat(1),     Rat(-1),   Rat(2),    Rat(-2),
                                        Rat(1, 2),  Rat(-1, 2), Rat(3),    Rat(-3),   Rat(3, 2),
                                        Rat(-2, 3), Rat(5, 4)};
  std::map<NodeId, Rat> out;
  for (const auto& e : t.nodes()) {
    std::vector<Rat> avail = pool;
    for (const auto& c : t.children(e)) {
      const auto i = static_cast<std::size_t>(draw(avail.size()));
      out[c] = avail[i];
      avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return out;
}

LabelledTree TreeGenerator::labelled() {
  RootedTree t = shape();
  auto labels = decorate(t);
  return LabelledTree{std::move(t), std::move(labels)};
}

WeightedTree TreeGenerator::weighted() {
  RootedTree t = shape();
  auto weights = decorate(t);
  return WeightedTree{std::move(t), std::move(weights)};
}

}  // namespace gds
