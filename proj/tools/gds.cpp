#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gds/corpus.hpp"
#include "gds/emit.hpp"
#include "gds/error.hpp"
#include "gds/verify.hpp"

namespace {

using namespace gds;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kUsageError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  std::string format;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
  if (with_input) cmd->add_option("input", c.input, "Tree document (default: stdin)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "latex", "dot"}));
  cmd->add_option("--out", c.out, "Write output to this file");
}

// Reads a file, stdin for "" or "-", or an embedded document of the same name.
std::pair<std::string, std::string> read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {"<stdin>", std::string(std::istreambuf_iterator<char>(std::cin), {})};
  }
  std::ifstream in(path, std::ios::binary);
  if (in) return {path, std::string(std::istreambuf_iterator<char>(in), {})};
  const std::string base = std::filesystem::path(path).filename().string();
  for (const auto& e : embedded_corpus()) {
    if (e.file == base || e.file == base + ".tree") return {path, e.text};
  }
  throw InputError("cannot read '" + path + "'");
}

TreeDocument load(const std::string& path) {
  const auto [where, text] = read_input(path);
  try {
    return parse_tree(text);
  } catch (const ParseError& e) {
    throw InputError(where + ":" + e.what());
  }
}

Format format_of(const Common& c, Format fallback = Format::kText) {
  return c.format.empty() ? fallback : parse_format(c.format);
}

void write(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + c.out + "'");
}

LabelledTree as_labelled(const TreeDocument& doc) {
  return doc.kind == TreeKind::kLabelled ? doc.labelled() : weighted_to_labelled(doc.weighted()).lt;
}

bool all_ok(const std::vector<CheckReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckReport& r) { return r.ok(); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Danielewski surfaces from labelled and weighted trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gds 0.1.0");

  Common c;
  auto* equations = app.add_subcommand("equations", "Print the generators of the presentation");
  add_common(equations, c);
  auto* convert = app.add_subcommand("convert", "Convert between labelled and weighted trees");
  add_common(convert, c);
  auto* derivation = app.add_subcommand("derivation", "Triangular derivation and its checks");
  add_common(derivation, c);
  std::optional<int> m;
  std::string g = "1";
  derivation->add_option("--m", m, "Exponent of h on X_0 (default: tree height)");
  derivation->add_option("--g", g, "Multiplier in h, not divisible by h");
  auto* fiber = app.add_subcommand("fiber", "Components of the fiber over h = 0");
  add_common(fiber, c);
  auto* charts = app.add_subcommand("charts", "Per-leaf chart expansions");
  add_common(charts, c);
  auto* verify = app.add_subcommand("verify", "Run every invariant check");
  add_common(verify, c);
  std::size_t fuzz = 0;
  std::uint64_t seed = 1;
  bool parallel = false;
  int extra_m = 0;
  verify->add_option("--fuzz", fuzz, "Check this many random trees instead of an input");
  verify->add_option("--seed", seed, "Seed for --fuzz");
  verify->add_option("--extra-m", extra_m, "Also check derivations up to m = height + k")->check(CLI::Range(0, 8));
  verify->add_flag("--parallel", parallel, "Check documents on several threads");
  auto* ml = app.add_subcommand("ml", "Makar-Limanov verdict and comb normal form");
  add_common(ml, c);
  auto* qhp = app.add_subcommand("qhp", "Quotient data xz = t^n - 1 with a cyclic action");
  add_common(qhp, c, false);
  int qm = 0;
  int qn = 0;
  int qq = 0;
  qhp->add_option("--m", qm, "Order of the cyclic group")->required();
  qhp->add_option("--n", qn, "Exponent of t")->required();
  qhp->add_option("--q", qq, "Weight of t")->required();
  auto* corpus = app.add_subcommand("corpus", "List, show or check the built-in examples");
  add_common(corpus, c, false);
  std::string action = "list";
  std::string entry;
  corpus->add_option("action", action, "list, show or run")->check(CLI::IsMember({"list", "show", "run"}));
  corpus->add_option("name", entry, "Document to show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*equations) {
      const auto doc = load(c.input);
      write(c, emit_presentation(build_presentation(as_labelled(doc)), doc.name, format_of(c)));
    } else if (*convert) {
      const auto doc = load(c.input);
      if (doc.kind == TreeKind::kLabelled) {
        const auto r = labelled_to_weighted(doc.labelled());
        write(c, emit_conversion(TreeDocument::of(r.wt, doc.name), r.trace, format_of(c)));
      } else {
        const auto r = weighted_to_labelled(doc.weighted());
        write(c, emit_conversion(TreeDocument::of(r.lt, doc.name), r.trace, format_of(c)));
      }
    } else if (*derivation) {
      const auto doc = load(c.input);
      const auto lt = as_labelled(doc);
      Poly mult;
      try {
        mult = parse_poly(g);
      } catch (const Error& e) {
        throw InputError(std::string("--g: ") + e.what());
      }
      const auto p = build_presentation(lt);
      const auto d = build_derivation(lt, m.value_or(lt.tree.height()), mult);
      const auto checks = derivation_suite(d, p, fiber_components(p));
      write(c, emit_derivation(p, doc.name, d, checks, format_of(c)));
      return all_ok(checks) ? kOk : kVerifyFailed;
    } else if (*fiber) {
      const auto doc = load(c.input);
      const auto p = build_presentation(as_labelled(doc));
      write(c, emit_fiber(p, doc.name, fiber_components(p), format_of(c)));
    } else if (*charts) {
      const auto doc = load(c.input);
      const auto cs = doc.kind == TreeKind::kLabelled ? charts_for_labelled(doc.labelled())
                                                     : charts_for(doc.weighted());
      write(c, emit_charts(doc, cs, format_of(c)));
    } else if (*verify) {
      VerifyReport r;
      if (fuzz > 0) {
        if (!c.input.empty()) throw UsageError("--fuzz takes no input document");
        r = verify_documents("fuzz count=" + std::to_string(fuzz) + " seed=" + std::to_string(seed),
                             fuzz_documents(fuzz, seed), parallel, extra_m);
      } else {
        const auto doc = load(c.input);
        r = verify_documents(doc.name, {doc}, parallel, extra_m);
      }
      write(c, emit_verify(r, format_of(c)));
      return r.ok() ? kOk : kVerifyFailed;
    } else if (*ml) {
      const auto doc = load(c.input);
      write(c, emit_ml(ml_report(TreeDocument::of(as_labelled(doc), doc.name)), format_of(c)));
    } else if (*qhp) {
      write(c, emit_qhp(qhp_quotient_data(qm, qn, qq), format_of(c, Format::kJson)));
    } else if (*corpus) {
      const Format f = format_of(c);
      if (action == "show") {
        if (entry.empty()) throw UsageError("corpus show needs a document name");
        write(c, corpus_entry(entry).text);
      } else if (action == "list") {
        std::string out;
        for (const auto& e : embedded_corpus()) out += e.file + (e.valid ? " valid\n" : " rejected\n");
        write(c, out);
      } else {
        std::vector<TreeDocument> docs;
        VerifyReport rejected{"rejected", {}};
        for (const auto& e : embedded_corpus()) {
          if (e.valid) {
            docs.push_back(parse_tree(e.text));
            continue;
          }
          DocumentReport d;
          d.name = e.file;
          CheckReport cr{"rejected-by-parser", 0, {}};
          bool threw = false;
          try {
            parse_tree(e.text);
          } catch (const Error&) {
            threw = true;
          }
          cr.expect(threw, "document was expected to be rejected");
          d.checks.push_back(std::move(cr));
          rejected.documents.push_back(std::move(d));
        }
        auto r = verify_documents("corpus", docs, parallel);
        for (auto& d : rejected.documents) r.documents.push_back(std::move(d));
        write(c, emit_verify(r, f));
        return r.ok() ? kOk : kVerifyFailed;
      }
    }
  } catch (const InputError& e) {
    std::cerr << "gds: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "gds: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "gds: " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidArgument ? kUsageError : kInputError;
  }
  return kOk;
}
