#include "gds/emit.hpp"

#include <json.hpp>
#include <sstream>

#include "gds/error.hpp"

namespace gds {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "latex") return Format::kLatex;
  if (name == "dot") return Format::kDot;
  throw Error(ErrorCode::kInvalidArgument, "unknown format '" + std::string(name) + "'");
}

namespace {

std::string printed(const TreeDocument& doc) {
  std::string s = print_tree(doc);
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

const char* kind_name(TreeKind k) { return k == TreeKind::kLabelled ? "labelled" : "weighted"; }

std::string escape_latex(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '#' || c == '%' || c == '&' || c == '$') out += '\\';
    out += c;
  }
  return out;
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<VarId> sorted_keys(const Substitution& s) {
  std::vector<VarId> out;
  for (const auto& [v, p] : s) out.push_back(v);
  sort_vars(out);
  return out;
}

json poly_terms(const Poly& p) {
  json terms = json::array();
  for (const auto& [factors, c] : p.display_terms()) {
    json exps = json::object();
    for (const auto& [v, e] : factors) exps[v.to_string()] = e;
    terms.push_back({{"coefficient", c.to_string()}, {"exponents", std::move(exps)}});
  }
  return terms;
}

json report_json(const CheckReport& r) {
  return {{"name", r.name}, {"checked", r.checked}, {"ok", r.ok()}, {"failures", r.failures}};
}

std::string report_text(const CheckReport& r, const std::string& indent) {
  std::string out = indent + r.name + ": " + (r.ok() ? "PASS" : "FAIL") + " (" + std::to_string(r.checked) +
                    " checked)\n";
  for (const auto& f : r.failures) out += indent + "  - " + f + "\n";
  return out;
}

std::string factor_latex(const std::vector<Poly>& fs) {
  if (fs.empty()) return "1";
  std::string out;
  for (const auto& f : fs) {
    const bool wrap = f.terms().size() > 1 && fs.size() > 1;
    if (!out.empty() && !wrap) out += " ";
    out += wrap ? "(" + f.to_latex() + ")" : f.to_latex();
  }
  return out;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

json tree_json(const TreeDocument& doc) {
  const RootedTree& t = doc.tree;
  json nodes = json::array();
  for (const auto& e : t.nodes()) {
    json n = {{"id", e}, {"level", t.level(e)}};
    const auto par = t.parent(e);
    n["parent"] = par ? json(*par) : json(nullptr);
    if (par) n[doc.kind == TreeKind::kLabelled ? "label" : "weight"] = doc.decoration.at(e).to_string();
    nodes.push_back(std::move(n));
  }
  return {{"kind", kind_name(doc.kind)}, {"name", doc.name}, {"root", t.root()}, {"nodes", std::move(nodes)}};
}

std::string tree_dot(const TreeDocument& doc) {
  const RootedTree& t = doc.tree;
  std::ostringstream os;
  os << "digraph " << quote_dot(doc.name) << " {\n";
  os << "  node [shape=circle];\n";
  for (const auto& e : t.nodes()) {
    std::string label = e;
    if (doc.kind == TreeKind::kLabelled && e != t.root()) label += "\\n" + doc.decoration.at(e).to_string();
    os << "  " << quote_dot(e) << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : t.nodes()) {
    const auto par = t.parent(e);
    if (!par) continue;
    os << "  " << quote_dot(*par) << " -> " << quote_dot(e);
    if (doc.kind == TreeKind::kWeighted) os << " [label=\"" << doc.decoration.at(e).to_string() << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string tree_latex(const TreeDocument& doc) {
  const RootedTree& t = doc.tree;
  std::string out = "\\begin{array}{lll}\n";
  out += std::string("\\text{node} & \\text{parent} & \\text{") + kind_name(doc.kind) + "} \\\\\n";
  for (const auto& e : t.nodes()) {
    const auto par = t.parent(e);
    out += "\\text{" + escape_latex(e) + "} & ";
    out += par ? "\\text{" + escape_latex(*par) + "} & " + Poly(doc.decoration.at(e)).to_latex() : "- & -";
    out += " \\\\\n";
  }
  return out + "\\end{array}\n";
}

TreeDocument labelled_doc(const Presentation& p, const std::string& name) { return TreeDocument::of(p.lt, name); }

void no_dot(Format f, const std::string& what) {
  if (f == Format::kDot) throw Error(ErrorCode::kInvalidArgument, "dot output is not available for " + what);
}

std::string aligned(const std::vector<std::string>& rows) {
  if (rows.empty()) return "\\begin{aligned}\n\\end{aligned}\n";
  std::string out = "\\begin{aligned}\n";
  for (std::size_t i = 0; i < rows.size(); ++i) out += rows[i] + (i + 1 < rows.size() ? " \\\\\n" : "\n");
  return out + "\\end{aligned}\n";
}

std::string generators_text(const std::vector<Generator>& gens) {
  std::string out;
  for (const auto& g : gens) out += g.name + ": " + g.poly.to_string() + "\n";
  return out;
}

json generators_json(const std::vector<Generator>& gens) {
  json terms = json::object();
  json polys = json::object();
  json factored = json::object();
  for (const auto& g : gens) {
    terms[g.name] = poly_terms(g.poly);
    polys[g.name] = g.poly.to_string();
    json lhs = json::array();
    json rhs = json::array();
    for (const auto& f : g.lhs) lhs.push_back(f.to_string());
    for (const auto& f : g.rhs) rhs.push_back(f.to_string());
    factored[g.name] = {{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
  }
  return {{"generators", std::move(terms)}, {"polynomials", std::move(polys)}, {"factored", std::move(factored)}};
}

std::vector<std::string> generators_latex(const std::vector<Generator>& gens) {
  std::vector<std::string> rows;
  for (const auto& g : gens) rows.push_back(factor_latex(g.lhs) + " &= " + factor_latex(g.rhs));
  return rows;
}

}  // namespace

std::string emit_tree(const TreeDocument& doc, Format f) {
  switch (f) {
    case Format::kText: return printed(doc);
    case Format::kJson: return json_text(tree_json(doc));
    case Format::kLatex: return tree_latex(doc);
    case Format::kDot: return tree_dot(doc);
  }
  return {};
}

std::string emit_conversion(const TreeDocument& result, const ConversionTrace& trace, Format f) {
  if (f == Format::kLatex || f == Format::kDot) return emit_tree(result, f);
  if (f == Format::kJson) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
      steps.push_back({{"node", s.node},
                       {"leaf", s.leaf},
                       {"lambda", s.lambda.to_string()},
                       {"mu", s.mu.to_string()},
                       {"label", s.label.to_string()},
                       {"weight", s.weight.to_string()}});
    }
    return json_text({{"result", tree_json(result)}, {"trace", std::move(steps)}});
  }
  std::string out = printed(result);
  for (const auto& s : trace.steps) {
    out += "; " + s.node + ": leaf " + s.leaf + ", lambda " + s.lambda.to_string() + ", mu " + s.mu.to_string() +
           ", label " + s.label.to_string() + ", weight " + s.weight.to_string() + "\n";
  }
  return out;
}

std::string emit_presentation(const Presentation& p, const std::string& name, Format f) {
  const auto gens = p.generators();
  switch (f) {
    case Format::kText: {
      std::string out = "presentation " + name + "\nvariables:";
      for (std::size_t i = 0; i < p.variables.size(); ++i) out += (i ? ", " : " ") + p.variables[i].to_string();
      return out + "\n" + generators_text(gens);
    }
    case Format::kJson: {
      json vars = json::array();
      for (const auto& v : p.variables) vars.push_back(v.to_string());
      json j = {{"name", name}, {"variables", std::move(vars)}};
      j.update(generators_json(gens));
      return json_text(j);
    }
    case Format::kLatex: return aligned(generators_latex(gens));
    case Format::kDot: return tree_dot(labelled_doc(p, name));
  }
  return {};
}

std::string emit_charts(const TreeDocument& doc, const std::vector<ChartExpansion>& charts, Format f) {
  switch (f) {
    case Format::kText: {
      std::string out = "charts " + doc.name + "\n";
      for (const auto& c : charts) {
        out += "leaf " + c.leaf + ":\n";
        for (const auto& v : sorted_keys(c.expansion)) {
          out += "  " + v.to_string() + " = " + c.expansion.at(v).to_string() + "\n";
        }
      }
      return out;
    }
    case Format::kJson: {
      json arr = json::array();
      for (const auto& c : charts) {
        json exp = json::object();
        for (const auto& v : sorted_keys(c.expansion)) exp[v.to_string()] = c.expansion.at(v).to_string();
        arr.push_back({{"leaf", c.leaf}, {"expansion", std::move(exp)}});
      }
      return json_text({{"name", doc.name}, {"charts", std::move(arr)}});
    }
    case Format::kLatex: {
      std::vector<std::string> rows;
      for (const auto& c : charts) {
        rows.push_back("&\\text{leaf } " + escape_latex(c.leaf));
        for (const auto& v : sorted_keys(c.expansion)) {
          rows.push_back(v.to_latex() + " &\\mapsto " + c.expansion.at(v).to_latex());
        }
      }
      return aligned(rows);
    }
    case Format::kDot: return tree_dot(doc);
  }
  return {};
}

std::string emit_fiber(const Presentation& p, const std::string& name, const std::vector<FiberComponent>& comps,
                       Format f) {
  switch (f) {
    case Format::kText: {
      std::string out = "fiber " + name + "\n";
      for (const auto& c : comps) {
        out += "component " + c.leaf + ": coordinate " + c.coordinate.to_string() + "\n  relations:";
        for (std::size_t i = 0; i < c.ideal_relations.size(); ++i) {
          out += (i ? ", " : " ") + c.ideal_relations[i].to_string();
        }
        out += "\n";
        for (const auto& v : sorted_keys(c.point_map)) {
          out += "  " + v.to_string() + " = " + c.point_map.at(v).to_string() + "\n";
        }
      }
      return out;
    }
    case Format::kJson: {
      json arr = json::array();
      for (const auto& c : comps) {
        json rel = json::array();
        for (const auto& r : c.ideal_relations) rel.push_back(r.to_string());
        json pm = json::object();
        for (const auto& v : sorted_keys(c.point_map)) pm[v.to_string()] = c.point_map.at(v).to_string();
        arr.push_back({{"leaf", c.leaf},
                       {"coordinate", c.coordinate.to_string()},
                       {"relations", std::move(rel)},
                       {"point_map", std::move(pm)}});
      }
      return json_text({{"name", name}, {"components", std::move(arr)}});
    }
    case Format::kLatex: {
      std::vector<std::string> rows;
      for (const auto& c : comps) {
        std::string rels;
        for (std::size_t i = 0; i < c.ideal_relations.size(); ++i) {
          rels += (i ? ", " : "") + c.ideal_relations[i].to_latex();
        }
        rows.push_back("C_{" + escape_latex(c.leaf) + "} &: " + rels);
      }
      return aligned(rows);
    }
    case Format::kDot: return tree_dot(labelled_doc(p, name));
  }
  return {};
}

std::string emit_derivation(const Presentation& p, const std::string& name, const Derivation& d,
                            const std::vector<CheckReport>& checks, Format f) {
  switch (f) {
    case Format::kText: {
      std::string out = "derivation " + name + " m=" + std::to_string(d.m) + " g=" + d.g.to_string() + "\n";
      for (const auto& v : p.variables) out += "D(" + v.to_string() + ") = " + d.image(v).to_string() + "\n";
      out += "checks:\n";
      for (const auto& r : checks) out += report_text(r, "  ");
      return out;
    }
    case Format::kJson: {
      json images = json::object();
      for (const auto& v : p.variables) images[v.to_string()] = d.image(v).to_string();
      json rs = json::array();
      for (const auto& r : checks) rs.push_back(report_json(r));
      return json_text({{"name", name},
                        {"m", d.m},
                        {"g", d.g.to_string()},
                        {"images", std::move(images)},
                        {"checks", std::move(rs)}});
    }
    case Format::kLatex: {
      std::vector<std::string> rows;
      for (const auto& v : p.variables) rows.push_back("\\partial(" + v.to_latex() + ") &= " + d.image(v).to_latex());
      return aligned(rows);
    }
    case Format::kDot: return tree_dot(labelled_doc(p, name));
  }
  return {};
}

MlReport ml_report(const TreeDocument& doc) {
  MlReport r;
  r.doc = doc;
  const LabelledTree lt = doc.labelled();
  r.trivial = ml_trivial(lt);
  if (lt.tree.is_comb() && lt.tree.height() > 0) {
    r.normal_form = comb_normal_form(lt);
    r.equations = comb_equations(*r.normal_form);
  }
  r.ordinary = ordinary_danielewski_form(lt);
  return r;
}

std::string emit_ml(const MlReport& r, Format f) {
  switch (f) {
    case Format::kText: {
      std::string out = "ml " + r.doc.name + ": " + (r.trivial ? "trivial" : "nontrivial") + "\n";
      if (r.normal_form) {
        out += "normal form n=" + std::to_string(r.normal_form->n) + "\n";
        for (std::size_t i = 0; i < r.normal_form->polys.size(); ++i) {
          const auto& cp = r.normal_form->polys[i];
          out += "  P_" + std::to_string(i + 1) + " = " + cp.p.to_string() + ", root " + cp.root.to_string() +
                 ", cofactor " + cp.cofactor.to_string() + "\n";
        }
        out += "equations:\n" + generators_text(r.equations);
      }
      if (r.ordinary) {
        out += "ordinary form: n=" + std::to_string(r.ordinary->n) + ", " +
               danielewski_surface(r.ordinary->p).to_string() + "\n";
      } else {
        out += "ordinary form: NotApplicable\n";
      }
      return out;
    }
    case Format::kJson: {
      json j = {{"name", r.doc.name}, {"ml_trivial", r.trivial}};
      if (r.normal_form) {
        json polys = json::array();
        for (const auto& cp : r.normal_form->polys) {
          polys.push_back(
              {{"P", cp.p.to_string()}, {"root", cp.root.to_string()}, {"cofactor", cp.cofactor.to_string()}});
        }
        j["normal_form"] = {{"n", r.normal_form->n}, {"polys", std::move(polys)}};
        j.update(generators_json(r.equations));
      } else {
        j["normal_form"] = nullptr;
      }
      if (r.ordinary) {
        j["ordinary_form"] = {{"n", r.ordinary->n},
                              {"P", r.ordinary->p.to_string()},
                              {"surface", danielewski_surface(r.ordinary->p).to_string()}};
      } else {
        j["ordinary_form"] = "NotApplicable";
      }
      return json_text(j);
    }
    case Format::kLatex: {
      std::vector<std::string> rows = generators_latex(r.equations);
      if (r.ordinary) rows.push_back(danielewski_surface(r.ordinary->p).to_latex() + " &= 0");
      return aligned(rows);
    }
    case Format::kDot: return tree_dot(r.doc);
  }
  return {};
}

std::string emit_qhp(const QHPData& d, Format f) {
  no_dot(f, "qhp data");
  const std::string exps = "(" + std::to_string(d.action_exponents[0]) + ", " +
                           std::to_string(d.action_exponents[1]) + ", " + std::to_string(d.action_exponents[2]) +
                           ")";
  switch (f) {
    case Format::kText:
      return "qhp m=" + std::to_string(d.m) + " n=" + std::to_string(d.n) + " q=" + std::to_string(d.q) +
             "\nsurface: " + d.surface.to_string() + "\naction exponents: " + exps +
             " mod " + std::to_string(d.m) + "\nn divides m: PASS\ngcd(q, m/n) = 1: PASS\ninvariance q*n = " +
             std::to_string(d.invariance_residue) + " mod " + std::to_string(d.m) + ": " +
             (d.invariant ? "PASS" : "FLAGGED") + "\n";
    case Format::kJson:
      return json_text({{"m", d.m},
                        {"n", d.n},
                        {"q", d.q},
                        {"surface", d.surface.to_string()},
                        {"action_exponents", d.action_exponents},
                        {"n_divides_m", true},
                        {"gcd_condition", true},
                        {"invariance_residue", d.invariance_residue},
                        {"invariant", d.invariant}});
    case Format::kLatex:
      return aligned({d.surface.to_latex() + " &= 0",
                      "(x, t, z) &\\mapsto (\\varepsilon^{" + std::to_string(d.action_exponents[0]) + "} x, " +
                          "\\varepsilon^{" + std::to_string(d.action_exponents[1]) + "} t, \\varepsilon^{" +
                          std::to_string(d.action_exponents[2]) + "} z)"});
    case Format::kDot: break;
  }
  return {};
}

std::string emit_verify(const VerifyReport& r, Format f) {
  no_dot(f, "verification reports");
  if (f == Format::kJson) {
    json docs = json::array();
    for (const auto& d : r.documents) {
      json cs = json::array();
      for (const auto& c : d.checks) cs.push_back(report_json(c));
      json dj = {{"name", d.name}, {"source", d.source}, {"ok", d.ok()}, {"checks", std::move(cs)}};
      if (!d.error.empty()) dj["error"] = d.error;
      docs.push_back(std::move(dj));
    }
    return json_text({{"title", r.title},
                      {"documents", std::move(docs)},
                      {"failed", r.failures()},
                      {"ok", r.ok()}});
  }
  if (f == Format::kLatex) {
    std::string out = "\\begin{tabular}{ll}\n";
    for (const auto& d : r.documents) {
      out += "\\texttt{" + escape_latex(d.name) + "} & " + (d.ok() ? "pass" : "fail") + " \\\\\n";
    }
    return out + "\\end{tabular}\n";
  }
  std::string out = "verify " + r.title + "\n";
  for (const auto& d : r.documents) {
    out += "document " + d.name + ": " + (d.ok() ? "PASS" : "FAIL") + "\n  " + d.source + "\n";
    for (const auto& c : d.checks) out += report_text(c, "  ");
    if (!d.error.empty()) out += "  error: " + d.error + "\n";
  }
  out += "summary: " + std::to_string(r.documents.size()) + " documents, " + std::to_string(r.failures()) +
         " failed\n";
  return out;
}

}  // namespace gds
