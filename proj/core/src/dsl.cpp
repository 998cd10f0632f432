#include "gds/dsl.hpp"

#include <cctype>
#include <set>

#include "gds/error.hpp"

namespace gds {

LabelledTree TreeDocument::labelled() const {
  if (kind != TreeKind::kLabelled) throw Error(ErrorCode::kInvalidArgument, "document is weighted");
  return LabelledTree{tree, decoration};
}

WeightedTree TreeDocument::weighted() const {
  if (kind != TreeKind::kWeighted) throw Error(ErrorCode::kInvalidArgument, "document is labelled");
  return WeightedTree{tree, decoration};
}

TreeDocument TreeDocument::of(const LabelledTree& lt, std::string name) {
  return TreeDocument{TreeKind::kLabelled, std::move(name), lt.tree, lt.labels};
}

TreeDocument TreeDocument::of(const WeightedTree& wt, std::string name) {
  return TreeDocument{TreeKind::kWeighted, std::move(name), wt.tree, wt.weights};
}

std::string_view to_string(TreeKind kind) {
  return kind == TreeKind::kLabelled ? "labelled" : "weighted";
}

namespace {

bool is_id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class TreeReader {
 public:
  explicit TreeReader(std::string_view text) : text_(text) {}

  TreeDocument read() {
    TreeDocument doc;
    skip();
    if (peek() == '(') {
      // Bare s-expression: the first decoration mark decides the kind.
      const auto mark = text_.find_first_of(":@", pos_);
      doc.kind = mark != std::string_view::npos && text_[mark] == '@' ? TreeKind::kWeighted
                                                                        : TreeKind::kLabelled;
      doc.name = "tree";
      return body(doc);
    }
    const auto [kl, kc] = here();
    const std::string kind = identifier("document kind");
    if (kind == "labelled") {
      doc.kind = TreeKind::kLabelled;
    } else if (kind == "weighted") {
      doc.kind = TreeKind::kWeighted;
    } else {
      throw ParseError(ErrorCode::kParseError, kl, kc,
                       "expected 'labelled' or 'weighted', found '" + kind + "'");
    }
    skip();
    doc.name = identifier("document name");
    return body(doc);
  }

 private:
  TreeDocument body(TreeDocument& doc) {
    kind_ = doc.kind;
    skip();
    expect('(');
    const NodeId root = node_id();
    doc.tree = RootedTree(root);
    skip();
    if (peek() == ':' || peek() == '@') fail("the root carries no label or weight");
    children(doc, root);
    skip();
    if (pos_ < text_.size()) fail("trailing input after the tree");
    return doc;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const auto [l, c] = here();
    throw ParseError(ErrorCode::kParseError, l, c, what);
  }

  std::pair<std::size_t, std::size_t> here() const { return position(pos_); }

  std::pair<std::size_t, std::size_t> position(std::size_t at) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (pos_ < text_.size() ? std::string(", found '") + peek() + "'" : ", found end of input"));
    }
    ++pos_;
  }

  std::string identifier(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_id_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  NodeId node_id() {
    skip();
    const std::size_t start = pos_;
    NodeId id = identifier("node id");
    if (id == "0") {
      const auto [l, c] = position(start);
      throw ParseError(ErrorCode::kValidationError, l, c, "node id '0' is reserved");
    }
    return id;
  }

  Rat rational() {
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (peek() == '.' || peek() == 'e' || peek() == 'E') {
      fail("decimal notation is not allowed; write p/q");
    }
    const std::string_view lit = text_.substr(start, pos_ - start);
    try {
      return Rat::parse(lit);
    } catch (const Error&) {
      const auto [l, c] = position(start);
      throw ParseError(ErrorCode::kParseError, l, c, "bad rational '" + std::string(lit) + "'");
    }
  }

  // Reads children up to and including the closing parenthesis of `parent`.
  void children(TreeDocument& doc, const NodeId& parent) {
    std::map<Rat, NodeId> sibling_values;
    while (true) {
      skip();
      if (peek() == ')') {
        ++pos_;
        return;
      }
      if (peek() != '(') fail(peek() ? std::string("unexpected '") + peek() + "'" : "unexpected end of input");
      ++pos_;
      const std::size_t id_at = (skip(), pos_);
      const NodeId id = node_id();
      const char mark = kind_ == TreeKind::kLabelled ? ':' : '@';
      skip();
      if (peek() != mark) {
        fail(std::string("expected '") + mark + "' and a " +
             (kind_ == TreeKind::kLabelled ? "label" : "weight") + " after '" + id + "'");
      }
      ++pos_;
      skip();
      const std::size_t value_at = pos_;
      const Rat value = rational();
      if (doc.tree.contains(id)) {
        const auto [l, c] = position(id_at);
        throw ParseError(ErrorCode::kValidationError, l, c, "duplicate node id '" + id + "'");
      }
      if (auto [it, fresh] = sibling_values.emplace(value, id); !fresh) {
        const auto [l, c] = position(value_at);
        throw ParseError(ErrorCode::kValidationError, l, c,
                         "siblings '" + it->second + "' and '" + id + "' share the " +
                             (kind_ == TreeKind::kLabelled ? "label " : "weight ") +
                             value.to_string());
      }
      doc.tree.add_child(parent, id);
      doc.decoration.emplace(id, value);
      children(doc, id);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  TreeKind kind_ = TreeKind::kLabelled;
};

void print_node(const TreeDocument& doc, const NodeId& e, std::string& out) {
  out += "(" + e;
  if (e != doc.tree.root()) {
    out += doc.kind == TreeKind::kLabelled ? ":" : "@";
    out += doc.decoration.at(e).to_string();
  }
  for (const auto& c : doc.tree.children(e)) {
    out += " ";
    print_node(doc, c, out);
  }
  out += ")";
}

}  // namespace

TreeDocument parse_tree(std::string_view text) { return TreeReader(text).read(); }

std::string print_tree(const TreeDocument& doc) {
  std::string out = std::string(to_string(doc.kind)) + " " + doc.name + "\n";
  print_node(doc, doc.tree.root(), out);
  out += "\n";
  return out;
}

}  // namespace gds
