#include "morsetree/merge_tree.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <stdexcept>

#include "morsetree/error.hpp"

namespace morsetree {

MergeTree::MergeTree() : nodes_(1) {}

std::pair<NodeId, NodeId> MergeTree::split(NodeId leaf, Chirality first) {
  if (leaf >= nodes_.size() || !is_leaf(leaf)) throw std::invalid_argument("split needs a leaf");
  NodeId l = nodes_.size(), r = nodes_.size() + 1;
  if (first == Chirality::right) std::swap(l, r);
  nodes_.resize(nodes_.size() + 2);
  nodes_[l] = Node{leaf, no_node, no_node, Chirality::left};
  nodes_[r] = Node{leaf, no_node, no_node, Chirality::right};
  nodes_[leaf].left = l;
  nodes_[leaf].right = r;
  return {l, r};
}

void MergeTree::swap_children(NodeId inner) {
  Node& p = nodes_[inner];
  if (p.left == no_node) return;
  std::swap(p.left, p.right);
  nodes_[p.left].chirality = Chirality::left;
  nodes_[p.right].chirality = Chirality::right;
}

std::size_t MergeTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.left == no_node; }));
}

std::size_t MergeTree::inner_count() const { return size() - leaf_count(); }

std::size_t MergeTree::depth(NodeId n) const {
  std::size_t d = 0;
  while (nodes_[n].parent != no_node) {
    n = nodes_[n].parent;
    ++d;
  }
  return d;
}

std::size_t MergeTree::height() const {
  std::size_t h = 0;
  for (NodeId n = 0; n < size(); ++n) h = std::max(h, depth(n));
  return h;
}

std::vector<NodeId> MergeTree::preorder(NodeId from) const {
  std::vector<NodeId> out, stack{from};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    out.push_back(n);
    if (is_inner(n)) {
      stack.push_back(right(n));
      stack.push_back(left(n));
    }
  }
  return out;
}

std::vector<NodeId> MergeTree::preorder() const { return preorder(root()); }

std::vector<NodeId> MergeTree::inorder() const {
  std::vector<NodeId> out, stack;
  NodeId n = root();
  while (n != no_node || !stack.empty()) {
    while (n != no_node) {
      stack.push_back(n);
      n = left(n);
    }
    n = stack.back();
    stack.pop_back();
    out.push_back(n);
    n = right(n);
  }
  return out;
}

std::optional<std::string> MergeTree::check() const {
  if (nodes_.empty()) return "empty tree";
  if (nodes_[0].parent != no_node) return "root has a parent";
  for (NodeId n = 0; n < size(); ++n) {
    const Node& x = nodes_[n];
    if ((x.left == no_node) != (x.right == no_node)) return "node " + std::to_string(n) + " has one child";
    if (x.left == no_node) continue;
    if (x.left >= size() || x.right >= size()) return "child id out of range";
    if (nodes_[x.left].parent != n || nodes_[x.right].parent != n) return "broken parent link";
    if (nodes_[x.left].chirality != Chirality::left || nodes_[x.right].chirality != Chirality::right)
      return "child chirality does not match its slot at node " + std::to_string(n);
  }
  if (preorder().size() != size()) return "unreachable nodes";
  return std::nullopt;
}

std::vector<Chirality> chirality_path(const MergeTree& t, NodeId n) {
  std::vector<Chirality> out;
  for (NodeId x = n; x != no_node; x = t.parent(x)) out.push_back(t.chirality(x));
  std::reverse(out.begin(), out.end());
  return out;
}

std::string path_word(const MergeTree& t, NodeId n) {
  std::string w;
  for (Chirality c : chirality_path(t, n)) w += letter(c);
  w.resize(t.height() + 1, '_');
  return w;
}

std::optional<NodeId> node_at(const MergeTree& t, std::string_view word) {
  while (!word.empty() && word.back() == '_') word.remove_suffix(1);
  if (word.empty() || word.front() != letter(t.chirality(t.root()))) return std::nullopt;
  NodeId n = t.root();
  for (char c : word.substr(1)) {
    if (t.is_leaf(n)) return std::nullopt;
    if (c == 'L') n = t.left(n);
    else if (c == 'R') n = t.right(n);
    else return std::nullopt;
  }
  return n;
}

NodeId youngest_common_ancestor(const MergeTree& t, NodeId a, NodeId b) {
  std::size_t da = t.depth(a), db = t.depth(b);
  while (da > db) { a = t.parent(a); --da; }
  while (db > da) { b = t.parent(b); --db; }
  while (a != b) {
    a = t.parent(a);
    b = t.parent(b);
  }
  return a;
}

bool is_ancestor_or_self(const MergeTree& t, NodeId ancestor, NodeId n) {
  for (NodeId x = n; x != no_node; x = t.parent(x))
    if (x == ancestor) return true;
  return false;
}

MergeTree subtree(const MergeTree& t, NodeId n, std::vector<NodeId>* mapping) {
  MergeTree out;
  out.set_root_chirality(t.chirality(n));
  std::vector<NodeId> original{n};
  std::vector<std::pair<NodeId, NodeId>> todo{{n, out.root()}};
  while (!todo.empty()) {
    auto [from, to] = todo.back();
    todo.pop_back();
    if (t.is_leaf(from)) continue;
    auto [l, r] = out.split(to);
    original.resize(out.size());
    original[l] = t.left(from);
    original[r] = t.right(from);
    todo.emplace_back(t.right(from), r);
    todo.emplace_back(t.left(from), l);
  }
  if (mapping) *mapping = std::move(original);
  return out;
}

std::vector<NodeId> descendants(const MergeTree& t, NodeId n) {
  auto all = t.preorder(n);
  all.erase(all.begin());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<NodeId> ancestors(const MergeTree& t, NodeId n) {
  std::vector<NodeId> out;
  for (NodeId x = t.parent(n); x != no_node; x = t.parent(x)) out.push_back(x);
  return out;
}

std::optional<std::vector<NodeId>> tree_isomorphism(const MergeTree& a, const MergeTree& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<NodeId> map(a.size(), no_node);
  std::vector<std::pair<NodeId, NodeId>> todo{{a.root(), b.root()}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    if (a.is_leaf(x) != b.is_leaf(y)) return std::nullopt;
    map[x] = y;
    if (a.is_inner(x)) {
      todo.emplace_back(a.left(x), b.left(y));
      todo.emplace_back(a.right(x), b.right(y));
    }
  }
  return map;
}

bool isomorphic(const MergeTree& a, const MergeTree& b) { return to_text(a) == to_text(b); }

namespace {

void write(const MergeTree& t, NodeId n, const std::vector<Rational>* labels, std::string& out) {
  if (t.is_leaf(n)) {
    out += labels ? to_string((*labels)[n]) : std::string("*");
    return;
  }
  out += '(';
  write(t, t.left(n), labels, out);
  out += ',';
  write(t, t.right(n), labels, out);
  out += ')';
  if (labels) out += ":" + to_string((*labels)[n]);
}

struct RawNode {
  std::unique_ptr<RawNode> left, right;
  std::optional<Rational> label;
};

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ParsedTree parse() {
    skip();
    auto root = node();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' after the tree");
    if (labeled_ && unlabeled_) fail_at(mixed_line_, mixed_column_, "mixes labeled and unlabeled nodes");
    ParsedTree out;
    std::vector<Rational> labels(1);
    std::vector<std::pair<const RawNode*, NodeId>> todo{{root.get(), out.tree.root()}};
    while (!todo.empty()) {
      auto [raw, id] = todo.back();
      todo.pop_back();
      if (labeled_) labels[id] = *raw->label;
      if (!raw->left) continue;
      auto [l, r] = out.tree.split(id);
      labels.resize(out.tree.size());
      todo.emplace_back(raw->right.get(), r);
      todo.emplace_back(raw->left.get(), l);
    }
    if (labeled_) out.labels = std::move(labels);
    return out;
  }

 private:
  std::unique_ptr<RawNode> node() {
    auto n = std::make_unique<RawNode>();
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected a node");
    char c = text_[pos_];
    if (c == '*') {
      note(false);
      ++pos_;
    } else if (c == '(') {
      ++pos_;
      n->left = node();
      expect(',');
      n->right = node();
      expect(')');
      skip();
      if (pos_ < text_.size() && text_[pos_] == ':') {
        ++pos_;
        skip();
        note(true);
        n->label = number();
      } else {
        note(false);
      }
    } else if (starts_number(c)) {
      note(true);
      n->label = number();
    } else {
      fail("unexpected '" + std::string(1, c) + "', expected '*', '(' or a number");
    }
    return n;
  }

  static bool starts_number(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
            text_[pos_] == '.' || ((text_[pos_] == '-' || text_[pos_] == '+') && pos_ == start)))
      ++pos_;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("malformed label");
    }
  }

  void note(bool labeled) {
    (labeled ? labeled_ : unlabeled_) = true;
    if (labeled_ && unlabeled_ && mixed_line_ == 0) {
      auto [l, c] = location(pos_);
      mixed_line_ = l;
      mixed_column_ = c;
    }
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size()) fail(std::string("unexpected end of input, expected '") + c + "'");
    if (text_[pos_] != c)
      fail(std::string("expected '") + c + "', got '" + std::string(1, text_[pos_]) + "'");
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::pair<std::size_t, std::size_t> location(std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  [[noreturn]] void fail(const std::string& message) const {
    auto [l, c] = location(pos_);
    fail_at(l, c, message);
  }
  [[noreturn]] static void fail_at(std::size_t line, std::size_t column, const std::string& message) {
    throw InputError(message, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool labeled_ = false, unlabeled_ = false;
  std::size_t mixed_line_ = 0, mixed_column_ = 0;
};

}  // namespace

std::string to_text(const MergeTree& t) {
  std::string out;
  write(t, t.root(), nullptr, out);
  return out;
}

std::string to_text(const MergeTree& t, const std::vector<Rational>& labels) {
  if (labels.size() != t.size()) throw std::invalid_argument("one label per node expected");
  std::string out;
  write(t, t.root(), &labels, out);
  return out;
}

ParsedTree parse_merge_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string to_dot(const MergeTree& t, const std::vector<Rational>* labels, std::string_view name) {
  auto order = t.preorder();
  std::vector<std::size_t> index(t.size());
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  std::string out = "digraph " + std::string(name) + " {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=circle];\n";
  for (NodeId n : order) {
    std::string label;
    if (labels) {
      label = to_string((*labels)[n]);
    } else {
      label = path_word(t, n);
      label.erase(label.find_last_not_of('_') + 1);
    }
    out += "  n" + std::to_string(index[n]) + " [label=\"" + label + "\"";
    if (t.is_inner(n)) out += ", shape=box";
    out += "];\n";
  }
  for (NodeId n : order) {
    if (t.is_leaf(n)) continue;
    for (NodeId c : {t.left(n), t.right(n)})
      out += "  n" + std::to_string(index[c]) + " -> n" + std::to_string(index[n]) +
             " [label=\"" + std::string(1, letter(t.chirality(c))) + "\", arrowhead=none];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace morsetree
