#include "icx/expr_tree.hpp"

#include <algorithm>
#include <limits>

#include "icx/errors.hpp"

namespace icx {

ExprTree ExprTree::one() {
  static const ExprTree leaf(std::make_shared<const Node>(Node{Kind::one, 1, 1, 0, {}}));
  return leaf;
}

ExprTree ExprTree::sum(std::vector<ExprTree> children) {
  return make(Kind::sum, std::move(children), true);
}

ExprTree ExprTree::product(std::vector<ExprTree> children) {
  return make(Kind::prod, std::move(children), true);
}

ExprTree ExprTree::raw_sum(std::vector<ExprTree> children) {
  return make(Kind::sum, std::move(children), false);
}

ExprTree ExprTree::raw_product(std::vector<ExprTree> children) {
  return make(Kind::prod, std::move(children), false);
}

ExprTree ExprTree::make(Kind kind, std::vector<ExprTree> children, bool canonicalize) {
  if (kind == Kind::one) return one();
  if (canonicalize) {
    std::vector<ExprTree> flat;
    flat.reserve(children.size());
    for (auto& child : children) {
      if (child.kind() == kind) {
        flat.insert(flat.end(), child.children().begin(), child.children().end());
      } else {
        flat.push_back(std::move(child));
      }
    }
    std::sort(flat.begin(), flat.end());
    children = std::move(flat);
  }
  if (children.size() < 2) throw DomainError("sum and product nodes need at least two children");

  Node node{kind, kind == Kind::sum ? 0u : 1u, 0, 0, {}};
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (const auto& child : children) {
    if (kind == Kind::sum) {
      if (node.value > kMax - child.value()) throw DomainError("expression value overflows 64 bits");
      node.value += child.value();
    } else {
      if (child.kind() == Kind::one) throw DomainError("multiplication by 1 is not allowed");
      if (node.value > kMax / child.value()) throw DomainError("expression value overflows 64 bits");
      node.value *= child.value();
    }
    node.ones += child.ones();
    node.height = std::max(node.height, child.height() + 1);
  }
  node.children = std::move(children);
  return ExprTree(std::make_shared<const Node>(std::move(node)));
}

bool ExprTree::is_canonical() const {
  const auto kids = children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (kids[i].kind() == kind()) return false;
    if (i > 0 && kids[i] < kids[i - 1]) return false;
    if (!kids[i].is_canonical()) return false;
  }
  return true;
}

ExprTree ExprTree::canonical() const {
  if (kind() == Kind::one) return *this;
  std::vector<ExprTree> kids;
  kids.reserve(children().size());
  for (const auto& child : children()) kids.push_back(child.canonical());
  return make(kind(), std::move(kids), true);
}

std::strong_ordering operator<=>(const ExprTree& a, const ExprTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.value() <=> b.value(); c != 0) return c;
  if (auto c = a.ones() <=> b.ones(); c != 0) return c;
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  const auto ka = a.children();
  const auto kb = b.children();
  return std::lexicographical_compare_three_way(ka.begin(), ka.end(), kb.begin(), kb.end());
}

namespace {

void append_infix(const ExprTree& t, std::string& out) {
  if (t.kind() == ExprTree::Kind::one) {
    out += '1';
    return;
  }
  const char op = t.kind() == ExprTree::Kind::sum ? '+' : '*';
  bool first = true;
  for (const auto& child : t.children()) {
    if (!first) out += op;
    first = false;
    const bool wrap = t.kind() == ExprTree::Kind::prod && child.kind() == ExprTree::Kind::sum;
    if (wrap) out += '(';
    append_infix(child, out);
    if (wrap) out += ')';
  }
}

void append_postfix(const ExprTree& t, std::string& out) {
  if (t.kind() == ExprTree::Kind::one) {
    out += '1';
    return;
  }
  const char op = t.kind() == ExprTree::Kind::sum ? '+' : '*';
  bool first = true;
  for (const auto& child : t.children()) {
    append_postfix(child, out);
    if (!first) out += op;
    first = false;
  }
}

}  // namespace

std::string to_infix(const ExprTree& tree) {
  std::string out;
  append_infix(tree, out);
  return out;
}

std::string postfix_emit(const ExprTree& tree) {
  std::string out;
  append_postfix(tree, out);
  return out;
}

ExprTree postfix_parse(std::string_view text) {
  std::vector<ExprTree> stack;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '1') {
      stack.push_back(ExprTree::one());
      continue;
    }
    if (ch != '+' && ch != '*') {
      throw ParseError("unexpected symbol '" + std::string(1, ch) + "' at offset " +
                       std::to_string(pos));
    }
    if (stack.size() < 2) {
      throw ParseError("operator '" + std::string(1, ch) + "' at offset " + std::to_string(pos) +
                       " needs two operands");
    }
    ExprTree rhs = std::move(stack.back());
    stack.pop_back();
    ExprTree lhs = std::move(stack.back());
    stack.pop_back();
    if (ch == '*' && (lhs.kind() == ExprTree::Kind::one || rhs.kind() == ExprTree::Kind::one)) {
      throw ParseError("multiplication by 1 at offset " + std::to_string(pos));
    }
    stack.push_back(ch == '+' ? ExprTree::raw_sum({lhs, rhs}) : ExprTree::raw_product({lhs, rhs}));
  }
  if (stack.empty()) throw ParseError("empty postfix program");
  if (stack.size() > 1) {
    throw ParseError(std::to_string(stack.size()) + " operands left on the stack");
  }
  return stack.front().canonical();
}

}  // namespace icx
