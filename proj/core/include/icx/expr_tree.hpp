#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace icx {

/// Expression over {1, +, *} as an n-ary tree.
///
/// Nodes are immutable and shared, so copies are cheap. A tree is canonical
/// when no Sum has a Sum child, no Prod has a Prod child, and children are
/// sorted ascending under operator<=> (value first, then ones). Trees built
/// with sum()/product() are canonical; raw_sum()/raw_product() keep the
/// children exactly as given.
class ExprTree {
 public:
  enum class Kind : std::uint8_t { one, sum, prod };

  static ExprTree one();
  static ExprTree sum(std::vector<ExprTree> children);
  static ExprTree product(std::vector<ExprTree> children);
  static ExprTree raw_sum(std::vector<ExprTree> children);
  static ExprTree raw_product(std::vector<ExprTree> children);

  Kind kind() const noexcept { return node_->kind; }
  std::uint64_t value() const noexcept { return node_->value; }
  unsigned ones() const noexcept { return node_->ones; }
  unsigned height() const noexcept { return node_->height; }
  std::span<const ExprTree> children() const noexcept { return node_->children; }

  bool is_canonical() const;
  ExprTree canonical() const;

  /// Total order refining (value, ones): then height, kind, children lexicographically.
  friend std::strong_ordering operator<=>(const ExprTree& a, const ExprTree& b);
  friend bool operator==(const ExprTree& a, const ExprTree& b) { return (a <=> b) == 0; }

 private:
  struct Node {
    Kind kind;
    std::uint64_t value;
    unsigned ones;
    unsigned height;
    std::vector<ExprTree> children;
  };

  explicit ExprTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ExprTree make(Kind kind, std::vector<ExprTree> children, bool canonicalize);

  std::shared_ptr<const Node> node_;
};

/// Infix rendering, e.g. "(1+1)*(1+1+1)".
std::string to_infix(const ExprTree& tree);

/// Postfix rendering over the symbols {1, +, *}: children left to right, one
/// operator after each child past the first. (1+1)*(1+1+1) -> "11+11+1+*".
std::string postfix_emit(const ExprTree& tree);

/// Parses a postfix program over {1, +, *} (whitespace ignored) and returns the
/// canonical tree. Throws ParseError on stack underflow, leftover operands,
/// unknown symbols, or multiplication by a literal 1.
ExprTree postfix_parse(std::string_view text);

}  // namespace icx
