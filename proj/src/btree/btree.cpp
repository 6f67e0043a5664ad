#include "quadarm/btree/btree.hpp"

#include <sstream>
#include <stdexcept>

namespace quadarm::bt {

const char* to_string(TickStatus status) {
  switch (status) {
    case TickStatus::Success: return "success";
    case TickStatus::Failure: return "failure";
    default: return "running";
  }
}

namespace {

BtNodePtr make_composite(NodeKind kind, const std::string& name,
                         std::vector<BtNodePtr> children) {
  if (children.empty()) {
    throw std::invalid_argument("composite node '" + name + "' needs at least one child");
  }
  for (const auto& child : children) {
    if (!child) throw std::invalid_argument("composite node '" + name + "' has a null child");
  }
  auto node = std::make_shared<BtNode>();
  node->kind = kind;
  node->name = name;
  node->children = std::move(children);
  return node;
}

}  // namespace

BtNodePtr sequence(const std::string& name, std::vector<BtNodePtr> children) {
  return make_composite(NodeKind::Sequence, name, std::move(children));
}

BtNodePtr fallback(const std::string& name, std::vector<BtNodePtr> children) {
  return make_composite(NodeKind::Fallback, name, std::move(children));
}

BtNodePtr condition(const std::string& name, std::function<bool(Blackboard&)> predicate) {
  if (!predicate) throw std::invalid_argument("condition '" + name + "' needs a predicate");
  auto node = std::make_shared<BtNode>();
  node->kind = NodeKind::Condition;
  node->name = name;
  node->leaf = [p = std::move(predicate)](Blackboard& bb) {
    return p(bb) ? TickStatus::Success : TickStatus::Failure;
  };
  return node;
}

BtNodePtr action(const std::string& name, std::function<TickStatus(Blackboard&)> fn) {
  if (!fn) throw std::invalid_argument("action '" + name + "' needs a tick function");
  auto node = std::make_shared<BtNode>();
  node->kind = NodeKind::Action;
  node->name = name;
  node->leaf = std::move(fn);
  return node;
}

TickStatus tick(const BtNode& root, Blackboard& blackboard) {
  switch (root.kind) {
    case NodeKind::Condition:
    case NodeKind::Action:
      return root.leaf(blackboard);
    case NodeKind::Sequence:
      for (const auto& child : root.children) {
        const TickStatus status = tick(*child, blackboard);
        if (status != TickStatus::Success) return status;
      }
      return TickStatus::Success;
    case NodeKind::Fallback:
      for (const auto& child : root.children) {
        const TickStatus status = tick(*child, blackboard);
        if (status != TickStatus::Failure) return status;
      }
      return TickStatus::Failure;
  }
  return TickStatus::Failure;
}

namespace {

void format_node(const BtNode& node, int depth, std::ostringstream& out) {
  const char* kind = node.kind == NodeKind::Sequence   ? "sequence"
                     : node.kind == NodeKind::Fallback ? "fallback"
                     : node.kind == NodeKind::Condition ? "condition"
                                                        : "action";
  out << std::string(2 * depth, ' ') << kind << " " << node.name << "\n";
  for (const auto& child : node.children) format_node(*child, depth + 1, out);
}

}  // namespace

std::string format_tree(const BtNode& root) {
  std::ostringstream out;
  format_node(root, 0, out);
  return out.str();
}

}  // namespace quadarm::bt
