#pragma once

#include <any>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace quadarm::bt {

enum class TickStatus { Success, Failure, Running };

const char* to_string(TickStatus status);

/// Keyed store through which leaves exchange state. Reads after a tick
/// observe that tick's writes; the tree is single-threaded.
class Blackboard {
 public:
  template <typename T>
  void set(const std::string& key, T value) {
    entries_[key] = std::move(value);
  }

  template <typename T>
  T get(const std::string& key, T fallback = T{}) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    return std::any_cast<T>(it->second);
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

 private:
  std::unordered_map<std::string, std::any> entries_;
};

enum class NodeKind { Sequence, Fallback, Condition, Action };

/// Reactive behavior-tree node. Composites re-evaluate their children from
/// the first one on every tick (no memory), so a flipped condition retargets
/// the active branch within a single tick.
struct BtNode {
  NodeKind kind = NodeKind::Action;
  std::string name;
  std::vector<std::shared_ptr<BtNode>> children;          // composites only
  std::function<TickStatus(Blackboard&)> leaf;            // leaves only
};

using BtNodePtr = std::shared_ptr<BtNode>;

/// Construction-time validation: composites need children, leaves need a
/// tick function and no children. Throws std::invalid_argument.
BtNodePtr sequence(const std::string& name, std::vector<BtNodePtr> children);
BtNodePtr fallback(const std::string& name, std::vector<BtNodePtr> children);
BtNodePtr condition(const std::string& name, std::function<bool(Blackboard&)> predicate);
BtNodePtr action(const std::string& name, std::function<TickStatus(Blackboard&)> fn);

/// One reactive tick from the root.
TickStatus tick(const BtNode& root, Blackboard& blackboard);

/// Indented structure dump for debugging.
std::string format_tree(const BtNode& root);

}  // namespace quadarm::bt
