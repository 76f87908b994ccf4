#pragma once

#include <cstddef>

namespace canon {

/// Finitization of the infinite proof space: term universe by node count,
/// proof trees by depth, plus a global node budget (CANON_MAX_NODES).
struct Bounds {
  int max_term_size = 7;
  int max_proof_depth = 5;
  size_t max_nodes = 0;  // 0 means use the default budget

  size_t node_budget() const;
};

size_t default_node_budget();

}  // namespace canon
