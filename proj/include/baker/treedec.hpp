#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baker/graph.hpp"

namespace baker {

/// Rooted tree decomposition. Bags are sorted vertex-id lists.
struct TreeDecomposition {
  struct Node {
    std::vector<int> bag;
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = 0;

  /// max bag size - 1; -1 for the empty decomposition.
  int width() const;
};

/// Checks the three tree-decomposition axioms for g. Returns true iff valid;
/// violations, when requested, get one human-readable line each.
bool validate(const TreeDecomposition& td, const Graph& g,
              std::vector<std::string>* violations = nullptr);

/// Greedy min-fill elimination ordering (ties: min degree, then min id),
/// assembled into a tree decomposition. Upper bound only.
TreeDecomposition heuristic_decompose(const Graph& g);

/// Exact treewidth by elimination-order DP over vertex subsets. Practical up
/// to ~14 vertices (hard cap 24). Returns nullopt when the value exceeds
/// `limit`.
std::optional<int> exact_treewidth_small(const Graph& g, int limit);

enum class NodeKind { Leaf, Introduce, Forget, Join };

/// Nice-form decomposition: leaves have empty bags, introduce/forget change
/// the bag by one vertex, joins have two children with identical bags. The
/// root bag is empty.
struct NiceTreeDecomposition {
  struct Node {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1;  // for Introduce/Forget
    std::vector<int> bag;
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = 0;
  int width() const;
  /// Children-before-parent traversal order.
  std::vector<int> postorder() const;
};

/// Converts to nice form, preserving width exactly. Throws StructureError if
/// the occurrences of some vertex do not form a connected subtree.
NiceTreeDecomposition to_nice(const TreeDecomposition& td);

/// Checks the decomposition axioms for g plus the nice-form shape (leaf bags
/// empty, one-vertex introduce/forget deltas, binary joins, empty root bag).
bool validate_nice_form(const NiceTreeDecomposition& ntd, const Graph& g,
                        std::vector<std::string>* violations = nullptr);

/// Adds every apex vertex to every bag.
TreeDecomposition add_apices(const TreeDecomposition& td, const std::vector<int>& apices);

}  // namespace baker
