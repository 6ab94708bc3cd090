#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ggasp {

using NodeSet = std::vector<int>;  // sorted, duplicate free

class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

private:
    std::vector<std::vector<int>> adj_;
};

std::vector<NodeSet> connected_components(const Graph& g);

// Empty set counts as connected.
bool is_connected_subset(const Graph& g, const NodeSet& s);

// Component of the subgraph induced by `candidates` that contains all of
// `required`. With `required` empty, the largest component (lowest member
// breaks ties). Absent when `required` spans several components.
std::optional<NodeSet> largest_connected_superset(const Graph& g, const NodeSet& candidates,
                                                  const NodeSet& required);

// Shrinks a connected set to `target` members by dropping farthest leaves of a
// breadth-first tree grown from `keep`; `keep` must be connected and inside `s`.
NodeSet trim_connected(const Graph& g, const NodeSet& s, const NodeSet& keep, int target);

// Nonempty connected subsets in lexicographic order of their sorted member
// lists. Exceeding `count_cap` throws BudgetExceeded.
class ConnectedSubsets {
public:
    ConnectedSubsets(const Graph& g, std::optional<int> size_cap = std::nullopt,
                     std::optional<std::int64_t> count_cap = std::nullopt);
    std::optional<NodeSet> next();

private:
    void fill_anchor(int v);
    void expand(int v, NodeSet& cur, std::vector<char>& in, std::vector<char>& banned);

    const Graph* g_;
    int size_cap_;
    std::optional<std::int64_t> count_cap_;
    std::int64_t yielded_ = 0;
    int anchor_ = 0;
    std::vector<NodeSet> batch_;
    std::size_t pos_ = 0;
};

std::vector<NodeSet> enumerate_connected_subsets(const Graph& g, std::optional<int> size_cap = std::nullopt,
                                                 std::optional<std::int64_t> count_cap = std::nullopt);

struct RootedTree {
    int root = -1;
    std::vector<int> parent;                 // -1 for the root and for nodes outside the tree
    std::vector<std::vector<int>> children;  // ascending index
    std::vector<int> height;
    std::vector<int> preorder;               // nodes of this tree
    std::vector<int> pre_index;              // position in preorder, -1 outside
    std::vector<int> subtree_size;

    bool contains(int v) const { return pre_index[v] >= 0; }
    NodeSet desc(int i) const;
    NodeSet desc_prefix(int i, int c) const;  // descendants of the first c children
    std::vector<int> by_height() const;       // ascending height, then index
};

// One tree per component, rooted at its minimum index. Throws
// PreconditionError on a cycle.
std::vector<RootedTree> root_forest(const Graph& g);

struct GraphClass {
    bool clique = false;
    bool path = false;
    bool star = false;
    bool forest = false;
    bool general = false;
    int max_component = 0;
};

GraphClass classify(const Graph& g);

}  // namespace ggasp
