#include "ggasp/graphkit.hpp"

#include <algorithm>
#include <deque>

#include "ggasp/errors.hpp"

namespace ggasp {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
    for (auto [u, v] : edges) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
}

bool Graph::adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Components of the subgraph induced by the nodes with mask[v] set.
std::vector<NodeSet> induced_components(const Graph& g, const std::vector<char>& mask) {
    std::vector<NodeSet> out;
    std::vector<char> seen(g.size(), 0);
    for (int s = 0; s < g.size(); ++s) {
        if (!mask[s] || seen[s]) continue;
        NodeSet comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (mask[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<char> mask_of(int n, const NodeSet& s) {
    std::vector<char> m(n, 0);
    for (int v : s) m[v] = 1;
    return m;
}

}  // namespace

std::vector<NodeSet> connected_components(const Graph& g) {
    return induced_components(g, std::vector<char>(g.size(), 1));
}

bool is_connected_subset(const Graph& g, const NodeSet& s) {
    if (s.empty()) return true;
    return induced_components(g, mask_of(g.size(), s)).size() == 1;
}

std::optional<NodeSet> largest_connected_superset(const Graph& g, const NodeSet& candidates,
                                                  const NodeSet& required) {
    auto comps = induced_components(g, mask_of(g.size(), candidates));
    if (required.empty()) {
        if (comps.empty()) return NodeSet{};
        const NodeSet* best = &comps.front();
        for (const auto& c : comps)
            if (c.size() > best->size()) best = &c;
        return *best;
    }
    for (auto& c : comps) {
        if (!std::binary_search(c.begin(), c.end(), required.front())) continue;
        for (int v : required)
            if (!std::binary_search(c.begin(), c.end(), v)) return std::nullopt;
        return std::move(c);
    }
    return std::nullopt;
}

NodeSet trim_connected(const Graph& g, const NodeSet& s, const NodeSet& keep, int target) {
    if (static_cast<int>(s.size()) <= target) return s;
    std::vector<char> in = mask_of(g.size(), s);
    std::vector<char> seen(g.size(), 0);
    std::deque<int> queue;
    std::vector<int> order;
    if (keep.empty()) {
        queue.push_back(s.front());
        seen[s.front()] = 1;
    }
    for (int v : keep) {
        queue.push_back(v);
        seen[v] = 1;
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w : g.neighbors(v))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    order.resize(std::max<std::size_t>(target, keep.size()));
    std::sort(order.begin(), order.end());
    return order;
}

ConnectedSubsets::ConnectedSubsets(const Graph& g, std::optional<int> size_cap,
                                   std::optional<std::int64_t> count_cap)
    : g_(&g), size_cap_(size_cap.value_or(g.size())), count_cap_(count_cap) {}

void ConnectedSubsets::expand(int v, NodeSet& cur, std::vector<char>& in, std::vector<char>& banned) {
    int pick = -1;
    if (static_cast<int>(cur.size()) < size_cap_) {
        for (int u : cur)
            for (int w : g_->neighbors(u))
                if (w > v && !in[w] && !banned[w] && (pick < 0 || w < pick)) pick = w;
    }
    if (pick < 0) {
        NodeSet out = cur;
        std::sort(out.begin(), out.end());
        batch_.push_back(std::move(out));
        return;
    }
    in[pick] = 1;
    cur.push_back(pick);
    expand(v, cur, in, banned);
    cur.pop_back();
    in[pick] = 0;
    banned[pick] = 1;
    expand(v, cur, in, banned);
    banned[pick] = 0;
}

void ConnectedSubsets::fill_anchor(int v) {
    batch_.clear();
    pos_ = 0;
    NodeSet cur{v};
    std::vector<char> in(g_->size(), 0), banned(g_->size(), 0);
    in[v] = 1;
    expand(v, cur, in, banned);
    std::sort(batch_.begin(), batch_.end());
}

std::optional<NodeSet> ConnectedSubsets::next() {
    while (pos_ >= batch_.size()) {
        if (anchor_ >= g_->size() || size_cap_ <= 0) return std::nullopt;
        fill_anchor(anchor_++);
    }
    if (count_cap_ && yielded_ >= *count_cap_)
        throw BudgetExceeded("connected subset enumeration exceeded its count cap");
    ++yielded_;
    return std::move(batch_[pos_++]);
}

std::vector<NodeSet> enumerate_connected_subsets(const Graph& g, std::optional<int> size_cap,
                                                 std::optional<std::int64_t> count_cap) {
    std::vector<NodeSet> out;
    ConnectedSubsets it(g, size_cap, count_cap);
    while (auto s = it.next()) out.push_back(std::move(*s));
    return out;
}

NodeSet RootedTree::desc(int i) const {
    NodeSet out(preorder.begin() + pre_index[i], preorder.begin() + pre_index[i] + subtree_size[i]);
    std::sort(out.begin(), out.end());
    return out;
}

NodeSet RootedTree::desc_prefix(int i, int c) const {
    if (c <= 0) return {};
    int last = children[i][c - 1];
    NodeSet out(preorder.begin() + pre_index[i] + 1, preorder.begin() + pre_index[last] + subtree_size[last]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> RootedTree::by_height() const {
    std::vector<int> out = preorder;
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
        return height[a] != height[b] ? height[a] < height[b] : a < b;
    });
    return out;
}

std::vector<RootedTree> root_forest(const Graph& g) {
    const int n = g.size();
    std::vector<RootedTree> out;
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        RootedTree t;
        t.root = r;
        t.parent.assign(n, -1);
        t.children.assign(n, {});
        t.height.assign(n, 0);
        t.pre_index.assign(n, -1);
        t.subtree_size.assign(n, 0);
        // iterative preorder with ascending children
        std::vector<int> stack{r};
        seen[r] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            t.pre_index[v] = static_cast<int>(t.preorder.size());
            t.preorder.push_back(v);
            for (int w : g.neighbors(v)) {
                if (w == t.parent[v]) continue;
                if (seen[w]) throw PreconditionError("graph is not a forest");
                seen[w] = 1;
                t.parent[w] = v;
                t.children[v].push_back(w);
            }
            for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it) stack.push_back(*it);
        }
        for (auto it = t.preorder.rbegin(); it != t.preorder.rend(); ++it) {
            int v = *it;
            t.subtree_size[v] = 1;
            for (int c : t.children[v]) {
                t.subtree_size[v] += t.subtree_size[c];
                t.height[v] = std::max(t.height[v], t.height[c] + 1);
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

GraphClass classify(const Graph& g) {
    GraphClass c;
    const int n = g.size();
    auto comps = connected_components(g);
    for (const auto& comp : comps) c.max_component = std::max<int>(c.max_component, comp.size());
    std::size_t m = g.edges().size();
    c.forest = (m + comps.size() == static_cast<std::size_t>(n));
    c.clique = (m == static_cast<std::size_t>(n) * (n - 1) / 2);
    bool connected = comps.size() == 1;
    if (connected && c.forest) {
        int max_deg = 0;
        for (int v = 0; v < n; ++v) {
            int d = static_cast<int>(g.neighbors(v).size());
            max_deg = std::max(max_deg, d);
        }
        c.path = max_deg <= 2;
        c.star = (n <= 2) || (max_deg == n - 1);
    }
    c.general = !c.forest && !c.clique;
    return c;
}

}  // namespace ggasp
