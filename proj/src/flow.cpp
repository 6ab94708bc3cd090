#include "ggasp/flow.hpp"

#include <limits>
#include <queue>
#include <string>

namespace ggasp {

FlowNetwork::FlowNetwork(int nodes, int source, int sink) : source_(source), sink_(sink), out_(nodes) {}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({from, to, capacity, 0});
    arcs_.push_back({to, from, 0, 0});
    out_[from].push_back(id);
    out_[to].push_back(id + 1);
    return id;
}

std::int64_t max_flow(FlowNetwork& net) {
    auto& arcs = net.arcs_;
    std::int64_t total = 0;
    while (true) {
        std::vector<int> via(net.num_nodes(), -1);
        std::vector<char> seen(net.num_nodes(), 0);
        std::queue<int> bfs;
        bfs.push(net.source_);
        seen[net.source_] = 1;
        while (!bfs.empty() && !seen[net.sink_]) {
            const int u = bfs.front();
            bfs.pop();
            for (int e : net.out_[u]) {
                const auto& arc = arcs[e];
                if (seen[arc.to] || arc.capacity - arc.flow <= 0) continue;
                seen[arc.to] = 1;
                via[arc.to] = e;
                bfs.push(arc.to);
            }
        }
        if (!seen[net.sink_]) return total;
        std::int64_t push = std::numeric_limits<std::int64_t>::max();
        for (int v = net.sink_; v != net.source_; v = arcs[via[v]].from)
            push = std::min(push, arcs[via[v]].capacity - arcs[via[v]].flow);
        for (int v = net.sink_; v != net.source_; v = arcs[via[v]].from) {
            arcs[via[v]].flow += push;
            arcs[via[v] ^ 1].flow -= push;
        }
        total += push;
    }
}

namespace {

void check_clique(const Instance& inst, const Guards& guards) {
    if (!classify(inst.graph()).clique) throw PreconditionError("the graph is not a clique");
    if (inst.num_activities() > guards.max_p_clique)
        throw PreconditionError("instance has " + std::to_string(inst.num_activities()) +
                                " activities, above --max-p=" + std::to_string(guards.max_p_clique));
}

// Walks every size vector in colexicographic order (activity 0 varies
// fastest), skipping vectors some activity cannot fill with players who
// accept it. Stops when `visit` returns a witness.
template <class Visit>
std::optional<CliqueWitness> for_each_size_vector(const Instance& inst, Visit visit) {
    const int n = inst.num_players(), p = inst.num_activities();
    std::vector<int> f(p, 0);
    while (true) {
        int used = 0;
        for (int x : f) used += x;
        bool plausible = used <= n;
        for (int a = 0; a < p && plausible; ++a) {
            if (f[a] == 0) continue;
            int willing = 0;
            for (int i = 0; i < n; ++i) willing += inst.weakly_prefers(i, {a, f[a]}, void_alt());
            plausible = willing >= f[a];
        }
        if (plausible)
            if (auto w = visit(f, n - used)) return w;
        int a = 0;
        while (a < p && ++f[a] > n) f[a++] = 0;
        if (a == p) return std::nullopt;
    }
}

// Player i may sit at (a, f(a)) (a == kVoid for the void node) if nobody in
// `watch` tempts it more.
bool content(const Instance& inst, int i, Alternative here, const std::vector<int>& f, const std::vector<char>& watch) {
    for (int b = 0; b < static_cast<int>(f.size()); ++b)
        if (b != here.activity && watch[b] && inst.prefers(i, {b, f[b] + 1}, here)) return false;
    return true;
}

std::optional<CliqueWitness> solve_flow(const Instance& inst, const std::vector<int>& f, int void_count,
                                        const std::vector<char>& refusing) {
    const int n = inst.num_players(), p = inst.num_activities();
    // source 0, sink 1, players, activities, void, split nodes
    const int player0 = 2, act0 = player0 + n, void_node = act0 + p, split0 = void_node + 1;
    FlowNetwork net(split0 + p, 0, 1);
    std::vector<char> watch(p);
    for (int a = 0; a < p; ++a) watch[a] = !refusing[a];
    for (int i = 0; i < n; ++i) net.add_arc(0, player0 + i, 1);
    for (int a = 0; a < p; ++a) {
        if (refusing[a]) {
            net.add_arc(act0 + a, 1, f[a] - 1);
            net.add_arc(split0 + a, 1, 1);
        } else {
            net.add_arc(act0 + a, 1, f[a]);
        }
    }
    net.add_arc(void_node, 1, void_count);
    struct Link {
        int arc, player, activity;
    };
    std::vector<Link> links;
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < p; ++a) {
            const Alternative here{a, f[a]};
            if (f[a] == 0 || !inst.weakly_prefers(i, here, void_alt()) || !content(inst, i, here, f, watch)) continue;
            links.push_back({net.add_arc(player0 + i, act0 + a, 1), i, a});
            if (refusing[a] && inst.prefers(i, here, {a, f[a] + 1}))
                links.push_back({net.add_arc(player0 + i, split0 + a, 1), i, a});
        }
        if (void_count > 0 && content(inst, i, void_alt(), f, watch))
            links.push_back({net.add_arc(player0 + i, void_node, 1), i, kVoid});
    }
    if (max_flow(net) != n) return std::nullopt;
    CliqueWitness w;
    w.assignment.assign(n, kVoid);
    for (const auto& l : links)
        if (net.flow_on(l.arc) > 0) w.assignment[l.player] = l.activity;
    w.sizes = f;
    w.void_count = void_count;
    return w;
}

}  // namespace

std::optional<CliqueWitness> ns_clique_witness(const Instance& inst, const Guards& guards) {
    check_clique(inst, guards);
    const std::vector<char> none(inst.num_activities(), 0);
    return for_each_size_vector(inst, [&](const std::vector<int>& f, int void_count) {
        return solve_flow(inst, f, void_count, none);
    });
}

std::optional<CliqueWitness> is_clique_witness(const Instance& inst, const Guards& guards) {
    check_clique(inst, guards);
    const int p = inst.num_activities();
    return for_each_size_vector(inst, [&](const std::vector<int>& f, int void_count) -> std::optional<CliqueWitness> {
        // Only occupied activities can hold a member who refuses newcomers.
        std::uint32_t occupied = 0;
        for (int a = 0; a < p; ++a)
            if (f[a] > 0) occupied |= std::uint32_t(1) << a;
        for (std::uint32_t g = 0;; g = (g - occupied) & occupied) {
            std::vector<char> refusing(p);
            for (int a = 0; a < p; ++a) refusing[a] = (g >> a) & 1u;
            if (auto w = solve_flow(inst, f, void_count, refusing)) return w;
            if (g == occupied) return std::nullopt;
        }
    });
}

std::optional<Assignment> ns_clique(const Instance& inst, const Guards& guards) {
    if (auto w = ns_clique_witness(inst, guards)) return w->assignment;
    return std::nullopt;
}

std::optional<Assignment> is_clique(const Instance& inst, const Guards& guards) {
    if (auto w = is_clique_witness(inst, guards)) return w->assignment;
    return std::nullopt;
}

}  // namespace ggasp
