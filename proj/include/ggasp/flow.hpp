#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ggasp/guards.hpp"
#include "ggasp/instance.hpp"

namespace ggasp {

// Directed network with integer capacities. Arcs keep insertion order,
// which fixes the augmentation order.
class FlowNetwork {
public:
    struct Arc {
        int from, to;
        std::int64_t capacity, flow = 0;
    };

    FlowNetwork(int nodes, int source, int sink);
    int add_arc(int from, int to, std::int64_t capacity);  // returns the arc id

    int num_nodes() const { return static_cast<int>(out_.size()); }
    int source() const { return source_; }
    int sink() const { return sink_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::int64_t flow_on(int arc) const { return arcs_[arc].flow; }

private:
    friend std::int64_t max_flow(FlowNetwork& net);
    int source_, sink_;
    std::vector<Arc> arcs_;              // residual twin of arc e is e ^ 1
    std::vector<std::vector<int>> out_;  // residual arc ids per node
};

// Shortest augmenting paths; leaves the flow on the network's arcs.
std::int64_t max_flow(FlowNetwork& net);

// The group-size vector behind a clique solution: sizes[a] per activity,
// plus the number of void players.
struct CliqueWitness {
    Assignment assignment;
    std::vector<int> sizes;
    int void_count = 0;
};

std::optional<CliqueWitness> ns_clique_witness(const Instance& inst, const Guards& guards = {});
std::optional<CliqueWitness> is_clique_witness(const Instance& inst, const Guards& guards = {});
std::optional<Assignment> ns_clique(const Instance& inst, const Guards& guards = {});
std::optional<Assignment> is_clique(const Instance& inst, const Guards& guards = {});

}  // namespace ggasp
