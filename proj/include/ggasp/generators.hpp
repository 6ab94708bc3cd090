#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggasp/instance.hpp"

namespace ggasp {

// A generated instance plus names for its players, so callers can talk
// about "the stalker of clause 2" instead of raw indices. Activities are
// already named through the roster.
struct Generated {
    Instance instance;
    std::vector<std::string> player_labels;
    std::map<std::string, int> player_index;

    int player(const std::string& label) const;
    int activity(const std::string& name) const;
};

// Incremental construction of instances by label.
class InstanceBuilder {
public:
    struct Pref {
        std::string activity;  // empty for the void activity
        int size = 1;
    };
    using Tier = std::vector<Pref>;

    int add_player(const std::string& label);
    void add_activity(const std::string& name, int copies = 1, std::optional<std::string> label = std::nullopt);
    void add_edge(const std::string& u, const std::string& v);
    void add_edge(int u, int v);
    // Tiers best first. The void activity is appended as a last tier when
    // absent. Alternatives already listed, or with sizes outside [1,n], are
    // skipped; tiers left empty are dropped.
    void set_preferences(const std::string& player, const std::vector<Tier>& tiers);
    int num_players() const { return static_cast<int>(labels_.size()); }
    Generated build() const;

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<Instance::Entry> roster_;
    std::map<std::string, int> row_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<Tier>> raw_;
};

inline InstanceBuilder::Pref void_pref() { return {"", 1}; }

Generated canonical(const std::string& name);  // stalker | empty_core | empty_is
std::vector<std::string> canonical_names();

// ---- source problems ----

// Path v0 - v1 - ... - v_m; edge i joins v_i and v_{i+1} and has color
// edge_color[i] in [0, colors).
struct EdgeColoredPath {
    int colors = 0;
    std::vector<int> edge_color;
    int k = 0;
};

// Bipartite graph with sides U = [0,left) and V = [0,right); edges (u, v).
struct BipartiteMMM {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;
    int k = 0;
};

// Literals are +x / -x with variables numbered from 1.
struct B2Formula {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Universe [0, 3k); sets are triples of universe elements.
struct X3CInput {
    int k = 0;
    std::vector<std::array<int, 3>> sets;
};

struct RegularCliqueInput {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    int k = 0;
};

// Vertex v has color v / q; vertices of one color are v_1..v_q in index order.
struct MulticoloredInput {
    int h = 0;
    int q = 0;
    std::vector<std::pair<int, int>> edges;
};

enum class RainbowVariant { NS, CR_IS };
enum class MmmVariant { NS, IS };
enum class B2Variant { NS, CR_IS };
enum class RegularVariant { NS, IS };
enum class MulticoloredVariant { CORE_MIS, NSIS_MC };

// Each validates its source and throws ValidationError on malformed input.
Generated from_rainbow_matching(const EdgeColoredPath& src, RainbowVariant variant);
Generated from_mmm(const BipartiteMMM& src, MmmVariant variant);
Generated from_b2sat(const B2Formula& src, B2Variant variant);
Generated from_x3c_star(const X3CInput& src);
Generated from_x3c_clique(const X3CInput& src);
Generated from_regular_clique(const RegularCliqueInput& src, RegularVariant variant);
Generated from_multicolored(const MulticoloredInput& src, MulticoloredVariant variant);

// Witness builders: turn a source solution into an assignment of the
// generated instance. They trust the solution; the verifiers judge it.
// `matching` lists edge indices (distinct colors); only the first k are used.
Assignment rainbow_witness(const Generated& g, const EdgeColoredPath& src, const std::vector<int>& matching);
// `matching` lists edge indices of a maximal matching with at most k edges.
Assignment mmm_witness(const Generated& g, const BipartiteMMM& src, const std::vector<int>& matching);
// truth[x-1] is the value of variable x.
Assignment b2sat_witness(const Generated& g, const B2Formula& src, const std::vector<bool>& truth);
Assignment x3c_star_witness(const Generated& g, const X3CInput& src, const std::vector<int>& cover);
Assignment x3c_clique_witness(const Generated& g, const X3CInput& src, const std::vector<int>& cover);
Assignment regular_clique_witness(const Generated& g, const RegularCliqueInput& src, const std::vector<int>& clique);
// chosen[i] is the vertex picked for color i.
Assignment multicolored_witness(const Generated& g, const MulticoloredInput& src, const std::vector<int>& chosen);

enum class GraphKind { Path, Star, Forest, Clique, TwoComponents, General };
std::string graph_kind_name(GraphKind k);
std::optional<GraphKind> parse_graph_kind(const std::string& s);

// Deterministic in all arguments. Each player lists a random subset of
// alternatives (each kept with probability `density`) in random weak order
// above the void activity.
Instance random_instance(std::uint64_t seed, int n, int p, GraphKind kind, double density);
// Same, but every activity is a class of n interchangeable copies and the
// graph is a forest of the requested kind (Path, Star, Forest or
// TwoComponents of trees).
Instance random_copyable_instance(std::uint64_t seed, int n, int p, GraphKind kind, double density);

}  // namespace ggasp
