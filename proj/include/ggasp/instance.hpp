#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggasp/errors.hpp"
#include "ggasp/graphkit.hpp"

namespace ggasp {

inline constexpr int kVoid = -1;

// An (activity, group size) pair. Activity ids are dense over all copies;
// kVoid stands for the void activity, whose only size is 1.
struct Alternative {
    int activity = kVoid;
    int size = 1;
    friend bool operator==(const Alternative&, const Alternative&) = default;
};

inline Alternative void_alt() { return {kVoid, 1}; }

enum class Ordering { Less, Equal, Greater };

// player -> activity id (kVoid allowed)
using Assignment = std::vector<int>;

class Instance {
public:
    // One roster line. A line with copies > 1 stands for that many
    // interchangeable activities sharing one preference row.
    struct Entry {
        std::string name;
        std::optional<std::string> label;
        int copies = 1;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    // Preference item referring to a roster line (kVoid for the void activity).
    struct Item {
        int row = kVoid;
        int size = 1;
        friend bool operator==(const Item&, const Item&) = default;
    };
    using Tier = std::vector<Item>;
    using Order = std::vector<Tier>;

    Instance() = default;
    // Validates everything; throws ValidationError.
    Instance(int n, std::vector<std::pair<int, int>> edges, std::vector<Entry> roster,
             std::vector<Order> preferences);

    int num_players() const { return n_; }
    int num_activities() const { return static_cast<int>(row_of_.size()); }
    const Graph& graph() const { return graph_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Entry>& roster() const { return roster_; }
    const std::vector<Order>& preferences() const { return prefs_; }

    int row_of(int activity) const { return row_of_[activity]; }
    int first_copy(int row) const { return first_copy_[row]; }
    std::string activity_name(int activity) const;
    std::optional<int> activity_by_name(const std::string& name) const;

    // 0 is best; unlisted alternatives share the bottom rank.
    int rank(int player, Alternative x) const;
    int bottom_rank(int player) const { return static_cast<int>(prefs_[player].size()); }

    Ordering compare(int player, Alternative x, Alternative y) const;
    bool prefers(int player, Alternative x, Alternative y) const { return rank(player, x) < rank(player, y); }
    bool weakly_prefers(int player, Alternative x, Alternative y) const { return rank(player, x) <= rank(player, y); }
    bool approves(int player, Alternative x) const { return prefers(player, x, void_alt()); }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.roster_ == b.roster_ && a.prefs_ == b.prefs_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Entry> roster_;
    std::vector<Order> prefs_;
    Graph graph_;
    std::vector<int> row_of_;
    std::vector<int> first_copy_;
    std::vector<int> ranks_;  // [player][row][size-1]
    std::vector<int> void_rank_;
};

inline Ordering compare(const Instance& inst, int player, Alternative x, Alternative y) {
    return inst.compare(player, x, y);
}
inline bool approves(const Instance& inst, int player, Alternative x) { return inst.approves(player, x); }

struct CopyableClasses {
    std::vector<std::vector<int>> classes;  // activity ids, each ascending; ordered by first member
    std::vector<int> class_of;              // per activity
    bool all_copyable = false;
};

// Semantic equivalence over activities: equal rank for every player and size.
CopyableClasses copyable_classes(const Instance& inst);

Instance load_instance(const std::string& text);
std::string save_instance(const Instance& inst);

Assignment load_assignment(const Instance& inst, const std::string& text);
std::string save_assignment(const Instance& inst, const Assignment& pi);

// 64-bit FNV-1a over the normalized serialization, as 16 hex digits.
std::string fingerprint(const Instance& inst);

// Members of activity a under pi, ascending.
NodeSet members(const Assignment& pi, int activity);
// Alternative a player holds under pi.
Alternative held(const Assignment& pi, int player);

}  // namespace ggasp
