#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ggasp/instance.hpp"
#include "ggasp/verify.hpp"

namespace ggasp {

inline constexpr std::int64_t kDefaultOracleBudget = 20'000'000;

// Feasible assignments, each once up to renaming copies inside one
// equivalence class. Players choose void first, then activities ascending.
// Every partial assignment visited counts against the budget; running out
// throws BudgetExceeded.
// With rational_only set, branches where some group can no longer reach a
// size all of its members weakly prefer to being alone are cut; every
// individually rational feasible assignment is still produced.
class FeasibleAssignments {
public:
    explicit FeasibleAssignments(const Instance& inst, std::int64_t budget = kDefaultOracleBudget,
                                 bool collapse_copies = true, bool rational_only = false);
    std::optional<Assignment> next();
    std::int64_t visits() const { return visits_; }

private:
    bool advance(int i);  // moves player i to its next admissible choice
    bool extendable(int upto) const;
    bool size_reachable(int i, int a) const;
    void place(int i, int a);
    void unplace(int i);

    const Instance* inst_;
    std::int64_t budget_;
    std::int64_t visits_ = 0;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> used_in_class_;  // copies opened per class
    std::vector<int> count_;          // members per activity
    Assignment pi_;
    std::vector<int> choice_;         // -2: untouched, -1: void, else activity
    bool rational_only_ = false;
    int words_ = 0;
    std::vector<std::uint64_t> ok_;     // [player][row] masks over sizes 1..n
    std::vector<std::uint64_t> mask_;   // [activity] intersection over members
    std::vector<std::uint64_t> saved_;  // [player] mask before placement
    int depth_ = 0;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Assignment> enumerate_feasible(const Instance& inst, std::int64_t budget = kDefaultOracleBudget,
                                           bool collapse_copies = true);

// First stable assignment in enumeration order; absent means none exists.
std::optional<Assignment> brute_solve(const Instance& inst, Concept c, std::int64_t budget = kDefaultOracleBudget);

}  // namespace ggasp
