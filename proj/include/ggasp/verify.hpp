#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "ggasp/instance.hpp"

namespace ggasp {

enum class Concept { NashStable, IndividuallyStable, CoreStable };

std::string concept_name(Concept c);           // "ns" | "is" | "core"
std::optional<Concept> parse_concept(const std::string& s);

enum class DeviationKind { NS, IS };

// `target` may be kVoid: leaving a group the player likes less than being alone.
struct Deviation {
    DeviationKind kind;
    int player;
    int target;
    friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct CoreBlock {
    NodeSet coalition;
    int activity;
    friend bool operator==(const CoreBlock&, const CoreBlock&) = default;
};

class NotIndividuallyRational : public std::runtime_error {
public:
    explicit NotIndividuallyRational(int player)
        : std::runtime_error("player " + std::to_string(player) + " prefers the void activity"), player_(player) {}
    int player() const { return player_; }

private:
    int player_;
};

bool is_feasible(const Instance& inst, const Assignment& pi);
std::optional<int> ir_violation(const Instance& inst, const Assignment& pi);
bool is_individually_rational(const Instance& inst, const Assignment& pi);

// Scan order: activities ascending, players ascending within each; moves
// to void come last.
std::optional<Deviation> find_ns_deviation(const Instance& inst, const Assignment& pi);
std::optional<Deviation> find_is_deviation(const Instance& inst, const Assignment& pi);

// Throws NotIndividuallyRational. Scan order: size ascending, then activity.
std::optional<CoreBlock> find_core_block(const Instance& inst, const Assignment& pi);

bool is_stable(const Instance& inst, const Assignment& pi, Concept c);

struct Certificate {
    bool stable = false;
    Concept for_concept = Concept::NashStable;
    // monostate: stable. int: infeasible activity. NotIR carries the player.
    struct Infeasible { int activity; };
    struct NotIR { int player; };
    std::variant<std::monostate, Deviation, CoreBlock, Infeasible, NotIR> witness;
};

Certificate certify(const Instance& inst, const Assignment& pi, Concept c);
std::string certificate_json(const Instance& inst, const Certificate& cert);

}  // namespace ggasp
