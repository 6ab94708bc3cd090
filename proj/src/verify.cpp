#include "ggasp/verify.hpp"

#include <algorithm>

#include "json.hpp"

namespace ggasp {

std::string concept_name(Concept c) {
    switch (c) {
        case Concept::NashStable: return "ns";
        case Concept::IndividuallyStable: return "is";
        case Concept::CoreStable: return "core";
    }
    return "?";
}

std::optional<Concept> parse_concept(const std::string& s) {
    if (s == "ns") return Concept::NashStable;
    if (s == "is") return Concept::IndividuallyStable;
    if (s == "core") return Concept::CoreStable;
    return std::nullopt;
}

namespace {

std::vector<int> group_sizes(const Instance& inst, const Assignment& pi) {
    std::vector<int> sz(inst.num_activities(), 0);
    for (int a : pi)
        if (a != kVoid) ++sz[a];
    return sz;
}

Alternative current(const Assignment& pi, const std::vector<int>& sz, int i) {
    return pi[i] == kVoid ? void_alt() : Alternative{pi[i], sz[pi[i]]};
}

bool touches(const Instance& inst, const Assignment& pi, int i, int a) {
    for (int w : inst.graph().neighbors(i))
        if (pi[w] == a) return true;
    return false;
}

std::optional<Deviation> scan(const Instance& inst, const Assignment& pi, DeviationKind kind) {
    const int n = inst.num_players(), p = inst.num_activities();
    auto sz = group_sizes(inst, pi);
    for (int a = 0; a < p; ++a) {
        Alternative joined{a, sz[a] + 1};
        bool accepted = true;
        if (kind == DeviationKind::IS)
            for (int j = 0; j < n && accepted; ++j)
                if (pi[j] == a) accepted = inst.weakly_prefers(j, joined, {a, sz[a]});
        if (!accepted) continue;
        for (int i = 0; i < n; ++i) {
            if (pi[i] == a || !inst.prefers(i, joined, current(pi, sz, i))) continue;
            if (sz[a] > 0 && !touches(inst, pi, i, a)) continue;
            return Deviation{kind, i, a};
        }
    }
    for (int i = 0; i < n; ++i)
        if (pi[i] != kVoid && inst.prefers(i, void_alt(), current(pi, sz, i))) return Deviation{kind, i, kVoid};
    return std::nullopt;
}

}  // namespace

bool is_feasible(const Instance& inst, const Assignment& pi) {
    for (int a = 0; a < inst.num_activities(); ++a)
        if (!is_connected_subset(inst.graph(), members(pi, a))) return false;
    return true;
}

std::optional<int> ir_violation(const Instance& inst, const Assignment& pi) {
    auto sz = group_sizes(inst, pi);
    for (int i = 0; i < inst.num_players(); ++i)
        if (pi[i] != kVoid && inst.prefers(i, void_alt(), current(pi, sz, i))) return i;
    return std::nullopt;
}

bool is_individually_rational(const Instance& inst, const Assignment& pi) { return !ir_violation(inst, pi); }

std::optional<Deviation> find_ns_deviation(const Instance& inst, const Assignment& pi) {
    return scan(inst, pi, DeviationKind::NS);
}

std::optional<Deviation> find_is_deviation(const Instance& inst, const Assignment& pi) {
    return scan(inst, pi, DeviationKind::IS);
}

std::optional<CoreBlock> find_core_block(const Instance& inst, const Assignment& pi) {
    if (auto bad = ir_violation(inst, pi)) throw NotIndividuallyRational(*bad);
    const int n = inst.num_players(), p = inst.num_activities();
    auto sz = group_sizes(inst, pi);
    std::vector<NodeSet> groups(p);
    for (int a = 0; a < p; ++a) groups[a] = members(pi, a);
    for (int s = 1; s <= n; ++s) {
        for (int a = 0; a < p; ++a) {
            if (s < sz[a]) continue;
            NodeSet eager;
            for (int i = 0; i < n; ++i)
                if (inst.prefers(i, {a, s}, current(pi, sz, i))) eager.push_back(i);
            if (!std::includes(eager.begin(), eager.end(), groups[a].begin(), groups[a].end())) continue;
            auto comp = largest_connected_superset(inst.graph(), eager, groups[a]);
            if (!comp || static_cast<int>(comp->size()) < s) continue;
            return CoreBlock{trim_connected(inst.graph(), *comp, groups[a], s), a};
        }
    }
    return std::nullopt;
}

bool is_stable(const Instance& inst, const Assignment& pi, Concept c) { return certify(inst, pi, c).stable; }

Certificate certify(const Instance& inst, const Assignment& pi, Concept c) {
    Certificate cert;
    cert.for_concept = c;
    for (int a = 0; a < inst.num_activities(); ++a)
        if (!is_connected_subset(inst.graph(), members(pi, a))) {
            cert.witness = Certificate::Infeasible{a};
            return cert;
        }
    if (auto bad = ir_violation(inst, pi)) {
        cert.witness = Certificate::NotIR{*bad};
        return cert;
    }
    switch (c) {
        case Concept::NashStable:
            if (auto d = find_ns_deviation(inst, pi)) cert.witness = *d;
            break;
        case Concept::IndividuallyStable:
            if (auto d = find_is_deviation(inst, pi)) cert.witness = *d;
            break;
        case Concept::CoreStable:
            if (auto b = find_core_block(inst, pi)) cert.witness = *b;
            break;
    }
    cert.stable = std::holds_alternative<std::monostate>(cert.witness);
    return cert;
}

std::string certificate_json(const Instance& inst, const Certificate& cert) {
    nlohmann::ordered_json doc;
    doc["stable"] = cert.stable;
    doc["concept"] = concept_name(cert.for_concept);
    nlohmann::ordered_json w = nullptr;
    if (auto d = std::get_if<Deviation>(&cert.witness)) {
        w["kind"] = d->kind == DeviationKind::NS ? "ns-deviation" : "is-deviation";
        w["player"] = d->player;
        w["activity"] = inst.activity_name(d->target);
    } else if (auto b = std::get_if<CoreBlock>(&cert.witness)) {
        w["kind"] = "core-block";
        w["coalition"] = b->coalition;
        w["activity"] = inst.activity_name(b->activity);
    } else if (auto f = std::get_if<Certificate::Infeasible>(&cert.witness)) {
        w["kind"] = "infeasible";
        w["activity"] = inst.activity_name(f->activity);
    } else if (auto r = std::get_if<Certificate::NotIR>(&cert.witness)) {
        w["kind"] = "not-individually-rational";
        w["player"] = r->player;
    }
    doc["witness"] = w;
    return doc.dump();
}

}  // namespace ggasp
