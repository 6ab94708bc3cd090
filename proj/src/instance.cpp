#include "ggasp/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>

#include "json.hpp"

namespace ggasp {

using nlohmann::ordered_json;

Instance::Instance(int n, std::vector<std::pair<int, int>> edges, std::vector<Entry> roster,
                   std::vector<Order> preferences)
    : n_(n), edges_(std::move(edges)), roster_(std::move(roster)), prefs_(std::move(preferences)) {
    if (n_ < 1) throw ValidationError("instance needs at least one player");
    std::set<std::pair<int, int>> seen_edges;
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw ValidationError("edge [" + std::to_string(u) + "," + std::to_string(v) + "] references a missing player");
        if (u == v) throw ValidationError("self-loop on player " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen_edges.insert({u, v}).second)
            throw ValidationError("duplicate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    }
    std::sort(edges_.begin(), edges_.end());
    graph_ = Graph(n_, edges_);

    std::set<std::string> names;
    const int rows = static_cast<int>(roster_.size());
    for (int r = 0; r < rows; ++r) {
        const auto& e = roster_[r];
        if (e.name.empty() || e.name == "VOID" || e.name.find('#') != std::string::npos)
            throw ValidationError("activity " + std::to_string(r) + " has an invalid name '" + e.name + "'");
        if (!names.insert(e.name).second) throw ValidationError("duplicate activity name '" + e.name + "'");
        if (e.copies < 1) throw ValidationError("activity '" + e.name + "' needs copies >= 1");
        first_copy_.push_back(static_cast<int>(row_of_.size()));
        for (int c = 0; c < e.copies; ++c) row_of_.push_back(r);
    }

    if (static_cast<int>(prefs_.size()) != n_)
        throw ValidationError("expected " + std::to_string(n_) + " preference lists, got " + std::to_string(prefs_.size()));
    ranks_.assign(static_cast<std::size_t>(n_) * rows * n_, 0);
    void_rank_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
        const Order& order = prefs_[i];
        const int bottom = static_cast<int>(order.size());
        std::fill(ranks_.begin() + static_cast<std::size_t>(i) * rows * n_,
                  ranks_.begin() + static_cast<std::size_t>(i + 1) * rows * n_, bottom);
        bool has_void = false;
        std::set<std::pair<int, int>> listed;
        for (int t = 0; t < bottom; ++t) {
            if (order[t].empty())
                throw ValidationError("player " + std::to_string(i) + " tier " + std::to_string(t) + " is empty");
            for (const Item& it : order[t]) {
                const std::string where = "player " + std::to_string(i) + " tier " + std::to_string(t);
                if (it.row == kVoid) {
                    if (it.size != 1) throw ValidationError(where + ": void alternative must have size 1");
                    if (has_void) throw ValidationError(where + ": void listed twice");
                    has_void = true;
                    void_rank_[i] = t;
                    continue;
                }
                if (it.row < 0 || it.row >= rows) throw ValidationError(where + ": unknown activity");
                if (it.size < 1 || it.size > n_)
                    throw ValidationError(where + ": size " + std::to_string(it.size) + " outside [1," + std::to_string(n_) + "]");
                if (!listed.insert({it.row, it.size}).second)
                    throw ValidationError(where + ": alternative listed twice");
                ranks_[(static_cast<std::size_t>(i) * rows + it.row) * n_ + it.size - 1] = t;
            }
        }
        if (!has_void) throw ValidationError("player " + std::to_string(i) + " does not rank VOID");
    }

    std::map<std::string, int> label_row;
    for (int r = 0; r < rows; ++r) {
        if (!roster_[r].label) continue;
        auto [it, fresh] = label_row.emplace(*roster_[r].label, r);
        if (fresh) continue;
        int q = it->second;
        for (int i = 0; i < n_; ++i)
            for (int k = 1; k <= n_; ++k)
                if (rank(i, {first_copy_[q], k}) != rank(i, {first_copy_[r], k}))
                    throw ValidationError("activities '" + roster_[q].name + "' and '" + roster_[r].name +
                                          "' share class '" + *roster_[r].label + "' but are not equivalent");
    }
}

std::string Instance::activity_name(int activity) const {
    if (activity == kVoid) return "VOID";
    int r = row_of_[activity];
    int c = activity - first_copy_[r];
    return c == 0 ? roster_[r].name : roster_[r].name + "#" + std::to_string(c);
}

std::optional<int> Instance::activity_by_name(const std::string& name) const {
    std::string base = name;
    int copy = 0;
    if (auto h = name.find('#'); h != std::string::npos) {
        base = name.substr(0, h);
        std::string digits = name.substr(h + 1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            return std::nullopt;
        copy = std::stoi(digits);
    }
    for (int r = 0; r < static_cast<int>(roster_.size()); ++r)
        if (roster_[r].name == base && copy < roster_[r].copies) return first_copy_[r] + copy;
    return std::nullopt;
}

int Instance::rank(int player, Alternative x) const {
    if (x.activity == kVoid) return x.size == 1 ? void_rank_[player] : bottom_rank(player);
    if (x.size < 1 || x.size > n_) return bottom_rank(player);
    const std::size_t rows = roster_.size();
    return ranks_[(static_cast<std::size_t>(player) * rows + row_of_[x.activity]) * n_ + x.size - 1];
}

Ordering Instance::compare(int player, Alternative x, Alternative y) const {
    int rx = rank(player, x), ry = rank(player, y);
    if (rx < ry) return Ordering::Greater;
    if (rx > ry) return Ordering::Less;
    return Ordering::Equal;
}

CopyableClasses copyable_classes(const Instance& inst) {
    const int p = inst.num_activities(), n = inst.num_players();
    const int rows = static_cast<int>(inst.roster().size());
    std::vector<int> row_class(rows, -1);
    std::vector<int> reps;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < static_cast<int>(reps.size()) && row_class[r] < 0; ++c) {
            bool same = true;
            for (int i = 0; i < n && same; ++i)
                for (int k = 1; k <= n && same; ++k)
                    same = inst.rank(i, {inst.first_copy(reps[c]), k}) == inst.rank(i, {inst.first_copy(r), k});
            if (same) row_class[r] = c;
        }
        if (row_class[r] < 0) {
            row_class[r] = static_cast<int>(reps.size());
            reps.push_back(r);
        }
    }
    CopyableClasses out;
    out.classes.assign(reps.size(), {});
    out.class_of.assign(p, -1);
    for (int a = 0; a < p; ++a) {
        out.class_of[a] = row_class[inst.row_of(a)];
        out.classes[out.class_of[a]].push_back(a);
    }
    out.all_copyable = true;
    for (const auto& c : out.classes)
        if (static_cast<int>(c.size()) < n) out.all_copyable = false;
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw ParseError(msg); }

void reject_unknown(const ordered_json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) parse_fail(where + ": unknown field '" + it.key() + "'");
    }
}

int as_int(const ordered_json& v, const std::string& where) {
    if (!v.is_number_integer()) parse_fail(where + ": expected an integer");
    return v.get<int>();
}

ordered_json parse_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

Instance load_instance(const std::string& text) {
    ordered_json doc = parse_text(text);
    if (!doc.is_object()) parse_fail("instance: expected a JSON object");
    reject_unknown(doc, {"players", "edges", "activities", "preferences"}, "instance");
    for (const char* key : {"players", "edges", "activities", "preferences"})
        if (!doc.contains(key)) parse_fail(std::string("instance: missing field '") + key + "'");

    int n = as_int(doc["players"], "players");
    std::vector<std::pair<int, int>> edges;
    if (!doc["edges"].is_array()) parse_fail("edges: expected an array");
    for (std::size_t e = 0; e < doc["edges"].size(); ++e) {
        const auto& pair = doc["edges"][e];
        std::string where = "edges[" + std::to_string(e) + "]";
        if (!pair.is_array() || pair.size() != 2) parse_fail(where + ": expected [u, v]");
        edges.emplace_back(as_int(pair[0], where), as_int(pair[1], where));
    }

    std::vector<Instance::Entry> roster;
    std::map<std::string, int> row_by_name;
    if (!doc["activities"].is_array()) parse_fail("activities: expected an array");
    for (std::size_t r = 0; r < doc["activities"].size(); ++r) {
        const auto& a = doc["activities"][r];
        std::string where = "activities[" + std::to_string(r) + "]";
        if (!a.is_object()) parse_fail(where + ": expected an object");
        reject_unknown(a, {"name", "class", "copies"}, where);
        if (!a.contains("name") || !a["name"].is_string()) parse_fail(where + ": missing string 'name'");
        Instance::Entry e;
        e.name = a["name"].get<std::string>();
        if (a.contains("class")) {
            if (!a["class"].is_string()) parse_fail(where + ".class: expected a string");
            e.label = a["class"].get<std::string>();
        }
        if (a.contains("copies")) e.copies = as_int(a["copies"], where + ".copies");
        row_by_name.emplace(e.name, static_cast<int>(r));
        roster.push_back(std::move(e));
    }

    std::vector<Instance::Order> prefs;
    if (!doc["preferences"].is_array()) parse_fail("preferences: expected an array");
    for (std::size_t i = 0; i < doc["preferences"].size(); ++i) {
        const auto& order = doc["preferences"][i];
        std::string where = "preferences[" + std::to_string(i) + "]";
        if (!order.is_array()) parse_fail(where + ": expected an array of tiers");
        Instance::Order o;
        for (std::size_t t = 0; t < order.size(); ++t) {
            std::string tw = where + "[" + std::to_string(t) + "]";
            if (!order[t].is_array()) parse_fail(tw + ": expected an array of alternatives");
            Instance::Tier tier;
            for (std::size_t k = 0; k < order[t].size(); ++k) {
                const auto& item = order[t][k];
                std::string iw = tw + "[" + std::to_string(k) + "]";
                if (item.is_string()) {
                    if (item.get<std::string>() != "VOID") parse_fail(iw + ": only \"VOID\" may appear bare");
                    tier.push_back({kVoid, 1});
                    continue;
                }
                if (!item.is_array() || item.size() != 2 || !item[0].is_string())
                    parse_fail(iw + ": expected [\"name\", size] or \"VOID\"");
                auto it = row_by_name.find(item[0].get<std::string>());
                if (it == row_by_name.end())
                    throw ValidationError(iw + ": unknown activity '" + item[0].get<std::string>() + "'");
                tier.push_back({it->second, as_int(item[1], iw)});
            }
            o.push_back(std::move(tier));
        }
        prefs.push_back(std::move(o));
    }
    return Instance(n, std::move(edges), std::move(roster), std::move(prefs));
}

namespace {

ordered_json to_json(const Instance& inst) {
    ordered_json doc;
    doc["players"] = inst.num_players();
    doc["edges"] = ordered_json::array();
    for (auto [u, v] : inst.edges()) doc["edges"].push_back({u, v});
    doc["activities"] = ordered_json::array();
    for (const auto& e : inst.roster()) {
        ordered_json a;
        a["name"] = e.name;
        if (e.label) a["class"] = *e.label;
        if (e.copies != 1) a["copies"] = e.copies;
        doc["activities"].push_back(std::move(a));
    }
    doc["preferences"] = ordered_json::array();
    for (const auto& order : inst.preferences()) {
        ordered_json o = ordered_json::array();
        for (const auto& tier : order) {
            ordered_json t = ordered_json::array();
            for (const auto& it : tier) {
                if (it.row == kVoid)
                    t.push_back("VOID");
                else
                    t.push_back({inst.roster()[it.row].name, it.size});
            }
            o.push_back(std::move(t));
        }
        doc["preferences"].push_back(std::move(o));
    }
    return doc;
}

}  // namespace

std::string save_instance(const Instance& inst) {
    // One line per top-level list element keeps files diffable.
    ordered_json doc = to_json(inst);
    std::string out = "{\n  \"players\": " + std::to_string(inst.num_players()) + ",\n";
    out += "  \"edges\": " + doc["edges"].dump() + ",\n";
    out += "  \"activities\": [";
    for (std::size_t r = 0; r < doc["activities"].size(); ++r)
        out += (r ? ",\n    " : "\n    ") + doc["activities"][r].dump();
    out += doc["activities"].empty() ? "],\n" : "\n  ],\n";
    out += "  \"preferences\": [";
    for (std::size_t i = 0; i < doc["preferences"].size(); ++i)
        out += (i ? ",\n    " : "\n    ") + doc["preferences"][i].dump();
    out += "\n  ]\n}\n";
    return out;
}

Assignment load_assignment(const Instance& inst, const std::string& text) {
    ordered_json doc = parse_text(text);
    if (!doc.is_object()) parse_fail("assignment: expected a JSON object");
    reject_unknown(doc, {"assignment"}, "assignment document");
    if (!doc.contains("assignment") || !doc["assignment"].is_object()) parse_fail("assignment: missing object 'assignment'");
    const int n = inst.num_players();
    Assignment pi(n, kVoid);
    std::vector<char> given(n, 0);
    for (auto it = doc["assignment"].begin(); it != doc["assignment"].end(); ++it) {
        const std::string& key = it.key();
        if (key.empty() || !std::all_of(key.begin(), key.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            parse_fail("assignment: key '" + key + "' is not a player index");
        int i = std::stoi(key);
        if (i >= n) throw ValidationError("assignment: player " + key + " does not exist");
        if (!it.value().is_string()) parse_fail("assignment." + key + ": expected an activity name");
        std::string name = it.value().get<std::string>();
        if (name != "VOID") {
            auto a = inst.activity_by_name(name);
            if (!a) throw ValidationError("assignment." + key + ": unknown activity '" + name + "'");
            pi[i] = *a;
        }
        given[i] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!given[i]) throw ValidationError("assignment: player " + std::to_string(i) + " missing");
    return pi;
}

std::string save_assignment(const Instance& inst, const Assignment& pi) {
    ordered_json doc;
    doc["assignment"] = ordered_json::object();
    for (int i = 0; i < static_cast<int>(pi.size()); ++i) doc["assignment"][std::to_string(i)] = inst.activity_name(pi[i]);
    return doc.dump(2) + "\n";
}

std::string fingerprint(const Instance& inst) {
    std::string text = to_json(inst).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

NodeSet members(const Assignment& pi, int activity) {
    NodeSet out;
    if (activity == kVoid) return out;
    for (int i = 0; i < static_cast<int>(pi.size()); ++i)
        if (pi[i] == activity) out.push_back(i);
    return out;
}

Alternative held(const Assignment& pi, int player) {
    int a = pi[player];
    if (a == kVoid) return void_alt();
    return {a, static_cast<int>(std::count(pi.begin(), pi.end(), a))};
}

}  // namespace ggasp
