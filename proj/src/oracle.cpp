#include "ggasp/oracle.hpp"

namespace ggasp {

FeasibleAssignments::FeasibleAssignments(const Instance& inst, std::int64_t budget, bool collapse_copies,
                                         bool rational_only)
    : inst_(&inst), budget_(budget), rational_only_(rational_only) {
    const int n = inst.num_players(), p = inst.num_activities();
    if (rational_only) {
        const int rows = static_cast<int>(inst.roster().size());
        words_ = n / 64 + 1;
        ok_.assign(static_cast<std::size_t>(n) * rows * words_, 0);
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < rows; ++r)
                for (int s = 1; s <= n; ++s)
                    if (inst.weakly_prefers(i, {inst.first_copy(r), s}, void_alt()))
                        ok_[(static_cast<std::size_t>(i) * rows + r) * words_ + s / 64] |= std::uint64_t{1} << (s % 64);
        mask_.assign(static_cast<std::size_t>(p) * words_, ~std::uint64_t{0});
        saved_.assign(static_cast<std::size_t>(n) * words_, 0);
    }
    if (collapse_copies) {
        auto cc = copyable_classes(inst);
        class_of_ = cc.class_of;
        classes_ = cc.classes;
    } else {
        for (int a = 0; a < p; ++a) {
            class_of_.push_back(a);
            classes_.push_back({a});
        }
    }
    used_in_class_.assign(classes_.size(), 0);
    count_.assign(p, 0);
    pi_.assign(n, kVoid);
    choice_.assign(n, -2);
}

void FeasibleAssignments::place(int i, int a) {
    choice_[i] = a;
    pi_[i] = a;
    if (a == kVoid) return;
    if (count_[a]++ == 0) ++used_in_class_[class_of_[a]];
    if (rational_only_) {
        const std::size_t rows = inst_->roster().size();
        const std::uint64_t* ok = &ok_[(i * rows + inst_->row_of(a)) * words_];
        for (int w = 0; w < words_; ++w) {
            saved_[i * words_ + w] = mask_[a * words_ + w];
            mask_[a * words_ + w] &= ok[w];
        }
    }
}

void FeasibleAssignments::unplace(int i) {
    int a = choice_[i];
    if (a != kVoid && a >= 0) {
        if (--count_[a] == 0) --used_in_class_[class_of_[a]];
        if (rational_only_)
            for (int w = 0; w < words_; ++w) mask_[a * words_ + w] = saved_[i * words_ + w];
    }
    pi_[i] = kVoid;
}

// Some size in [count, count + players still to choose] suits every member.
bool FeasibleAssignments::size_reachable(int i, int a) const {
    const int lo = count_[a], hi = count_[a] + inst_->num_players() - 1 - i;
    for (int s = lo; s <= hi; ++s)
        if (mask_[a * words_ + s / 64] >> (s % 64) & 1) return true;
    return false;
}

bool FeasibleAssignments::extendable(int upto) const {
    const Graph& g = inst_->graph();
    const int n = inst_->num_players();
    std::vector<char> seen(n);
    std::vector<int> stack;
    for (int a = 0; a < inst_->num_activities(); ++a) {
        if (count_[a] == 0) continue;
        std::fill(seen.begin(), seen.end(), 0);
        int start = -1;
        for (int i = 0; i <= upto && start < 0; ++i)
            if (pi_[i] == a) start = i;
        stack.assign(1, start);
        seen[start] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v <= upto) ++reached;
            for (int w : g.neighbors(v))
                if (!seen[w] && (w > upto || pi_[w] == a)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (reached != count_[a]) return false;
    }
    return true;
}

bool FeasibleAssignments::advance(int i) {
    const int p = inst_->num_activities();
    int c = choice_[i];
    if (c >= -1) unplace(i);
    for (int next = c + 1; next < p; ++next) {
        if (next >= 0) {
            const auto& cls = classes_[class_of_[next]];
            int pos = 0;
            while (cls[pos] != next) ++pos;
            if (pos > used_in_class_[class_of_[next]]) continue;
        }
        if (++visits_ > budget_) throw BudgetExceeded("oracle enumeration exceeded its budget");
        place(i, next);
        if ((!rational_only_ || next == kVoid || size_reachable(i, next)) && extendable(i)) return true;
        unplace(i);
    }
    choice_[i] = -2;
    return false;
}

std::optional<Assignment> FeasibleAssignments::next() {
    const int n = inst_->num_players();
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        depth_ = 0;
    }
    while (true) {
        if (advance(depth_)) {
            if (depth_ == n - 1) return pi_;
            ++depth_;
            choice_[depth_] = -2;
        } else if (--depth_ < 0) {
            done_ = true;
            return std::nullopt;
        }
    }
}

std::vector<Assignment> enumerate_feasible(const Instance& inst, std::int64_t budget, bool collapse_copies) {
    std::vector<Assignment> out;
    FeasibleAssignments it(inst, budget, collapse_copies);
    while (auto pi = it.next()) out.push_back(std::move(*pi));
    return out;
}

std::optional<Assignment> brute_solve(const Instance& inst, Concept c, std::int64_t budget) {
    FeasibleAssignments it(inst, budget, true, true);
    while (auto pi = it.next())
        if (is_stable(inst, *pi, c)) return pi;
    return std::nullopt;
}

}  // namespace ggasp
