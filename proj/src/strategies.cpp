#include "actr/strategies.hpp"

#include <algorithm>
#include <cmath>

#include "actr/error.hpp"

namespace actr {

double reinforcement_update(double utility, double alpha, double reward) {
    return utility + alpha * (reward - utility);
}

SuccessCostValues sc_recompute(double successes, double failures, double efforts, double goal_value) {
    const double n = successes + failures;
    SuccessCostValues v;
    v.probability = successes / n;
    v.cost = efforts / n;
    v.utility = v.probability * goal_value - v.cost;
    return v;
}

double draw_random_cost(double theta, double r) {
    if (theta == 0.0 || r == 0.0) return 0.0;
    return -theta * std::log1p(-r);
}

double rc_utility(double probability, double goal_value, double zeta) {
    return probability * goal_value - zeta;
}

std::vector<Instantiation> refraction_prune(std::vector<Instantiation> set, const RefractionHistory& history) {
    std::erase_if(set, [&](const Instantiation& inst) { return history.contains(inst); });
    return set;
}

std::optional<std::size_t> select_winner(std::span<const Instantiation> set, std::span<const double> utilities,
                                         TieBreakPolicy policy) {
    if (set.size() != utilities.size()) {
        throw Error(ErrorCode::InvalidArgument, "utilities must be parallel to the conflict set");
    }
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (!best) {
            best = i;
            continue;
        }
        const double u = utilities[i];
        const double bu = utilities[*best];
        if (u > bu) {
            best = i;
        } else if (u == bu) {
            const bool earlier = set[i].source_index < set[*best].source_index;
            if (earlier == (policy == TieBreakPolicy::FirstDeclared)) best = i;
        }
    }
    return best;
}

void AppliedLog::append(Symbol rule, SimTime selection_time) {
    auto pos = std::upper_bound(entries_.begin(), entries_.end(), selection_time,
                                [](SimTime t, const Entry& e) { return t < e.selection_time; });
    entries_.insert(pos, Entry{std::move(rule), selection_time});
}

// ---- Reinforcement ------------------------------------------------------------

ReinforcementStrategy::ReinforcementStrategy(double alpha, TieBreakPolicy tie_break)
    : Strategy(tie_break), alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1]");
    }
}

void ReinforcementStrategy::attach(const ModelAST& model) {
    for (const auto& [rule, ann] : model.annotations) {
        if (ann.reward) set_reward(rule, *ann.reward);
    }
}

std::vector<double> ReinforcementStrategy::evaluate(std::span<const Instantiation> set) {
    std::vector<double> out;
    out.reserve(set.size());
    for (const auto& inst : set) out.push_back(utility(inst.rule));
    return out;
}

void ReinforcementStrategy::on_applied(const Symbol& rule, SimTime selection_time, SimTime now) {
    log_application(rule, selection_time);
    if (auto it = rewards_.find(rule); it != rewards_.end()) trigger_reward(it->second, now);
}

void ReinforcementStrategy::trigger_reward(double amount, SimTime trigger_time) {
    for (const auto& e : log_.entries()) {
        const double reward = amount - (trigger_time - e.selection_time).seconds();
        auto& u = utilities_[e.rule];
        u = reinforcement_update(u, alpha_, reward);
    }
    log_.clear();
}

double ReinforcementStrategy::utility(const Symbol& rule) const {
    auto it = utilities_.find(rule);
    return it == utilities_.end() ? 0.0 : it->second;
}

// ---- Success / cost -------------------------------------------------------------

SuccessCostStrategy::SuccessCostStrategy(double goal_value, TieBreakPolicy tie_break)
    : Strategy(tie_break), goal_value_(goal_value) {}

void SuccessCostStrategy::attach(const ModelAST& model) {
    for (const auto& [rule, ann] : model.annotations) {
        if (ann.success) mark(rule, Outcome::Success);
        if (ann.failure) mark(rule, Outcome::Failure);
    }
}

void SuccessCostStrategy::mark(const Symbol& rule, Outcome kind) {
    (kind == Outcome::Success ? success_marks_ : failure_marks_).insert(rule);
}

SuccessCostStats SuccessCostStrategy::initial_stats() const {
    SuccessCostStats s;
    const auto v = sc_recompute(s.successes, s.failures, s.efforts, goal_value_);
    s.probability = v.probability;
    s.cost = v.cost;
    s.utility = v.utility;
    return s;
}

SuccessCostStats SuccessCostStrategy::stats(const Symbol& rule) const {
    auto it = stats_.find(rule);
    return it == stats_.end() ? initial_stats() : it->second;
}

std::vector<double> SuccessCostStrategy::evaluate(std::span<const Instantiation> set) {
    std::vector<double> out;
    out.reserve(set.size());
    for (const auto& inst : set) out.push_back(utility(inst.rule));
    return out;
}

void SuccessCostStrategy::on_applied(const Symbol& rule, SimTime selection_time, SimTime now) {
    log_application(rule, selection_time);
    if (success_marks_.contains(rule)) trigger_outcome(Outcome::Success, now);
    if (failure_marks_.contains(rule)) trigger_outcome(Outcome::Failure, now);
}

void SuccessCostStrategy::trigger_outcome(Outcome kind, SimTime trigger_time) {
    std::set<Symbol> touched;
    for (const auto& e : log_.entries()) {
        auto [it, inserted] = stats_.try_emplace(e.rule, initial_stats());
        auto& s = it->second;
        (kind == Outcome::Success ? s.successes : s.failures) += 1.0;
        s.efforts += (trigger_time - e.selection_time).seconds();
        touched.insert(e.rule);
    }
    for (const auto& rule : touched) counters_changed(rule, stats_.at(rule));
    log_.clear();
}

void SuccessCostStrategy::counters_changed(const Symbol&, SuccessCostStats& s) {
    const auto v = sc_recompute(s.successes, s.failures, s.efforts, goal_value_);
    s.probability = v.probability;
    s.cost = v.cost;
    s.utility = v.utility;
}

double SuccessCostStrategy::utility(const Symbol& rule) const { return stats(rule).utility; }

// ---- Random estimated costs ---------------------------------------------------------

RandomCostStrategy::RandomCostStrategy(std::uint64_t seed, double goal_value, TieBreakPolicy tie_break)
    : SuccessCostStrategy(goal_value, tie_break), rng_(seed) {}

double RandomCostStrategy::theta(const Symbol& rule) const {
    if (auto it = theta_.find(rule); it != theta_.end()) return it->second;
    const auto s = stats(rule);
    return s.efforts / s.successes;
}

std::optional<double> RandomCostStrategy::last_zeta(const Symbol& rule) const {
    auto it = zeta_.find(rule);
    if (it == zeta_.end()) return std::nullopt;
    return it->second;
}

void RandomCostStrategy::counters_changed(const Symbol& rule, SuccessCostStats& s) {
    SuccessCostStrategy::counters_changed(rule, s);
    theta_[rule] = s.efforts / s.successes;
}

std::vector<double> RandomCostStrategy::evaluate(std::span<const Instantiation> set) {
    std::vector<double> out;
    out.reserve(set.size());
    for (const auto& inst : set) {
        const double zeta = draw_random_cost(theta(inst.rule), rng_.next());
        const double u = rc_utility(stats(inst.rule).probability, goal_value_, zeta);
        zeta_[inst.rule] = zeta;
        last_utility_[inst.rule] = u;
        out.push_back(u);
    }
    return out;
}

double RandomCostStrategy::utility(const Symbol& rule) const {
    if (auto it = last_utility_.find(rule); it != last_utility_.end()) return it->second;
    return stats(rule).probability * goal_value_ - theta(rule);
}

}  // namespace actr
