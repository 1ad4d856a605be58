#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "actr/instantiation.hpp"
#include "actr/model.hpp"
#include "actr/sim_time.hpp"

namespace actr {

// Which of several equal-utility candidates fires, by declaration order.
enum class TieBreakPolicy { FirstDeclared, LastDeclared };

// ---- Pure update rules -----------------------------------------------------

// U + alpha * (R - U)
double reinforcement_update(double utility, double alpha, double reward);

struct SuccessCostValues {
    double probability = 0.0;
    double cost = 0.0;
    double utility = 0.0;
};

// P = s/(s+f), C = efforts/(s+f), U = P*G - C. Requires successes >= 1.
SuccessCostValues sc_recompute(double successes, double failures, double efforts, double goal_value);

// Exponential draw with mean theta: -theta * ln(1 - r), r in [0, 1).
double draw_random_cost(double theta, double r);

// P*G - zeta
double rc_utility(double probability, double goal_value, double zeta);

// ---- Conflict-set handling --------------------------------------------------

class RefractionHistory {
public:
    void record(const Instantiation& inst) { applied_.insert(inst.key()); }
    bool contains(const Instantiation& inst) const { return applied_.contains(inst.key()); }
    std::size_t size() const { return applied_.size(); }

private:
    std::set<InstantiationKey> applied_;
};

// Drops every instantiation that has already been applied.
std::vector<Instantiation> refraction_prune(std::vector<Instantiation> set, const RefractionHistory& history);

// Index of a maximal-utility candidate; ties resolved by source_index.
// `utilities` is parallel to `set`.
std::optional<std::size_t> select_winner(std::span<const Instantiation> set, std::span<const double> utilities,
                                         TieBreakPolicy policy);

// Rules applied since the last trigger, with their selection times,
// kept in chronological order.
class AppliedLog {
public:
    struct Entry {
        Symbol rule;
        SimTime selection_time;
    };

    void append(Symbol rule, SimTime selection_time);
    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    void clear() { entries_.clear(); }

private:
    std::vector<Entry> entries_;
};

// ---- Strategies ---------------------------------------------------------------

class Strategy {
public:
    explicit Strategy(TieBreakPolicy tie_break) : tie_break_(tie_break) {}
    virtual ~Strategy() = default;

    virtual std::string_view name() const = 0;

    // Reads reward/success/failure annotations from the model.
    virtual void attach(const ModelAST& model) = 0;

    // One utility per conflict-set member. Called once per conflict resolution.
    virtual std::vector<double> evaluate(std::span<const Instantiation> set) = 0;

    // The rule has just been applied at `now`; logs it and fires any trigger
    // its annotation carries.
    virtual void on_applied(const Symbol& rule, SimTime selection_time, SimTime now) = 0;

    // Current utility as reported in results.
    virtual double utility(const Symbol& rule) const = 0;

    TieBreakPolicy tie_break() const { return tie_break_; }

private:
    TieBreakPolicy tie_break_;
};

// Rewards are discounted by the time between selection and trigger and
// applied to every rule logged since the previous trigger.
class ReinforcementStrategy : public Strategy {
public:
    explicit ReinforcementStrategy(double alpha = 0.2, TieBreakPolicy tie_break = TieBreakPolicy::LastDeclared);

    std::string_view name() const override { return "reinforcement"; }
    void attach(const ModelAST& model) override;
    std::vector<double> evaluate(std::span<const Instantiation> set) override;
    void on_applied(const Symbol& rule, SimTime selection_time, SimTime now) override;
    double utility(const Symbol& rule) const override;

    void set_reward(const Symbol& rule, double amount) { rewards_[rule] = amount; }
    void log_application(const Symbol& rule, SimTime selection_time) { log_.append(rule, selection_time); }
    void trigger_reward(double amount, SimTime trigger_time);

    double alpha() const { return alpha_; }
    const AppliedLog& log() const { return log_; }
    const std::map<Symbol, double>& utilities() const { return utilities_; }

private:
    double alpha_;
    std::map<Symbol, double> utilities_;
    std::map<Symbol, double> rewards_;
    AppliedLog log_;
};

enum class Outcome { Success, Failure };

struct SuccessCostStats {
    double successes = 1.0;
    double failures = 0.0;
    double efforts = 0.05;  // seconds; one firing
    double probability = 1.0;
    double cost = 0.05;
    double utility = 0.0;  // set from G on first use
};

class SuccessCostStrategy : public Strategy {
public:
    explicit SuccessCostStrategy(double goal_value = 20.0,
                                 TieBreakPolicy tie_break = TieBreakPolicy::FirstDeclared);

    std::string_view name() const override { return "success-cost"; }
    void attach(const ModelAST& model) override;
    std::vector<double> evaluate(std::span<const Instantiation> set) override;
    void on_applied(const Symbol& rule, SimTime selection_time, SimTime now) override;
    double utility(const Symbol& rule) const override;

    void mark(const Symbol& rule, Outcome kind);
    void log_application(const Symbol& rule, SimTime selection_time) { log_.append(rule, selection_time); }
    void trigger_outcome(Outcome kind, SimTime trigger_time);

    double goal_value() const { return goal_value_; }
    SuccessCostStats stats(const Symbol& rule) const;
    const AppliedLog& log() const { return log_; }

protected:
    // Called after a rule's counters change.
    virtual void counters_changed(const Symbol& rule, SuccessCostStats& stats);

    double goal_value_;

private:
    SuccessCostStats initial_stats() const;

    std::map<Symbol, SuccessCostStats> stats_;
    std::set<Symbol> success_marks_;
    std::set<Symbol> failure_marks_;
    AppliedLog log_;
};

// Uniform [0, 1) source with a portable bit-to-double mapping so that a
// seed gives the same stream on every platform.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : gen_(seed) {}
    double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

// Success/cost bookkeeping, but each conflict resolution draws a fresh
// exponential cost with mean theta = efforts / successes per candidate.
class RandomCostStrategy : public SuccessCostStrategy {
public:
    RandomCostStrategy(std::uint64_t seed, double goal_value = 20.0,
                       TieBreakPolicy tie_break = TieBreakPolicy::FirstDeclared);

    std::string_view name() const override { return "random-cost"; }
    std::vector<double> evaluate(std::span<const Instantiation> set) override;

    // Last utility computed for the rule in a conflict resolution; before the
    // first draw, P*G - theta.
    double utility(const Symbol& rule) const override;

    double theta(const Symbol& rule) const;
    std::optional<double> last_zeta(const Symbol& rule) const;

protected:
    void counters_changed(const Symbol& rule, SuccessCostStats& stats) override;

private:
    UniformSource rng_;
    std::map<Symbol, double> theta_;
    std::map<Symbol, double> zeta_;
    std::map<Symbol, double> last_utility_;
};

}  // namespace actr
