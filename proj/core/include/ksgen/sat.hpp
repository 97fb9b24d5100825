#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ksgen/cnf.hpp"
#include "ksgen/proof_events.hpp"

namespace ksgen::sat {

enum class Value : std::uint8_t { False = 0, True = 1, Unassigned = 2 };

/// Total or partial assignment indexed by variable (entry 0 unused).
using Model = std::vector<Value>;

enum class Outcome { Sat, Unsat, Indeterminate };

enum class DecisionPolicy { StaticPrefix, Activity };

struct SolverOptions {
    DecisionPolicy policy = DecisionPolicy::StaticPrefix;
    /// Variables 1..projection_prefix form the edge-variable block: decisions
    /// prefer them and enumerate() blocks models projected onto them.
    int projection_prefix = 0;
    /// Total conflict budget across a solve/enumerate call; 0 = unlimited.
    std::int64_t conflict_budget = 0;
    int luby_unit = 64;
    std::size_t learned_capacity = 20000;
};

/// Clause injected by a propagator. Must be falsified or unit under the
/// assignment at the moment it is polled, or globally valid for the
/// enumeration semantics (canonicity and geometry blocks are the latter).
struct ExternalClause {
    Clause lits;
    proof::ProofEvent::Kind kind = proof::ProofEvent::Kind::Add;
    std::vector<int> t_witness;
    std::vector<std::pair<int, int>> o_witness;
};

/// External-propagator contract. Callbacks mirror the solver trail: every
/// enqueued literal is reported through on_assign (including level-0 units),
/// decisions open levels via on_new_level, and on_backtrack(l) pops back to
/// level l. poll_external_clauses is drained at every propagation fixpoint;
/// on_final_model may veto a total assignment by returning a blocking clause.
class PropagatorHooks {
public:
    virtual ~PropagatorHooks() = default;
    virtual void on_assign(Lit) {}
    virtual void on_new_level() {}
    virtual void on_backtrack(int /*level*/) {}
    virtual std::optional<ExternalClause> on_final_model(const Model&) { return std::nullopt; }
    virtual std::vector<ExternalClause> poll_external_clauses() { return {}; }
};

struct Stats {
    std::int64_t conflicts = 0;
    std::int64_t decisions = 0;
    std::int64_t propagations = 0;
    std::int64_t restarts = 0;
    std::int64_t learned = 0;
    std::int64_t deleted = 0;
    std::int64_t external_t = 0;
    std::int64_t external_o = 0;
    std::int64_t external_other = 0;
    std::int64_t models = 0;
    std::int64_t blocked_models = 0;

    std::string to_string() const; // line-oriented key=value text
};

/// Conflict-driven clause learning solver: two-watched literals, first-UIP
/// learning with recursive minimization, phase saving, Luby restarts.
/// Learned and injected clauses stream to the attached proof sink; injected
/// clauses are permanent while learned ones may be deleted (logged).
class Solver {
public:
    explicit Solver(const Cnf& cnf, SolverOptions opt = {});
    ~Solver();

    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    void set_hooks(PropagatorHooks* hooks) { hooks_ = hooks; }
    void set_proof(proof::ProofSink* sink) { proof_ = sink; }

    Outcome solve();

    /// Runs to exhaustion, reporting each accepted total model once and then
    /// blocking its projection onto the edge-variable block. Models the
    /// final-model hook vetoes are blocked without being reported. Returns
    /// Unsat when the space is exhausted, Indeterminate on budget.
    Outcome enumerate(const std::function<void(const Model&)>& on_model);

    const Model& model() const { return model_; }
    const Stats& stats() const { return stats_; }
    int var_count() const { return nvars_; }

private:
    struct ClauseData {
        Clause lits;
        bool learned = false;
        bool protect = false;
        bool deleted = false;
        double activity = 0.0;
    };
    using Cref = int;
    static constexpr Cref kNoClause = -1;

    // core machinery
    Outcome search();
    Cref propagate();
    void analyze(Cref confl, Clause& learned, int& backjump_level);
    bool literal_redundant(Lit l);
    void enqueue(Lit l, Cref reason);
    void backtrack(int level);
    void new_level();
    Lit pick_branch();
    Cref attach_clause(Clause lits, bool learned, bool protect);
    enum class InjectResult { Ok, Conflict, TopConflict };
    InjectResult inject(const ExternalClause& ext, Cref& conflict_out);
    void reduce_learned();
    void emit_proof(proof::ProofEvent::Kind kind, const Clause& lits,
                    const std::vector<int>& twit = {},
                    const std::vector<std::pair<int, int>>& owit = {});
    void bump_var(int v);
    void bump_clause(Cref c);
    bool locked(Cref c) const;

    Value value(Lit l) const {
        Value v = assign_[var_of(l)];
        if (v == Value::Unassigned) return v;
        return (l > 0) == (v == Value::True) ? Value::True : Value::False;
    }
    int level_of(Lit l) const { return level_[var_of(l)]; }
    static std::size_t widx(Lit l) { return 2 * static_cast<std::size_t>(var_of(l)) + (l < 0 ? 1 : 0); }
    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    int nvars_ = 0;
    SolverOptions opt_;
    bool unsat_ = false;

    std::vector<ClauseData> clauses_;
    std::vector<std::vector<Cref>> watches_;
    std::vector<Value> assign_;
    std::vector<int> level_;
    std::vector<Cref> reason_;
    std::vector<std::uint8_t> phase_;
    std::vector<double> var_act_;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;

    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;
    int static_head_ = 1;

    std::int64_t conflicts_at_restart_ = 0;
    int restart_seq_ = 0;
    std::size_t learned_cap_;
    std::int64_t learned_live_ = 0;

    // scratch for analyze
    std::vector<std::uint8_t> seen_;
    std::vector<Lit> analyze_stack_;

    PropagatorHooks* hooks_ = nullptr;
    proof::ProofSink* proof_ = nullptr;

    Model model_;
    Stats stats_;
};

} // namespace ksgen::sat
