#pragma once

#include "hdel/graph.hpp"
#include "hdel/pattern.hpp"
#include "hdel/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdel {

/// One reveal step: the backward neighbors of the new vertex and its advice.
struct Reveal
{
    VertexSet neighbors;
    bool advice = false;

    bool operator==(const Reveal &) const = default;
};

using RevealStream = std::vector<Reveal>;

/// Throws std::invalid_argument if a reveal references a vertex that has not
/// arrived yet or lists a neighbor twice.
void validate_stream(const RevealStream & stream);

RevealStream to_stream(const OnlineGraph & g);

/// Builds the graph described by `stream`, no vertex deleted.
OnlineGraph replay_graph(const RevealStream & stream);

RevealStream with_advice(RevealStream stream, const std::vector<bool> & tape);

std::vector<bool> advice_of(const RevealStream & stream);

enum class AlgPCase
{
    delete_all_no_count,
    delete_all,
    delete_one_advice1
};

/// The ALG_p case distinction, evaluated exactly: Case 1 when the copy has no
/// advice-1 vertex or the advice was already declared incorrect, Case 2 when
/// d = 0 or e > p(e + d), Case 3 otherwise.
AlgPCase algp_case(std::int64_t e, std::int64_t d, const Rational & p, bool copy_has_advice1, bool declared_incorrect);

enum class StrategyKind
{
    alg_p,
    naive,
    alg_one,
    greedy_overlap,
    custom
};

/// Returns the vertices of `copy` to delete, in emission order.
using CustomResolver = std::function<VertexSet (const OnlineGraph &, const InducedCopy &)>;

class Strategy
{
    public:
        /// p must lie in [0, 1).
        static Strategy alg_p(Rational p);
        static Strategy naive();
        static Strategy alg_one();
        static Strategy greedy_overlap();
        static Strategy custom(std::string name, CustomResolver resolver);

        StrategyKind kind() const { return kind_; }
        /// The trust parameter: p for ALG_p, 1 for ALG_1, empty otherwise.
        std::optional<Rational> p() const { return p_; }
        const std::string & name() const { return name_; }
        const CustomResolver & resolver() const { return resolver_; }

    private:
        Strategy(StrategyKind kind, std::optional<Rational> p, std::string name, CustomResolver resolver = {});

        StrategyKind kind_;
        std::optional<Rational> p_;
        std::string name_;
        CustomResolver resolver_;
};

struct AlgPState
{
    Rational p{ 0 };
    std::int64_t e = 0;
    std::int64_t d = 0;
    bool advice_declared_incorrect = false;
};

enum class StepKind
{
    case1_delete_all,
    case2_delete_all,
    case3_delete_advice1,
    strategy_rule
};

struct ResolutionStep
{
    VertexSet copy;
    StepKind kind = StepKind::strategy_rule;
    /// In emission order.
    VertexSet deleted;
    std::int64_t e_after = 0;
    std::int64_t d_after = 0;
};

struct RunReport
{
    std::string pattern;
    int k = 0;
    StrategyKind strategy = StrategyKind::naive;
    std::string strategy_name;
    std::optional<Rational> p;

    std::size_t deletions_total = 0;
    std::size_t opt_cost = 0;
    std::int64_t final_e = 0;
    std::int64_t final_d = 0;
    bool advice_declared_incorrect = false;
    std::size_t deleted_advice1 = 0;
    std::size_t alive_advice1 = 0;
    /// deletions_total / max(opt_cost, 1)
    Rational ratio{ 0 };
    /// deletions_total - bound * opt_cost, filled in by verify_bounds.
    std::optional<Rational> additive_slack_used;
    std::vector<std::string> invariant_violations;

    std::vector<ResolutionStep> trace;
    RevealStream stream;
};

/// Delayed-decision execution of one strategy. The driver reveals vertices
/// and calls settle(), which resolves intact copies (canonical first copy
/// each time) until the alive graph is H-free.
class OnlineRun
{
    public:
        OnlineRun(PatternGraph h, Strategy strategy);

        VertexId reveal(std::span<const VertexId> neighbors, bool advice);

        /// Returns every vertex deleted, in deletion order.
        VertexSet settle();

        const OnlineGraph & graph() const { return graph_; }
        const PatternGraph & pattern() const { return pattern_; }
        const Strategy & strategy() const { return strategy_; }
        const AlgPState & state() const { return state_; }
        const std::vector<ResolutionStep> & trace() const { return trace_; }

        /// Final report. The optimum is computed exactly on the full revealed
        /// graph unless the caller already knows it.
        RunReport finish(std::optional<std::size_t> known_opt = std::nullopt) const;

    private:
        std::optional<ResolutionStep> resolve_step();
        VertexSet greedy_overlap_choice(const InducedCopy & copy) const;
        void check_counters(const ResolutionStep & step);

        PatternGraph pattern_;
        Strategy strategy_;
        OnlineGraph graph_;
        AlgPState state_;
        std::vector<ResolutionStep> trace_;
        std::vector<std::string> violations_;
};

/// Reveals `stream` vertex by vertex against `strategy`. The stream is
/// validated before anything is deleted.
RunReport run_strategy(const RevealStream & stream, const PatternGraph & h, const Strategy & strategy,
        std::optional<std::size_t> known_opt = std::nullopt);

/// Empty iff e + d = 0 or both e <= p(e + d) + 1 and d <= (1 - p)(e + d) + 1.
std::vector<std::string> check_counter_lemmas(std::int64_t e, std::int64_t d, const Rational & p);
std::vector<std::string> check_counter_lemmas(const RunReport & report, const Rational & p);

std::string to_string(StrategyKind kind);
std::string to_string(StepKind kind);

}
