#include "hdel/online.hpp"
#include "hdel/exact.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hdel {

void validate_stream(const RevealStream & stream)
{
    for (std::size_t t = 0 ; t < stream.size() ; ++t) {
        auto sorted = stream[t].neighbors;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0 ; i < sorted.size() ; ++i) {
            if (sorted[i] >= t)
                throw std::invalid_argument("reveal " + std::to_string(t) + " references vertex "
                        + std::to_string(sorted[i]) + " before it arrives");
            if (i > 0 && sorted[i] == sorted[i - 1])
                throw std::invalid_argument("reveal " + std::to_string(t) + " lists neighbor "
                        + std::to_string(sorted[i]) + " twice");
        }
    }
}

RevealStream to_stream(const OnlineGraph & g)
{
    RevealStream stream;
    stream.reserve(g.size());
    for (VertexId v = 0 ; v < g.size() ; ++v)
        stream.push_back(Reveal{ g.backward_neighbors(v), g.advice(v) });
    return stream;
}

OnlineGraph replay_graph(const RevealStream & stream)
{
    OnlineGraph g;
    for (auto & r : stream)
        g.add_vertex(r.neighbors, r.advice);
    return g;
}

RevealStream with_advice(RevealStream stream, const std::vector<bool> & tape)
{
    if (tape.size() != stream.size())
        throw std::invalid_argument("advice tape length " + std::to_string(tape.size())
                + " does not match stream length " + std::to_string(stream.size()));
    for (std::size_t t = 0 ; t < stream.size() ; ++t)
        stream[t].advice = tape[t];
    return stream;
}

std::vector<bool> advice_of(const RevealStream & stream)
{
    std::vector<bool> tape;
    tape.reserve(stream.size());
    for (auto & r : stream)
        tape.push_back(r.advice);
    return tape;
}

AlgPCase algp_case(std::int64_t e, std::int64_t d, const Rational & p, bool copy_has_advice1, bool declared_incorrect)
{
    if (declared_incorrect || ! copy_has_advice1)
        return AlgPCase::delete_all_no_count;
    if (d == 0 || Rational(e) > p * Rational(e + d))
        return AlgPCase::delete_all;
    return AlgPCase::delete_one_advice1;
}

Strategy::Strategy(StrategyKind kind, std::optional<Rational> p, std::string name, CustomResolver resolver) :
    kind_(kind),
    p_(p),
    name_(std::move(name)),
    resolver_(std::move(resolver))
{
}

Strategy Strategy::alg_p(Rational p)
{
    if (p < Rational(0) || p >= Rational(1))
        throw std::invalid_argument("ALG_p needs p in [0, 1), got " + format_rational(p)
                + "; use alg_one for p = 1");
    return Strategy(StrategyKind::alg_p, p, "algp");
}

Strategy Strategy::naive()
{
    return Strategy(StrategyKind::naive, std::nullopt, "naive");
}

Strategy Strategy::alg_one()
{
    return Strategy(StrategyKind::alg_one, Rational(1), "alg1");
}

Strategy Strategy::greedy_overlap()
{
    return Strategy(StrategyKind::greedy_overlap, std::nullopt, "greedy");
}

Strategy Strategy::custom(std::string name, CustomResolver resolver)
{
    if (! resolver)
        throw std::invalid_argument("custom strategy needs a resolver");
    return Strategy(StrategyKind::custom, std::nullopt, std::move(name), std::move(resolver));
}

OnlineRun::OnlineRun(PatternGraph h, Strategy strategy) :
    pattern_(std::move(h)),
    strategy_(std::move(strategy))
{
    if (strategy_.p())
        state_.p = *strategy_.p();
}

VertexId OnlineRun::reveal(std::span<const VertexId> neighbors, bool advice)
{
    return graph_.add_vertex(neighbors, advice);
}

VertexSet OnlineRun::settle()
{
    VertexSet deleted;
    while (auto step = resolve_step())
        deleted.insert(deleted.end(), step->deleted.begin(), step->deleted.end());
    return deleted;
}

std::optional<ResolutionStep> OnlineRun::resolve_step()
{
    auto copies = find_copies(graph_, pattern_, 1);
    if (copies.empty())
        return std::nullopt;
    const auto & copy = copies.front();

    ResolutionStep step;
    step.copy = copy.vertices;

    // copy.vertices is ascending, so the first advice-1 vertex arrived first
    std::optional<VertexId> first_advice1;
    for (auto v : copy.vertices)
        if (graph_.advice(v)) {
            first_advice1 = v;
            break;
        }

    switch (strategy_.kind()) {
        case StrategyKind::alg_p:
            switch (algp_case(state_.e, state_.d, state_.p, first_advice1.has_value(), state_.advice_declared_incorrect)) {
                case AlgPCase::delete_all_no_count:
                    state_.advice_declared_incorrect = true;
                    step.kind = StepKind::case1_delete_all;
                    step.deleted = copy.vertices;
                    break;
                case AlgPCase::delete_all:
                    ++state_.d;
                    step.kind = StepKind::case2_delete_all;
                    step.deleted = copy.vertices;
                    break;
                case AlgPCase::delete_one_advice1:
                    ++state_.e;
                    step.kind = StepKind::case3_delete_advice1;
                    step.deleted = { *first_advice1 };
                    break;
            }
            break;

        case StrategyKind::naive:
            step.deleted = copy.vertices;
            break;

        case StrategyKind::alg_one:
            if (first_advice1)
                step.deleted = { *first_advice1 };
            else
                step.deleted = copy.vertices;
            break;

        case StrategyKind::greedy_overlap:
            step.deleted = greedy_overlap_choice(copy);
            break;

        case StrategyKind::custom: {
            step.deleted = strategy_.resolver()(graph_, copy);
            if (step.deleted.empty())
                throw std::logic_error("strategy '" + strategy_.name() + "' deleted nothing from an intact copy");
            for (auto v : step.deleted)
                if (! std::binary_search(copy.vertices.begin(), copy.vertices.end(), v))
                    throw std::logic_error("strategy '" + strategy_.name() + "' deleted vertex "
                            + std::to_string(v) + " outside the copy");
            break;
        }
    }

    graph_.delete_vertices(step.deleted);
    step.e_after = state_.e;
    step.d_after = state_.d;
    check_counters(step);
    trace_.push_back(step);
    return step;
}

// The vertex of `copy` lying in the most induced copies of the full revealed
// graph, destroyed copies included; ties go to the earliest arrival.
VertexSet OnlineRun::greedy_overlap_choice(const InducedCopy & copy) const
{
    std::map<VertexId, std::size_t> counts;
    for (auto v : copy.vertices)
        counts[v] = 0;
    for (auto & other : find_all_copies(graph_, pattern_))
        for (auto v : other.vertices)
            if (auto it = counts.find(v) ; it != counts.end())
                ++it->second;

    VertexId best = copy.vertices.front();
    for (auto v : copy.vertices)
        if (counts[v] > counts[best])
            best = v;
    return { best };
}

void OnlineRun::check_counters(const ResolutionStep & step)
{
    if (strategy_.kind() != StrategyKind::alg_p)
        return;

    auto where = " (step " + std::to_string(trace_.size()) + ")";
    if (! trace_.empty()) {
        const auto & prev = trace_.back();
        if (step.e_after < prev.e_after || step.d_after < prev.d_after)
            violations_.push_back("counter decreased" + where);
        if (prev.kind == StepKind::case1_delete_all && (step.e_after != prev.e_after || step.d_after != prev.d_after))
            violations_.push_back("counters moved after advice was declared incorrect" + where);
    }
    if (step.kind == StepKind::case3_delete_advice1)
        for (auto v : step.deleted)
            if (! graph_.advice(v))
                violations_.push_back("case 3 deleted advice-0 vertex " + std::to_string(v) + where);
    for (auto & v : check_counter_lemmas(step.e_after, step.d_after, state_.p))
        violations_.push_back(v + where);
}

RunReport OnlineRun::finish(std::optional<std::size_t> known_opt) const
{
    RunReport report;
    report.pattern = pattern_.name();
    report.k = pattern_.k();
    report.strategy = strategy_.kind();
    report.strategy_name = strategy_.name();
    report.p = strategy_.p();

    report.deletions_total = graph_.deleted_count();
    if (known_opt)
        report.opt_cost = *known_opt;
    else
        report.opt_cost = min_deletion_set(graph_, pattern_)->cost;

    report.final_e = state_.e;
    report.final_d = state_.d;
    report.advice_declared_incorrect = state_.advice_declared_incorrect;
    for (VertexId v = 0 ; v < graph_.size() ; ++v) {
        if (! graph_.advice(v))
            continue;
        if (graph_.alive(v))
            ++report.alive_advice1;
        else
            ++report.deleted_advice1;
    }
    report.ratio = Rational(static_cast<std::int64_t>(report.deletions_total),
            static_cast<std::int64_t>(std::max<std::size_t>(report.opt_cost, 1)));

    report.invariant_violations = violations_;
    if (! is_h_free(graph_, pattern_))
        report.invariant_violations.push_back("alive graph is not H-free at the end of the run");

    report.trace = trace_;
    report.stream = to_stream(graph_);
    return report;
}

RunReport run_strategy(const RevealStream & stream, const PatternGraph & h, const Strategy & strategy,
        std::optional<std::size_t> known_opt)
{
    validate_stream(stream);
    OnlineRun run(h, strategy);
    std::size_t previously_deleted = 0;
    std::vector<std::string> safety;
    for (auto & r : stream) {
        run.reveal(r.neighbors, r.advice);
        run.settle();
        // settle() only returns once no copy is left; this re-checks it
        if (! is_h_free(run.graph(), h))
            safety.push_back("alive graph not H-free after reveal " + std::to_string(run.graph().size() - 1));
        if (run.graph().deleted_count() < previously_deleted)
            safety.push_back("deleted set shrank");
        previously_deleted = run.graph().deleted_count();
    }
    auto report = run.finish(known_opt);
    report.invariant_violations.insert(report.invariant_violations.end(), safety.begin(), safety.end());
    return report;
}

std::vector<std::string> check_counter_lemmas(std::int64_t e, std::int64_t d, const Rational & p)
{
    std::vector<std::string> violations;
    if (e + d == 0)
        return violations;
    Rational total(e + d);
    if (Rational(e) > p * total + 1)
        violations.push_back("e/(e+d) exceeds p + 1/(e+d): e=" + std::to_string(e) + " d=" + std::to_string(d)
                + " p=" + format_rational(p));
    if (Rational(d) > (Rational(1) - p) * total + 1)
        violations.push_back("d/(e+d) exceeds (1-p) + 1/(e+d): e=" + std::to_string(e) + " d=" + std::to_string(d)
                + " p=" + format_rational(p));
    return violations;
}

std::vector<std::string> check_counter_lemmas(const RunReport & report, const Rational & p)
{
    return check_counter_lemmas(report.final_e, report.final_d, p);
}

std::string to_string(StrategyKind kind)
{
    switch (kind) {
        case StrategyKind::alg_p: return "algp";
        case StrategyKind::naive: return "naive";
        case StrategyKind::alg_one: return "alg1";
        case StrategyKind::greedy_overlap: return "greedy";
        case StrategyKind::custom: return "custom";
    }
    return "?";
}

std::string to_string(StepKind kind)
{
    switch (kind) {
        case StepKind::case1_delete_all: return "case1";
        case StepKind::case2_delete_all: return "case2";
        case StepKind::case3_delete_advice1: return "case3";
        case StepKind::strategy_rule: return "rule";
    }
    return "?";
}

}
