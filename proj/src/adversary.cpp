#include "hdel/adversary.hpp"
#include "hdel/exact.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace hdel {

namespace {

bool draw(std::mt19937_64 & rng, const Rational & prob)
{
    auto num = static_cast<std::uint64_t>(prob.numerator());
    auto den = static_cast<std::uint64_t>(prob.denominator());
    return rng() % den < num;
}

class ChainDriver
{
    public:
        ChainDriver(const PatternGraph & h, GadgetMode mode, const Strategy & strategy, ChainKind kind,
                AdviceRule rule, std::size_t budget) :
            h_(h),
            mode_(mode),
            kind_(kind),
            rule_(rule),
            budget_(budget),
            run_(h, strategy)
        {
        }

        DuelResult play(std::size_t m)
        {
            DuelResult result;
            std::optional<VertexId> seed;
            for (std::size_t i = 0 ; i < m ; ++i) {
                bool finished = play_gadget(seed);
                if (! finished) {
                    result.unbounded = true;
                    break;
                }
                seed = next_seed();
            }

            result.graph = run_.graph();
            result.tape.provenance = AdviceProvenance::class_label;
            for (VertexId v = 0 ; v < result.graph.size() ; ++v)
                result.tape.bits.push_back(result.graph.advice(v));
            result.report = run_.finish();
            result.gadgets = gadgets_;
            result.violations = violations_;
            return result;
        }

    private:
        // Returns false when the reveal budget ran out before designation.
        bool play_gadget(std::optional<VertexId> seed)
        {
            int k = h_.k();
            GadgetState state;
            state.mode = mode_;
            state.classes.assign(k, {});
            state.originals.assign(k, 0);
            state.reveal_budget = budget_;

            join_.clear();
            if (kind_ == ChainKind::complete_join) {
                std::set<VertexId> earlier;
                for (auto & g : gadgets_)
                    for (auto v : g.members())
                        earlier.insert(v);
                if (seed)
                    earlier.erase(*seed);
                join_.assign(earlier.begin(), earlier.end());
            }

            gadgets_.push_back(std::move(state));
            auto & st = gadgets_.back();

            std::deque<VertexId> pending;
            auto absorb = [&] (const VertexSet & deleted) {
                pending.insert(pending.end(), deleted.begin(), deleted.end());
                check_classes();
            };

            int first = 0;
            if (seed) {
                st.classes[0].push_back(*seed);
                st.originals[0] = *seed;
                first = 1;
            }
            for (int j = first ; j < k ; ++j) {
                st.originals[j] = reveal_in_class(j);
                absorb(run_.settle());
            }

            int originals_remaining = k;
            while (true) {
                if (pending.empty())
                    throw std::logic_error("gadget stalled: no deletion to answer and no class designated");
                auto v = pending.front();
                pending.pop_front();
                int j = st.class_of(v);
                if (j < 0)
                    continue;
                if (v == st.originals[j] && --originals_remaining == 0) {
                    st.designated_class = j;
                    break;
                }
                if (st.reveals_used >= st.reveal_budget) {
                    st.unbounded = true;
                    return false;
                }
                reveal_in_class(j);
                absorb(run_.settle());
            }

            check_blow_up(st);
            return true;
        }

        VertexId reveal_in_class(int j)
        {
            auto & st = gadgets_.back();
            VertexSet neighbors = join_;
            for (int c = 0 ; c < h_.k() ; ++c)
                if (h_.adjacent(j, c) || (c == j && mode_ == GadgetMode::true_twin))
                    neighbors.insert(neighbors.end(), st.classes[c].begin(), st.classes[c].end());
            bool advice = rule_ == AdviceRule::class1_gets_one && j == 0;
            auto v = run_.reveal(neighbors, advice);
            st.classes[j].push_back(v);
            ++st.reveals_used;
            return v;
        }

        // An alive advice-1 vertex of the finished gadget carries over.
        std::optional<VertexId> next_seed() const
        {
            if (kind_ == ChainKind::disjoint)
                return std::nullopt;
            const auto & st = gadgets_.back();
            for (auto v : st.classes[0])
                if (run_.graph().alive(v) && run_.graph().advice(v))
                    return v;
            return std::nullopt;
        }

        void check_classes()
        {
            const auto & st = gadgets_.back();
            for (std::size_t j = 0 ; j < st.classes.size() ; ++j) {
                auto alive = std::count_if(st.classes[j].begin(), st.classes[j].end(),
                        [&] (VertexId v) { return run_.graph().alive(v); });
                if (alive > 1)
                    violations_.push_back("gadget " + std::to_string(gadgets_.size() - 1) + ": class "
                            + std::to_string(j) + " has " + std::to_string(alive) + " alive vertices");
            }
        }

        void check_blow_up(const GadgetState & st)
        {
            const auto & g = run_.graph();
            for (std::size_t a = 0 ; a < st.classes.size() ; ++a)
                for (std::size_t b = a ; b < st.classes.size() ; ++b) {
                    bool want = a == b ? mode_ == GadgetMode::true_twin : h_.adjacent(a, b);
                    for (auto u : st.classes[a])
                        for (auto v : st.classes[b])
                            if (u != v && g.adjacent(u, v) != want)
                                violations_.push_back("gadget " + std::to_string(gadgets_.size() - 1)
                                        + ": vertices " + std::to_string(u) + " and " + std::to_string(v)
                                        + " break the blow-up shape");
                }
        }

        const PatternGraph & h_;
        GadgetMode mode_;
        ChainKind kind_;
        AdviceRule rule_;
        std::size_t budget_;
        OnlineRun run_;
        std::vector<GadgetState> gadgets_;
        VertexSet join_;
        std::vector<std::string> violations_;
};

}

int GadgetState::class_of(VertexId v) const
{
    for (std::size_t j = 0 ; j < classes.size() ; ++j)
        if (std::find(classes[j].begin(), classes[j].end(), v) != classes[j].end())
            return static_cast<int>(j);
    return -1;
}

VertexSet GadgetState::members() const
{
    VertexSet all;
    for (auto & c : classes)
        all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return all;
}

void require_mode_valid(const PatternGraph & h, GadgetMode mode)
{
    const auto & t = h.traits();
    if (mode == GadgetMode::false_twin && t.has_false_twin_pair)
        throw std::invalid_argument("false-twin gadget needs a pattern without false twins; '" + h.name() + "' has them");
    if (mode == GadgetMode::true_twin && t.has_true_twin_pair)
        throw std::invalid_argument("true-twin gadget needs a pattern without true twins; '" + h.name() + "' has them");
}

DuelResult gadget_duel(const PatternGraph & h, GadgetMode mode, const Strategy & strategy, std::size_t budget,
        AdviceRule advice_rule)
{
    return chain_duel(h, ChainConfig{ 1, ChainKind::disjoint, advice_rule }, mode, strategy, budget);
}

DuelResult chain_duel(const PatternGraph & h, const ChainConfig & cfg, GadgetMode mode, const Strategy & strategy,
        std::size_t budget)
{
    require_mode_valid(h, mode);
    if (cfg.m < 1)
        throw std::invalid_argument("chain needs at least one gadget");
    if (budget < static_cast<std::size_t>(h.k()))
        throw std::invalid_argument("reveal budget " + std::to_string(budget) + " is smaller than k = "
                + std::to_string(h.k()));
    const auto & t = h.traits();
    if (cfg.kind == ChainKind::shared_advice1_vertex && ! t.is_two_connected)
        throw std::invalid_argument("shared-vertex chain needs a 2-connected pattern; '" + h.name() + "' is not");
    if (cfg.kind == ChainKind::complete_join && ! (t.is_path && h.k() >= 5))
        throw std::invalid_argument("complete-join chain needs a path with at least 5 vertices; got '" + h.name() + "'");

    ChainDriver driver(h, mode, strategy, cfg.kind, cfg.advice_rule, budget);
    return driver.play(cfg.m);
}

Expansion expand_to_correct(const OnlineGraph & g, const AdviceTape & tape, const PatternGraph & h)
{
    auto stream = with_advice(to_stream(g), tape.bits);
    Expansion out;
    out.graph = replay_graph(stream);

    for (auto & copy : find_all_copies(out.graph, h))
        if (std::none_of(copy.vertices.begin(), copy.vertices.end(), [&] (VertexId v) { return tape.bits[v]; })) {
            std::string listed;
            for (auto v : copy.vertices)
                listed += (listed.empty() ? "" : ",") + std::to_string(v);
            throw ExpansionError("copy {" + listed + "} has no advice-1 vertex", copy);
        }

    int k = h.k();
    for (VertexId v = 0 ; v < g.size() ; ++v) {
        if (! tape.bits[v])
            continue;
        for (int round = 0 ; round < 2 ; ++round) {
            std::vector<VertexId> image(k);
            image[0] = v;
            for (int j = 1 ; j < k ; ++j) {
                VertexSet neighbors;
                for (int i = 0 ; i < j ; ++i)
                    if (h.adjacent(i, j))
                        neighbors.push_back(image[i]);
                image[j] = out.graph.add_vertex(neighbors, false);
            }
        }
    }

    out.tape.bits = tape.bits;
    out.tape.bits.resize(out.graph.size(), false);
    out.tape.provenance = AdviceProvenance::correct;
    return out;
}

CorruptionScheme CorruptionScheme::flip_each(Rational prob)
{
    if (prob < Rational(0) || prob > Rational(1))
        throw std::invalid_argument("flip probability must lie in [0, 1], got " + format_rational(prob));
    return { Kind::flip_each, prob };
}

std::string CorruptionScheme::name() const
{
    switch (kind) {
        case Kind::flip_each: return "flip:" + format_rational(prob);
        case Kind::all_zeros: return "zeros";
        case Kind::all_ones: return "ones";
        case Kind::shift_to_class_label: return "shift";
    }
    return "?";
}

AdviceTape corrupt_advice(const AdviceTape & tape, const CorruptionScheme & scheme, std::uint64_t seed)
{
    AdviceTape out;
    out.provenance = AdviceProvenance::corrupted;
    auto n = tape.bits.size();
    switch (scheme.kind) {
        case CorruptionScheme::Kind::flip_each: {
            std::mt19937_64 rng(seed);
            out.bits = tape.bits;
            for (std::size_t t = 0 ; t < n ; ++t)
                if (draw(rng, scheme.prob))
                    out.bits[t] = ! out.bits[t];
            break;
        }
        case CorruptionScheme::Kind::all_zeros:
            out.bits.assign(n, false);
            break;
        case CorruptionScheme::Kind::all_ones:
            out.bits.assign(n, true);
            break;
        case CorruptionScheme::Kind::shift_to_class_label:
            out.bits.assign(n, false);
            for (std::size_t t = 0 ; t < n ; ++t)
                if (tape.bits[t])
                    out.bits[(t + 1) % n] = true;
            break;
    }
    return out;
}

RevealStream random_stream(std::size_t n, const Rational & edge_prob, std::uint64_t seed)
{
    if (edge_prob < Rational(0) || edge_prob > Rational(1))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    RevealStream stream(n);
    for (std::size_t t = 0 ; t < n ; ++t)
        for (VertexId u = 0 ; u < t ; ++u)
            if (draw(rng, edge_prob))
                stream[t].neighbors.push_back(u);
    return stream;
}

std::string to_string(GadgetMode mode)
{
    return mode == GadgetMode::false_twin ? "false-twin" : "true-twin";
}

std::string to_string(ChainKind kind)
{
    switch (kind) {
        case ChainKind::disjoint: return "disjoint";
        case ChainKind::shared_advice1_vertex: return "shared";
        case ChainKind::complete_join: return "join";
    }
    return "?";
}

std::string to_string(AdviceProvenance provenance)
{
    switch (provenance) {
        case AdviceProvenance::correct: return "correct";
        case AdviceProvenance::class_label: return "class-label";
        case AdviceProvenance::corrupted: return "corrupted";
    }
    return "?";
}

}
