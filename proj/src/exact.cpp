#include "hdel/exact.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hdel {

namespace {

constexpr std::size_t no_bound = std::numeric_limits<std::size_t>::max();

// Minimum hitting set over the induced copies of the full graph. Copies of
// G - S are exactly the copies of G disjoint from S, so the hypergraph is
// built once and every node of the search only updates hit counters.
class HittingSetSolver
{
    public:
        HittingSetSolver(std::vector<VertexSet> copies, std::size_t n) :
            copies_(std::move(copies)),
            incidence_(n),
            chosen_(n, 0),
            forbidden_(n, 0),
            stamp_(n, 0),
            hits_(copies_.size(), 0)
        {
            for (std::size_t c = 0 ; c < copies_.size() ; ++c)
                for (auto v : copies_[c])
                    incidence_[v].push_back(c);
        }

        struct Outcome
        {
            std::optional<VertexSet> best;
            bool aborted = false;
        };

        // Smallest hitting set of size < cutoff that contains `forced` and
        // avoids `forbidden`, or nullopt if there is none.
        Outcome solve(const VertexSet & forced, const VertexSet & forbidden, std::size_t cutoff,
                std::size_t node_limit = no_bound)
        {
            reset();
            for (auto v : forbidden)
                forbidden_[v] = 1;
            for (auto v : forced) {
                if (forbidden_[v])
                    return {};
                choose(v);
            }

            for (auto v : dominated())
                forbidden_[v] = 1;

            best_.reset();
            best_size_ = cutoff;
            nodes_ = 0;
            node_limit_ = node_limit;
            aborted_ = false;

            if (auto greedy = greedy_solution() ; greedy && greedy->size() < best_size_) {
                best_size_ = greedy->size();
                best_ = std::move(greedy);
            }
            search();

            Outcome outcome{ std::move(best_), aborted_ };
            if (outcome.best)
                std::sort(outcome.best->begin(), outcome.best->end());
            return outcome;
        }

        std::size_t packing_bound()
        {
            reset();
            auto lb = lower_bound();
            return lb;
        }

    private:
        void reset()
        {
            std::fill(chosen_.begin(), chosen_.end(), 0);
            std::fill(forbidden_.begin(), forbidden_.end(), 0);
            std::fill(hits_.begin(), hits_.end(), 0);
            path_.clear();
        }

        void choose(VertexId v)
        {
            chosen_[v] = 1;
            path_.push_back(v);
            for (auto c : incidence_[v])
                ++hits_[c];
        }

        void unchoose(VertexId v)
        {
            chosen_[v] = 0;
            path_.pop_back();
            for (auto c : incidence_[v])
                --hits_[c];
        }

        std::size_t unhit_degree(VertexId v) const
        {
            std::size_t d = 0;
            for (auto c : incidence_[v])
                d += hits_[c] == 0;
            return d;
        }

        std::optional<std::size_t> first_unhit() const
        {
            for (std::size_t c = 0 ; c < copies_.size() ; ++c)
                if (hits_[c] == 0)
                    return c;
            return std::nullopt;
        }

        // The unhit copy with the fewest deletable vertices, first on ties.
        std::optional<std::size_t> branching_copy() const
        {
            std::optional<std::size_t> best;
            std::size_t fewest = no_bound;
            for (std::size_t c = 0 ; c < copies_.size() ; ++c) {
                if (hits_[c])
                    continue;
                std::size_t open = 0;
                for (auto v : copies_[c])
                    open += ! forbidden_[v];
                if (open < fewest) {
                    fewest = open;
                    best = c;
                    if (open <= 1)
                        break;
                }
            }
            return best;
        }

        // Vertices that may be left out without losing any solution size: u is
        // dominated by an allowed v when every unhit copy through u also runs
        // through v (ties broken towards the smaller id). Swapping u for v in
        // a solution keeps it valid and no larger.
        VertexSet dominated() const
        {
            auto unhit = [&] (VertexId v) {
                std::vector<std::size_t> list;
                for (auto c : incidence_[v])
                    if (! hits_[c])
                        list.push_back(c);
                return list;
            };
            std::vector<std::vector<std::size_t>> open(incidence_.size());
            for (VertexId v = 0 ; v < incidence_.size() ; ++v)
                if (! chosen_[v] && ! forbidden_[v])
                    open[v] = unhit(v);

            VertexSet out;
            for (VertexId u = 0 ; u < incidence_.size() ; ++u) {
                if (chosen_[u] || forbidden_[u])
                    continue;
                if (open[u].empty()) {
                    out.push_back(u);
                    continue;
                }
                for (auto v : copies_[open[u].front()]) {
                    if (v == u || chosen_[v] || forbidden_[v])
                        continue;
                    if (open[v].size() < open[u].size() || (open[v].size() == open[u].size() && v > u))
                        continue;
                    if (std::includes(open[v].begin(), open[v].end(), open[u].begin(), open[u].end())) {
                        out.push_back(u);
                        break;
                    }
                }
            }
            return out;
        }

        // Disjoint unhit copies packed first-fit in canonical order. Vertices
        // that may not be deleted do not count as shared. no_bound when some
        // copy cannot be hit at all.
        std::size_t lower_bound()
        {
            ++current_stamp_;
            std::size_t count = 0;
            for (std::size_t c = 0 ; c < copies_.size() ; ++c) {
                if (hits_[c])
                    continue;
                bool free = true, hittable = false;
                for (auto v : copies_[c]) {
                    if (forbidden_[v])
                        continue;
                    hittable = true;
                    if (stamp_[v] == current_stamp_)
                        free = false;
                }
                if (! hittable)
                    return no_bound;
                if (! free)
                    continue;
                ++count;
                for (auto v : copies_[c])
                    stamp_[v] = current_stamp_;
            }
            return count;
        }

        VertexSet ordered_candidates(std::size_t copy) const
        {
            VertexSet candidates;
            for (auto v : copies_[copy])
                if (! forbidden_[v])
                    candidates.push_back(v);
            std::vector<std::pair<std::size_t, VertexId>> keyed;
            for (auto v : candidates)
                keyed.emplace_back(unhit_degree(v), v);
            std::sort(keyed.begin(), keyed.end(), [] (const auto & a, const auto & b) {
                    return a.first != b.first ? a.first > b.first : a.second < b.second; });
            for (std::size_t i = 0 ; i < keyed.size() ; ++i)
                candidates[i] = keyed[i].second;
            return candidates;
        }

        std::optional<VertexSet> greedy_solution()
        {
            auto saved = path_;
            std::optional<VertexSet> result;
            VertexSet added;
            while (true) {
                auto c = first_unhit();
                if (! c) {
                    result = path_;
                    break;
                }
                auto candidates = ordered_candidates(*c);
                if (candidates.empty())
                    break;
                choose(candidates.front());
                added.push_back(candidates.front());
            }
            for (auto it = added.rbegin() ; it != added.rend() ; ++it)
                unchoose(*it);
            return result;
        }

        void search()
        {
            if (aborted_)
                return;
            if (++nodes_ > node_limit_) {
                aborted_ = true;
                return;
            }

            auto c = branching_copy();
            if (! c) {
                if (path_.size() < best_size_) {
                    best_size_ = path_.size();
                    best_ = path_;
                }
                return;
            }

            auto lb = lower_bound();
            if (lb == no_bound || path_.size() + lb >= best_size_)
                return;

            // branch i takes candidate i and rules out candidates 0..i-1
            VertexSet excluded;
            for (auto v : ordered_candidates(*c)) {
                choose(v);
                search();
                unchoose(v);
                if (aborted_)
                    break;
                forbidden_[v] = 1;
                excluded.push_back(v);
            }
            for (auto v : excluded)
                forbidden_[v] = 0;
        }

        std::vector<VertexSet> copies_;
        std::vector<std::vector<std::size_t>> incidence_;
        std::vector<char> chosen_, forbidden_;
        std::vector<std::size_t> stamp_;
        std::size_t current_stamp_ = 0;
        std::vector<std::size_t> hits_;
        VertexSet path_;

        std::optional<VertexSet> best_;
        std::size_t best_size_ = no_bound;
        std::size_t nodes_ = 0, node_limit_ = no_bound;
        bool aborted_ = false;
};

std::vector<VertexSet> copy_sets(const OnlineGraph & g, const PatternGraph & h)
{
    std::vector<VertexSet> sets;
    for (auto & copy : find_all_copies(g, h))
        sets.push_back(std::move(copy.vertices));
    return sets;
}

// C(n, r), saturating at `cap`.
std::size_t binomial_capped(std::size_t n, std::size_t r, std::size_t cap)
{
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    long double value = 1;
    for (std::size_t i = 1 ; i <= r ; ++i) {
        value = value * static_cast<long double>(n - r + i) / static_cast<long double>(i);
        if (value > static_cast<long double>(cap))
            return cap;
    }
    return static_cast<std::size_t>(value + 0.5L);
}

}

std::optional<OptResult> min_deletion_set(const OnlineGraph & g, const PatternGraph & h,
        std::optional<std::size_t> budget)
{
    auto copies = copy_sets(g, h);
    if (copies.empty())
        return OptResult{};

    HittingSetSolver solver(copies, g.size());
    std::size_t cutoff = budget ? *budget + 1 : g.size() + 1;
    auto outcome = solver.solve({}, {}, cutoff);
    if (! outcome.best)
        return std::nullopt;

    OptResult result;
    result.cost = outcome.best->size();
    result.solution = std::move(*outcome.best);
    if (solver.packing_bound() > result.cost)
        throw std::logic_error("min_deletion_set: packing lower bound exceeds the optimum");
    return result;
}

std::size_t packing_lower_bound(const OnlineGraph & g, const PatternGraph & h)
{
    HittingSetSolver solver(copy_sets(g, h), g.size());
    return solver.packing_bound();
}

OptResult lexicographic_optimum(const OnlineGraph & g, const PatternGraph & h)
{
    auto copies = copy_sets(g, h);
    if (copies.empty())
        return OptResult{};

    HittingSetSolver solver(copies, g.size());
    auto optimum = solver.solve({}, {}, g.size() + 1).best;
    std::size_t cost = optimum->size();

    std::vector<char> in_some_copy(g.size(), 0);
    for (auto & c : copies)
        for (auto v : c)
            in_some_copy[v] = 1;

    // Greedily fix the smallest possible next element; vertices passed over
    // are forbidden from then on.
    VertexSet forced, forbidden;
    for (VertexId v = 0 ; v < g.size() && forced.size() < cost ; ++v) {
        if (! in_some_copy[v]) {
            forbidden.push_back(v);
            continue;
        }
        forced.push_back(v);
        if (! solver.solve(forced, forbidden, cost + 1).best) {
            forced.pop_back();
            forbidden.push_back(v);
        }
    }

    OptResult result;
    result.cost = cost;
    result.solution = std::move(forced);
    return result;
}

std::vector<bool> correct_advice(const OnlineGraph & g, const PatternGraph & h)
{
    std::vector<bool> tape(g.size(), false);
    for (auto v : lexicographic_optimum(g, h).solution)
        tape[v] = true;
    return tape;
}

Uniqueness is_unique_optimum(const OnlineGraph & g, const PatternGraph & h, const VertexSet & sol,
        std::size_t node_limit)
{
    auto copies = copy_sets(g, h);
    std::size_t n = g.size(), c = sol.size();

    constexpr std::size_t enumeration_cap = 200'000;
    if (binomial_capped(n, c, enumeration_cap) < enumeration_cap) {
        std::vector<char> in(n, 0);
        std::vector<std::size_t> idx(c);
        for (std::size_t i = 0 ; i < c ; ++i)
            idx[i] = i;
        std::size_t solutions = 0;
        while (true) {
            for (auto i : idx)
                in[i] = 1;
            bool hits_all = std::all_of(copies.begin(), copies.end(), [&] (const VertexSet & copy) {
                    return std::any_of(copy.begin(), copy.end(), [&] (VertexId v) { return in[v]; }); });
            for (auto i : idx)
                in[i] = 0;
            if (hits_all && ++solutions > 1)
                return Uniqueness::not_unique;

            std::size_t i = c;
            while (i > 0 && idx[i - 1] == n - c + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i ; j < c ; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        return Uniqueness::unique;
    }

    // Any other optimum misses some vertex of `sol`.
    HittingSetSolver solver(copies, n);
    for (auto v : sol) {
        auto outcome = solver.solve({}, { v }, c + 1, node_limit);
        if (outcome.best)
            return Uniqueness::not_unique;
        if (outcome.aborted)
            return Uniqueness::undecided;
    }
    return Uniqueness::unique;
}

bool is_solution(const OnlineGraph & g, const PatternGraph & h, const VertexSet & s)
{
    std::vector<char> in(g.size(), 0);
    for (auto v : s)
        in.at(v) = 1;
    for (auto & copy : find_all_copies(g, h))
        if (std::none_of(copy.vertices.begin(), copy.vertices.end(), [&] (VertexId v) { return in[v]; }))
            return false;
    return true;
}

}
