#include "hdel/graph.hpp"
#include "hdel/pattern.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hdel {

VertexId OnlineGraph::add_vertex(std::span<const VertexId> neighbors, bool advice)
{
    auto id = static_cast<VertexId>(adjacency_.size());

    VertexSet sorted(neighbors.begin(), neighbors.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0 ; i < sorted.size() ; ++i) {
        if (sorted[i] >= id)
            throw std::invalid_argument("add_vertex: neighbor " + std::to_string(sorted[i])
                    + " is not revealed (graph has " + std::to_string(id) + " vertices)");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("add_vertex: neighbor " + std::to_string(sorted[i]) + " listed twice");
    }

    // id exceeds every existing index, so appending keeps each list sorted
    for (auto u : sorted)
        adjacency_[u].push_back(id);
    adjacency_.push_back(std::move(sorted));
    deleted_.push_back(0);
    advice_.push_back(advice ? 1 : 0);
    return id;
}

void OnlineGraph::delete_vertices(std::span<const VertexId> s)
{
    VertexSet sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0 ; i < sorted.size() ; ++i) {
        require_revealed(sorted[i]);
        if (deleted_[sorted[i]] || (i > 0 && sorted[i] == sorted[i - 1]))
            throw std::invalid_argument("delete_vertices: vertex " + std::to_string(sorted[i]) + " is already deleted");
    }
    for (auto v : sorted)
        deleted_[v] = 1;
    deleted_count_ += sorted.size();
}

bool OnlineGraph::alive(VertexId v) const
{
    require_revealed(v);
    return ! deleted_[v];
}

bool OnlineGraph::advice(VertexId v) const
{
    require_revealed(v);
    return advice_[v];
}

bool OnlineGraph::adjacent(VertexId u, VertexId v) const
{
    require_revealed(u);
    require_revealed(v);
    const auto & a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    return std::binary_search(a.begin(), a.end(), &a == &adjacency_[u] ? v : u);
}

const VertexSet & OnlineGraph::neighbors(VertexId v) const
{
    require_revealed(v);
    return adjacency_[v];
}

VertexSet OnlineGraph::alive_neighbors(VertexId v) const
{
    require_revealed(v);
    VertexSet result;
    for (auto u : adjacency_[v])
        if (! deleted_[u])
            result.push_back(u);
    return result;
}

VertexSet OnlineGraph::backward_neighbors(VertexId v) const
{
    require_revealed(v);
    const auto & a = adjacency_[v];
    return VertexSet(a.begin(), std::lower_bound(a.begin(), a.end(), v));
}

VertexSet OnlineGraph::alive_vertices() const
{
    VertexSet result;
    for (VertexId v = 0 ; v < adjacency_.size() ; ++v)
        if (! deleted_[v])
            result.push_back(v);
    return result;
}

VertexSet OnlineGraph::deleted_vertices() const
{
    VertexSet result;
    for (VertexId v = 0 ; v < adjacency_.size() ; ++v)
        if (deleted_[v])
            result.push_back(v);
    return result;
}

void OnlineGraph::require_revealed(VertexId v) const
{
    if (v >= adjacency_.size())
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not revealed");
}

PatternGraph::PatternGraph(std::string name, int k, std::vector<std::pair<int, int>> edges) :
    name_(std::move(name)),
    k_(k)
{
    if (k < 2 || k > max_vertices)
        throw std::invalid_argument("pattern '" + name_ + "': k must lie in [2, 8], got " + std::to_string(k));

    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= k || b >= k)
            throw std::invalid_argument("pattern '" + name_ + "': edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("pattern '" + name_ + "': self-loop on " + std::to_string(a));
        if (adjacent(a, b))
            throw std::invalid_argument("pattern '" + name_ + "': duplicate edge "
                    + std::to_string(a) + "-" + std::to_string(b));
        rows_[a] |= 1u << b;
        rows_[b] |= 1u << a;
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());

    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int a = 0 ; a < k ; ++a)
            if ((frontier >> a) & 1u)
                next |= rows_[a];
        frontier = next & ~seen;
        seen |= next;
    }
    if (std::popcount(seen) != k)
        throw std::invalid_argument("pattern '" + name_ + "' is disconnected; only connected patterns are supported");

    traits_ = classify_pattern(*this);
}

int PatternGraph::degree(int a) const
{
    return std::popcount(rows_[a]);
}

}
