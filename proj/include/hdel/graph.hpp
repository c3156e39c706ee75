#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hdel {

/// 0-based arrival index of a revealed vertex.
using VertexId = std::uint32_t;

/// Vertex sets are always kept sorted ascending by arrival index.
using VertexSet = std::vector<VertexId>;

/// Arrival-ordered graph with irrevocable deletions and one advice bit per
/// vertex. Edges to deleted vertices are stored: the offline optimum is
/// evaluated on the full revealed graph.
class OnlineGraph
{
    public:
        OnlineGraph() = default;

        /// Reveals a new vertex adjacent to `neighbors` (revealed, possibly
        /// deleted). Returns its arrival index. Throws std::invalid_argument if
        /// a neighbor is unrevealed or listed twice.
        VertexId add_vertex(std::span<const VertexId> neighbors, bool advice);

        /// Deletes every vertex in `s`. Atomic: either all are deleted or
        /// std::invalid_argument is thrown and the graph is unchanged.
        void delete_vertices(std::span<const VertexId> s);

        std::size_t size() const { return adjacency_.size(); }
        bool revealed(VertexId v) const { return v < adjacency_.size(); }
        bool alive(VertexId v) const;
        bool advice(VertexId v) const;
        bool adjacent(VertexId u, VertexId v) const;

        /// All neighbors, alive or deleted.
        const VertexSet & neighbors(VertexId v) const;
        VertexSet alive_neighbors(VertexId v) const;
        /// Neighbors that arrived before `v`; what the reveal step listed.
        VertexSet backward_neighbors(VertexId v) const;

        VertexSet alive_vertices() const;
        VertexSet deleted_vertices() const;
        std::size_t deleted_count() const { return deleted_count_; }

    private:
        void require_revealed(VertexId v) const;

        std::vector<VertexSet> adjacency_;
        std::vector<std::uint8_t> deleted_;
        std::vector<std::uint8_t> advice_;
        std::size_t deleted_count_ = 0;
};

struct PatternTraits
{
    bool has_true_twin_pair = false;
    bool has_false_twin_pair = false;
    bool is_two_connected = false;
    bool is_path = false;

    bool operator==(const PatternTraits &) const = default;
};

/// The forbidden connected pattern H on vertices 0..k-1.
class PatternGraph
{
    public:
        static constexpr int max_vertices = 8;

        /// Throws std::invalid_argument unless 2 <= k <= 8, edges are simple
        /// and in range, and the graph is connected.
        PatternGraph(std::string name, int k, std::vector<std::pair<int, int>> edges);

        const std::string & name() const { return name_; }
        int k() const { return k_; }
        bool adjacent(int a, int b) const { return (rows_[a] >> b) & 1u; }
        int degree(int a) const;
        std::uint32_t row(int a) const { return rows_[a]; }
        /// Edges (a, b) with a < b, sorted.
        const std::vector<std::pair<int, int>> & edges() const { return edges_; }
        const PatternTraits & traits() const { return traits_; }

    private:
        std::string name_;
        int k_;
        std::array<std::uint32_t, max_vertices> rows_{};
        std::vector<std::pair<int, int>> edges_;
        PatternTraits traits_;
};

}
