#pragma once

#include "hdel/graph.hpp"
#include "hdel/pattern.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hdel {

/// Every function here works offline on the full revealed graph: deletion
/// flags recorded by an online run are ignored.

struct OptResult
{
    VertexSet solution;
    std::size_t cost = 0;
    std::optional<bool> unique;
};

/// Exact minimum deletion set by branch and bound over the copy hypergraph.
/// Returns nullopt when `budget` is given and the optimum exceeds it.
std::optional<OptResult> min_deletion_set(const OnlineGraph & g, const PatternGraph & h,
        std::optional<std::size_t> budget = std::nullopt);

/// Size of a greedily packed set of vertex-disjoint copies (first fit in
/// canonical copy order). Never exceeds the optimum.
std::size_t packing_lower_bound(const OnlineGraph & g, const PatternGraph & h);

/// The lexicographically smallest optimal solution (by sorted vertex tuple).
OptResult lexicographic_optimum(const OnlineGraph & g, const PatternGraph & h);

/// One bit per vertex: 1 exactly on the lexicographically smallest optimum.
std::vector<bool> correct_advice(const OnlineGraph & g, const PatternGraph & h);

enum class Uniqueness { unique, not_unique, undecided };

/// Whether `sol` (a verified optimum) is the only optimum. Small instances are
/// settled by enumerating every vertex set of size |sol|; larger ones by one
/// bounded branch-and-bound run per solution vertex with that vertex
/// forbidden. `undecided` when the node limit is hit.
Uniqueness is_unique_optimum(const OnlineGraph & g, const PatternGraph & h, const VertexSet & sol,
        std::size_t node_limit = 2'000'000);

/// True iff removing `s` from the full revealed graph leaves it H-free.
bool is_solution(const OnlineGraph & g, const PatternGraph & h, const VertexSet & s);

}
