#pragma once

#include "hdel/graph.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace hdel {

/// A vertex set inducing a copy of H. `mapping[j]` is the image of pattern
/// vertex j; among all isomorphisms onto `vertices` the lexicographically
/// least mapping is kept.
struct InducedCopy
{
    VertexSet vertices;
    std::vector<VertexId> mapping;

    bool operator==(const InducedCopy &) const = default;
};

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

/// Twin pairs, 2-connectivity (K2 counts as not 2-connected) and whether H is
/// a path. PatternGraph already rejects disconnected input.
PatternTraits classify_pattern(const PatternGraph & h);

/// Induced copies of H among alive vertices, one per vertex set, ordered
/// lexicographically by sorted vertex tuple, at most `limit` of them.
std::vector<InducedCopy> find_copies(const OnlineGraph & g, const PatternGraph & h, std::size_t limit = unlimited);

/// Same as find_copies but over the full revealed graph, deleted vertices
/// included. This is the offline view used for OPT.
std::vector<InducedCopy> find_all_copies(const OnlineGraph & g, const PatternGraph & h, std::size_t limit = unlimited);

bool is_h_free(const OnlineGraph & g, const PatternGraph & h);

/// K2..K6, C4..C6, P2..P6 and S3 (star with three leaves).
PatternGraph builtin_pattern(std::string_view name);
std::vector<std::string> builtin_pattern_names();

}
