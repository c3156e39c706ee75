#include "hdel/pattern.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

namespace hdel {

namespace {

// Articulation vertices by low-link DFS over the bitmask rows.
bool has_articulation_vertex(const PatternGraph & h)
{
    int k = h.k();
    std::array<int, PatternGraph::max_vertices> disc{}, low{};
    disc.fill(-1);
    int timer = 0;
    bool found = false;

    std::function<void (int, int)> dfs = [&] (int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int w = 0 ; w < k ; ++w) {
            if (! h.adjacent(v, w) || w == parent)
                continue;
            if (disc[w] >= 0) {
                low[v] = std::min(low[v], disc[w]);
                continue;
            }
            ++children;
            dfs(w, v);
            low[v] = std::min(low[v], low[w]);
            if (parent >= 0 && low[w] >= disc[v])
                found = true;
        }
        if (parent < 0 && children > 1)
            found = true;
    };
    dfs(0, -1);
    return found;
}

class CopySearch
{
    public:
        CopySearch(const OnlineGraph & g, const PatternGraph & h, bool include_deleted) :
            g_(g),
            h_(h),
            k_(h.k()),
            included_(g.size()),
            degree_(g.size())
        {
            for (VertexId v = 0 ; v < g.size() ; ++v)
                included_[v] = include_deleted || g.alive(v);
            for (VertexId v = 0 ; v < g.size() ; ++v) {
                if (! included_[v])
                    continue;
                for (auto u : g.neighbors(v))
                    degree_[v] += included_[u];
            }

            // For every root, a BFS order in which each later pattern vertex
            // has an earlier neighbor to draw candidates from.
            for (int root = 0 ; root < k_ ; ++root) {
                auto & order = orders_[root];
                auto & parent = parents_[root];
                std::uint32_t seen = 1u << root;
                order.push_back(root);
                parent.push_back(-1);
                for (std::size_t head = 0 ; head < order.size() ; ++head) {
                    int a = order[head];
                    for (int b = 0 ; b < k_ ; ++b)
                        if (h.adjacent(a, b) && ! ((seen >> b) & 1u)) {
                            seen |= 1u << b;
                            order.push_back(b);
                            parent.push_back(a);
                        }
                }
            }
        }

        std::vector<InducedCopy> run(std::size_t limit)
        {
            std::vector<InducedCopy> result;
            if (limit == 0)
                return result;
            for (VertexId anchor = 0 ; anchor < g_.size() ; ++anchor) {
                if (! included_[anchor])
                    continue;
                found_.clear();
                anchor_ = anchor;
                for (int root = 0 ; root < k_ ; ++root) {
                    if (degree_[anchor] < h_.degree(root))
                        continue;
                    image_.assign(k_, 0);
                    image_[root] = anchor;
                    extend(root, 1);
                }
                for (auto & [vertices, mapping] : found_) {
                    result.push_back(InducedCopy{ vertices, mapping });
                    if (result.size() >= limit)
                        return result;
                }
            }
            return result;
        }

    private:
        void extend(int root, std::size_t pos)
        {
            const auto & order = orders_[root];
            if (pos == order.size()) {
                VertexSet vertices(image_.begin(), image_.end());
                std::sort(vertices.begin(), vertices.end());
                auto [it, inserted] = found_.try_emplace(std::move(vertices), image_);
                if (! inserted && image_ < it->second)
                    it->second = image_;
                return;
            }

            int q = order[pos];
            VertexId from = image_[parents_[root][pos]];
            for (auto c : g_.neighbors(from)) {
                if (c <= anchor_ || ! included_[c] || degree_[c] < h_.degree(q))
                    continue;
                bool ok = true;
                for (std::size_t i = 0 ; i < pos && ok ; ++i) {
                    int r = order[i];
                    if (image_[r] == c || g_.adjacent(c, image_[r]) != h_.adjacent(q, r))
                        ok = false;
                }
                if (! ok)
                    continue;
                image_[q] = c;
                extend(root, pos + 1);
            }
        }

        const OnlineGraph & g_;
        const PatternGraph & h_;
        int k_;
        std::vector<char> included_;
        std::vector<int> degree_;
        std::array<std::vector<int>, PatternGraph::max_vertices> orders_, parents_;
        VertexId anchor_ = 0;
        std::vector<VertexId> image_;
        std::map<VertexSet, std::vector<VertexId>> found_;
};

}

PatternTraits classify_pattern(const PatternGraph & h)
{
    int k = h.k();
    PatternTraits traits;
    for (int a = 0 ; a < k ; ++a)
        for (int b = a + 1 ; b < k ; ++b) {
            std::uint32_t open_a = h.row(a), open_b = h.row(b);
            if (open_a == open_b)
                traits.has_false_twin_pair = true;
            if ((open_a | (1u << a)) == (open_b | (1u << b)))
                traits.has_true_twin_pair = true;
        }

    traits.is_two_connected = k >= 3 && ! has_articulation_vertex(h);

    int max_degree = 0;
    for (int a = 0 ; a < k ; ++a)
        max_degree = std::max(max_degree, h.degree(a));
    traits.is_path = static_cast<int>(h.edges().size()) == k - 1 && max_degree <= 2;
    return traits;
}

std::vector<InducedCopy> find_copies(const OnlineGraph & g, const PatternGraph & h, std::size_t limit)
{
    return CopySearch(g, h, false).run(limit);
}

std::vector<InducedCopy> find_all_copies(const OnlineGraph & g, const PatternGraph & h, std::size_t limit)
{
    return CopySearch(g, h, true).run(limit);
}

bool is_h_free(const OnlineGraph & g, const PatternGraph & h)
{
    return find_copies(g, h, 1).empty();
}

PatternGraph builtin_pattern(std::string_view name)
{
    auto size_suffix = [&] (int lo, int hi) {
        if (name.size() != 2 || name[1] < '0' + lo || name[1] > '0' + hi)
            throw std::invalid_argument("unknown builtin pattern '" + std::string(name) + "'");
        return name[1] - '0';
    };

    std::vector<std::pair<int, int>> edges;
    if (name == "S3")
        return PatternGraph("S3", 4, { { 0, 1 }, { 0, 2 }, { 0, 3 } });

    if (name.starts_with("K")) {
        int k = size_suffix(2, 6);
        for (int a = 0 ; a < k ; ++a)
            for (int b = a + 1 ; b < k ; ++b)
                edges.emplace_back(a, b);
        return PatternGraph(std::string(name), k, std::move(edges));
    }
    if (name.starts_with("C")) {
        int k = size_suffix(4, 6);
        for (int a = 0 ; a < k ; ++a)
            edges.emplace_back(a, (a + 1) % k);
        return PatternGraph(std::string(name), k, std::move(edges));
    }
    if (name.starts_with("P")) {
        int k = size_suffix(2, 6);
        for (int a = 0 ; a + 1 < k ; ++a)
            edges.emplace_back(a, a + 1);
        return PatternGraph(std::string(name), k, std::move(edges));
    }
    throw std::invalid_argument("unknown builtin pattern '" + std::string(name) + "'");
}

std::vector<std::string> builtin_pattern_names()
{
    return { "K2", "K3", "K4", "K5", "K6", "C4", "C5", "C6", "P2", "P3", "P4", "P5", "P6", "S3" };
}

}
