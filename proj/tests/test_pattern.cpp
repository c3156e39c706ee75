#include "hdel/pattern.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hdel;

namespace {

OnlineGraph from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges)
{
    OnlineGraph g;
    for (VertexId v = 0 ; v < n ; ++v) {
        VertexSet nb;
        for (auto [a, b] : edges) {
            if (b == v && a < v)
                nb.push_back(a);
            if (a == v && b < v)
                nb.push_back(b);
        }
        std::sort(nb.begin(), nb.end());
        g.add_vertex(nb, false);
    }
    return g;
}

}

TEST_CASE("classify_pattern on hand examples")
{
    auto k3 = builtin_pattern("K3").traits();
    CHECK(k3.has_true_twin_pair);
    CHECK_FALSE(k3.has_false_twin_pair);
    CHECK(k3.is_two_connected);

    auto p3 = builtin_pattern("P3").traits();
    CHECK(p3.has_false_twin_pair);
    CHECK_FALSE(p3.has_true_twin_pair);
    CHECK_FALSE(p3.is_two_connected);
    CHECK(p3.is_path);

    auto c4 = builtin_pattern("C4").traits();
    CHECK(c4.has_false_twin_pair);
    CHECK_FALSE(c4.has_true_twin_pair);
    CHECK(c4.is_two_connected);
}

TEST_CASE("classify_pattern agrees with the definitions on every builtin")
{
    for (auto & name : builtin_pattern_names()) {
        CAPTURE(name);
        auto h = builtin_pattern(name);
        CHECK(h.traits().has_true_twin_pair == oracle::has_twins(h, true));
        CHECK(h.traits().has_false_twin_pair == oracle::has_twins(h, false));
        CHECK(h.traits().is_two_connected == oracle::two_connected(h));
        CHECK(h.traits().is_path == oracle::is_path(h));
    }
}

TEST_CASE("disconnected and unknown patterns are rejected")
{
    CHECK_THROWS_AS(PatternGraph("2K2", 4, { { 0, 1 }, { 2, 3 } }), std::invalid_argument);
    CHECK_THROWS_AS(builtin_pattern("K9"), std::invalid_argument);
}

TEST_CASE("find_copies examples")
{
    auto tri = from_edges(3, { { 0, 1 }, { 0, 2 }, { 1, 2 } });
    auto found = find_copies(tri, builtin_pattern("K3"));
    REQUIRE(found.size() == 1);
    CHECK(found[0].vertices == VertexSet{ 0, 1, 2 });

    auto k4 = from_edges(4, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } });
    CHECK(find_copies(k4, builtin_pattern("C4")).empty());

    auto path = from_edges(4, { { 0, 1 }, { 1, 2 }, { 2, 3 } });
    auto p3 = find_copies(path, builtin_pattern("P3"));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].vertices == VertexSet{ 0, 1, 2 });
    CHECK(p3[1].vertices == VertexSet{ 1, 2, 3 });
    CHECK(find_copies(path, builtin_pattern("P3"), 1).size() == 1);
}

TEST_CASE("is_h_free examples")
{
    CHECK(is_h_free(from_edges(5, {}), builtin_pattern("K2")));
    auto tri = from_edges(3, { { 0, 1 }, { 0, 2 }, { 1, 2 } });
    CHECK_FALSE(is_h_free(tri, builtin_pattern("K3")));
    auto k4 = from_edges(4, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } });
    k4.delete_vertices(VertexSet{ 0, 1 });
    CHECK(is_h_free(k4, builtin_pattern("K3")));
}

TEST_CASE("find_copies matches subset enumeration, alive and full views")
{
    std::mt19937_64 rng(20);
    std::vector<std::string> names{ "K3", "C4", "P4", "S3", "C5" };
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto g = oracle::random_graph(8, 0.5, rng);
        if (trial % 2)
            g.delete_vertices(VertexSet{ 1, 4 });
        for (auto & name : names) {
            auto h = builtin_pattern(name);
            CHECK(find_copies(g, h) == oracle::copies(g, h, false));
            CHECK(find_all_copies(g, h) == oracle::copies(g, h, true));
        }
    }
}
