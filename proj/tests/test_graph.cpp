#include "hdel/graph.hpp"
#include "hdel/rational.hpp"

#include <doctest.h>

using namespace hdel;

namespace {

OnlineGraph triangle()
{
    OnlineGraph g;
    g.add_vertex(VertexSet{}, false);
    g.add_vertex(VertexSet{ 0 }, false);
    g.add_vertex(VertexSet{ 0, 1 }, false);
    return g;
}

}

TEST_CASE("add_vertex assigns dense arrival indices")
{
    OnlineGraph g;
    CHECK(g.add_vertex(VertexSet{}, false) == 0);
    CHECK(g.add_vertex(VertexSet{}, false) == 1);
    auto v = g.add_vertex(VertexSet{ 0, 1 }, true);
    CHECK(v == 2);
    CHECK(g.neighbors(v).size() == 2);
    CHECK(g.advice(v));
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("add_vertex rejects unrevealed and repeated neighbors")
{
    auto g = triangle();
    CHECK_THROWS_AS(g.add_vertex(VertexSet{ 5 }, false), std::invalid_argument);
    CHECK_THROWS_AS(g.add_vertex(VertexSet{ 1, 1 }, false), std::invalid_argument);
    CHECK(g.size() == 3);
}

TEST_CASE("delete_vertices is monotone and atomic")
{
    auto g = triangle();
    g.delete_vertices(VertexSet{ 0 });
    CHECK(g.alive_vertices() == VertexSet{ 1, 2 });
    g.delete_vertices(VertexSet{});
    CHECK(g.deleted_count() == 1);
    CHECK_THROWS_AS(g.delete_vertices(VertexSet{ 0 }), std::invalid_argument);
    CHECK_THROWS_AS(g.delete_vertices(VertexSet{ 1, 7 }), std::invalid_argument);
    CHECK(g.alive(1));
    CHECK(g.deleted_vertices() == VertexSet{ 0 });
}

TEST_CASE("alive_neighbors")
{
    auto g = triangle();
    CHECK(g.alive_neighbors(0) == VertexSet{ 1, 2 });
    g.delete_vertices(VertexSet{ 1 });
    CHECK(g.alive_neighbors(0) == VertexSet{ 2 });
    CHECK(g.neighbors(0) == VertexSet{ 1, 2 });
    auto iso = g.add_vertex(VertexSet{}, false);
    CHECK(g.alive_neighbors(iso).empty());
    CHECK(g.backward_neighbors(2) == VertexSet{ 0, 1 });
    CHECK(g.backward_neighbors(0).empty());
}

TEST_CASE("PatternGraph validation")
{
    CHECK_THROWS_AS(PatternGraph("x", 3, { { 0, 1 } }), std::invalid_argument);
    CHECK_THROWS_AS(PatternGraph("x", 2, { { 0, 0 } }), std::invalid_argument);
    CHECK_THROWS_AS(PatternGraph("x", 2, { { 0, 1 }, { 1, 0 } }), std::invalid_argument);
    CHECK_THROWS_AS(PatternGraph("x", 2, { { 0, 2 } }), std::invalid_argument);
    CHECK_THROWS_AS(PatternGraph("x", 1, {}), std::invalid_argument);
    PatternGraph p("p3", 3, { { 1, 2 }, { 0, 1 } });
    CHECK(p.degree(1) == 2);
    CHECK(p.edges().front() == std::pair{ 0, 1 });
}

TEST_CASE("rational parsing and formatting")
{
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("2") == Rational(2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(format_rational(Rational(7, 4)) == "7/4");
    CHECK(format_rational(Rational(3)) == "3");
    CHECK(format_decimal(Rational(1, 3)) == "0.333333");
}
