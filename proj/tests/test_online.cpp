#include "hdel/adversary.hpp"
#include "hdel/exact.hpp"
#include "hdel/online.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hdel;

namespace {

RevealStream triangles(std::size_t count, bool advice_on_first)
{
    RevealStream s;
    for (VertexId c = 0 ; c < count ; ++c) {
        VertexId b = 3 * c;
        s.push_back({ {}, advice_on_first });
        s.push_back({ { b }, false });
        s.push_back({ { b, b + 1 }, false });
    }
    return s;
}

}

TEST_CASE("algp_case examples")
{
    CHECK(algp_case(0, 0, Rational(1, 2), true, false) == AlgPCase::delete_all);
    CHECK(algp_case(1, 1, Rational(2, 5), true, false) == AlgPCase::delete_all);
    CHECK(algp_case(1, 3, Rational(2, 5), true, false) == AlgPCase::delete_one_advice1);
    CHECK(algp_case(7, 0, Rational(9, 10), false, false) == AlgPCase::delete_all_no_count);
    CHECK(algp_case(0, 5, Rational(1, 2), true, true) == AlgPCase::delete_all_no_count);
    // boundary: e == p(e+d) stays in Case 3
    CHECK(algp_case(1, 1, Rational(1, 2), true, false) == AlgPCase::delete_one_advice1);
}

TEST_CASE("strategy parameter range")
{
    CHECK_THROWS_AS(Strategy::alg_p(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(Strategy::alg_p(Rational(-1, 2)), std::invalid_argument);
    CHECK(Strategy::alg_one().p() == Rational(1));
    CHECK_FALSE(Strategy::naive().p().has_value());
}

TEST_CASE("run_strategy examples")
{
    auto h = builtin_pattern("K3");
    auto naive = run_strategy(triangles(1, false), h, Strategy::naive());
    CHECK(naive.deletions_total == 3);
    CHECK(naive.opt_cost == 1);

    auto one = run_strategy(triangles(1, true), h, Strategy::alg_p(Rational(1, 2)));
    CHECK(one.deletions_total == 3);
    CHECK(one.final_e == 0);
    CHECK(one.final_d == 1);

    auto two = run_strategy(triangles(2, true), h, Strategy::alg_p(Rational(1, 2)));
    REQUIRE(two.trace.size() == 2);
    CHECK(two.trace[0].kind == StepKind::case2_delete_all);
    CHECK(two.trace[1].kind == StepKind::case3_delete_advice1);
    CHECK(two.trace[1].deleted == VertexSet{ 3 });
    CHECK(two.deletions_total == 4);
    CHECK(two.opt_cost == 2);
    CHECK(two.final_e == 1);
    CHECK(two.final_d == 1);
    CHECK(two.ratio == Rational(2));
    CHECK(two.invariant_violations.empty());
}

TEST_CASE("Case 1 freezes the counters for good")
{
    auto h = builtin_pattern("K3");
    auto s = triangles(4, true);
    s[6].advice = false; // third triangle has no advice-1 vertex
    auto r = run_strategy(s, h, Strategy::alg_p(Rational(1, 2)));
    REQUIRE(r.trace.size() == 4);
    CHECK(r.trace[2].kind == StepKind::case1_delete_all);
    CHECK(r.trace[3].kind == StepKind::case1_delete_all);
    CHECK(r.trace[3].e_after == r.trace[1].e_after);
    CHECK(r.trace[3].d_after == r.trace[1].d_after);
    CHECK(r.advice_declared_incorrect);
    CHECK(r.invariant_violations.empty());
}

TEST_CASE("check_counter_lemmas examples")
{
    CHECK(check_counter_lemmas(0, 1, Rational(0)).empty());
    CHECK(check_counter_lemmas(1, 1, Rational(2, 5)).empty());
    CHECK_FALSE(check_counter_lemmas(5, 1, Rational(1, 10)).empty());
}

TEST_CASE("other strategies")
{
    auto h = builtin_pattern("K3");
    auto alg1 = run_strategy(triangles(3, true), h, Strategy::alg_one());
    CHECK(alg1.deletions_total == 3);
    CHECK(alg1.deleted_advice1 == 3);

    auto alg1_blind = run_strategy(triangles(1, false), h, Strategy::alg_one());
    CHECK(alg1_blind.deletions_total == 3);

    // a bowtie revealed triangle by triangle: the first copy is resolved
    // before the second exists
    RevealStream bowtie{ { {}, false }, { { 0 }, false }, { { 0, 1 }, false }, { { 2 }, false }, { { 2, 3 }, false } };
    auto greedy = run_strategy(bowtie, h, Strategy::greedy_overlap());
    CHECK(greedy.deletions_total == 2);
    CHECK(greedy.trace[0].deleted == VertexSet{ 0 });

    auto newest = Strategy::custom("newest", [] (const OnlineGraph &, const InducedCopy & c) {
        return VertexSet{ c.vertices.back() };
    });
    CHECK(run_strategy(bowtie, h, newest).deletions_total == 1);

    // the centre arrives last and closes both triangles at once
    RevealStream centre_last{ { {}, false }, { { 0 }, false }, { {}, false }, { { 2 }, false }, { { 0, 1, 2, 3 }, false } };
    auto greedy2 = run_strategy(centre_last, h, Strategy::greedy_overlap());
    CHECK(greedy2.deletions_total == 1);
    CHECK(greedy2.trace[0].deleted == VertexSet{ 4 });

    auto outside = Strategy::custom("bad", [] (const OnlineGraph &, const InducedCopy &) { return VertexSet{ 99 }; });
    CHECK_THROWS_AS(run_strategy(bowtie, h, outside), std::logic_error);
}

TEST_CASE("streams are validated")
{
    RevealStream bad{ { {}, false }, { { 1 }, false } };
    CHECK_THROWS_AS(validate_stream(bad), std::invalid_argument);
    CHECK_THROWS_AS(with_advice(triangles(1, false), { true }), std::invalid_argument);
}

TEST_CASE("randomized runs keep the counter lemmas and stay H-free")
{
    std::mt19937_64 rng(99);
    auto h = builtin_pattern("C4");
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto stream = random_stream(10, Rational(1, 2), trial);
        auto g = replay_graph(stream);
        AdviceTape correct{ correct_advice(g, h), AdviceProvenance::correct };
        auto flipped = corrupt_advice(correct, CorruptionScheme::flip_each(Rational(1, 3)), trial);
        for (auto p : { Rational(0), Rational(1, 4), Rational(1, 2), Rational(9, 10) })
            for (auto & tape : { correct.bits, flipped.bits }) {
                auto r = run_strategy(with_advice(stream, tape), h, Strategy::alg_p(p));
                CHECK(r.invariant_violations.empty());
                CHECK(check_counter_lemmas(r, p).empty());
                CHECK(r.opt_cost == oracle::opt_cost(g, h));
            }
    }
}
