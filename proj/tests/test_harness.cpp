#include "hdel/exact.hpp"
#include "hdel/harness.hpp"

#include <doctest.h>

using namespace hdel;

TEST_CASE("canonical triangle file")
{
    std::string text = "hdel v1\npattern K3\nv 1\nv 0 0\nv 0 0 1\n";
    auto inst = parse_instance(text);
    CHECK(inst.pattern.name() == "K3");
    REQUIRE(inst.stream.size() == 3);
    CHECK(inst.stream[2].neighbors == VertexSet{ 0, 1 });
    CHECK(inst.stream[0].advice);
    CHECK(emit_instance(inst) == text);
}

TEST_CASE("parse errors carry the line number")
{
    try {
        parse_instance("hdel v1\npattern K3\nv 0\nv 0 0 2\n");
        FAIL("expected ParseError");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_instance("hdel v2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("hdel v1\npattern Q7\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("hdel v1\npattern K3\nv 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("hdel v1\npattern K3\nv 0\nv 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("hdel v1\npattern K3\nx 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("hdel v1\n"), ParseError);
}

TEST_CASE("explicit edge patterns round-trip")
{
    std::string text = "hdel v1\npattern edges 0-1,0-2,1-2,2-3\nv 0\nv 0 0\n";
    auto inst = parse_instance(text);
    CHECK(inst.pattern.k() == 4);
    CHECK(inst.pattern.edges().size() == 4);
    CHECK(emit_instance(inst) == text);
    // non-canonical input normalizes
    auto loose = parse_instance("hdel v1\npattern edges 2-3,1-0,2-1,0-2\nv 0\nv 0 0\n");
    CHECK(emit_instance(loose) == text);
}

TEST_CASE("emitted duel traces replay to the same report")
{
    auto c4 = builtin_pattern("C4");
    auto s = Strategy::alg_p(Rational(3, 4));
    auto d = chain_duel(c4, { 3, ChainKind::shared_advice1_vertex }, GadgetMode::true_twin, s, 500);
    auto text = emit_instance(Instance{ c4, to_stream(d.graph) });
    auto inst = parse_instance(text);
    CHECK(emit_instance(inst) == text);
    auto r = run_strategy(inst.stream, inst.pattern, s);
    CHECK(r.deletions_total == d.report.deletions_total);
    CHECK(r.opt_cost == d.report.opt_cost);
    CHECK(r.final_e == d.report.final_e);
    CHECK(r.final_d == d.report.final_d);
}

TEST_CASE("theoretical bounds")
{
    CHECK(consistency_bound(4, Rational(0)) == Rational(4));
    CHECK(robustness_bound(4, Rational(0)) == Rational(4));
    CHECK(consistency_bound(4, Rational(3, 4)) == Rational(7, 4));
    CHECK(robustness_bound(4, Rational(3, 4)) == Rational(7));
}

TEST_CASE("verify_bounds examples")
{
    auto k3 = builtin_pattern("K3");
    RevealStream two{ { {}, true }, { { 0 }, false }, { { 0, 1 }, false },
        { {}, true }, { { 3 }, false }, { { 3, 4 }, false } };
    auto r = run_strategy(two, k3, Strategy::alg_p(Rational(1, 2)));
    auto v = verify_bounds(r, k3, Rational(1, 2), AdviceProvenance::correct);
    CHECK(v.status == BoundStatus::pass);
    CHECK(v.allowed == Rational(6));
    CHECK(v.slack_used == Rational(0));

    auto naive = gadget_duel(k3, GadgetMode::false_twin, Strategy::naive(), 50).report;
    CHECK(verify_bounds(naive, k3, Rational(1, 2), AdviceProvenance::class_label).status == BoundStatus::rejected);
    CHECK(verify_bounds(r, k3, Rational(1, 4), AdviceProvenance::correct).status == BoundStatus::rejected);

    auto fake = r;
    fake.deletions_total = 100;
    fake.opt_cost = 1;
    auto f = verify_bounds(fake, k3, Rational(1, 2), AdviceProvenance::correct);
    CHECK(f.status == BoundStatus::fail);
    CHECK_FALSE(f.witness.empty());
    CHECK(parse_instance(f.witness).stream.size() == 6);

    auto robust = verify_bounds(fake, k3, Rational(1, 2), AdviceProvenance::corrupted);
    CHECK(robust.bound == Rational(4));
    CHECK(robust.additive == Rational(2));
}

TEST_CASE("advice sources")
{
    auto k3 = builtin_pattern("K3");
    RevealStream tri{ { {}, false }, { { 0 }, false }, { { 0, 1 }, false } };
    auto given = prepare_advice(tri, k3, AdviceSource::parse("given"), 1);
    CHECK(given.provenance == AdviceProvenance::corrupted);
    auto correct = prepare_advice(tri, k3, AdviceSource::parse("correct"), 1);
    CHECK(correct.provenance == AdviceProvenance::correct);
    CHECK(advice_of(correct.stream) == std::vector<bool>{ true, false, false });
    auto regiven = prepare_advice(correct.stream, k3, AdviceSource::parse("given"), 1);
    CHECK(regiven.provenance == AdviceProvenance::correct);
    auto shifted = prepare_advice(tri, k3, AdviceSource::parse("corrupt:shift"), 1);
    CHECK(advice_of(shifted.stream) == std::vector<bool>{ false, true, false });
    CHECK(AdviceSource::parse("corrupt:flip:1/4").name() == "corrupt:flip:1/4");
    CHECK_THROWS(AdviceSource::parse("sometimes"));
}

TEST_CASE("CSV columns")
{
    CHECK(csv_header() == "run_id,pattern,strategy,p_num,p_den,advice_source,m,deletions,opt,e,d,ratio,bound,pass");
    auto k3 = builtin_pattern("K3");
    RunRecord rec;
    rec.run_id = "x";
    rec.advice_source = "correct";
    rec.report = run_strategy({ { {}, true }, { { 0 }, false }, { { 0, 1 }, false } }, k3,
            Strategy::alg_p(Rational(1, 2)));
    rec.verdict = verify_bounds(rec.report, k3, Rational(1, 2), AdviceProvenance::correct);
    CHECK(csv_row(rec) == "x,K3,algp,1,2,correct,0,3,1,0,1,3.000000,2.000000,1");
    CHECK(jsonl_row(rec).find("\"pass\":\"1\"") != std::string::npos);
}

TEST_CASE("sweep on C4 with a shared-vertex chain")
{
    SweepConfig cfg{ .pattern = builtin_pattern("C4") };
    cfg.ps = { Rational(3, 4), Rational(0), Rational(1, 4), Rational(1, 2) };
    cfg.chain = ChainKind::shared_advice1_vertex;
    cfg.mode = GadgetMode::true_twin;
    cfg.m = 20;
    cfg.random_instances = 6;
    cfg.schemes = { CorruptionScheme::all_ones(), CorruptionScheme::flip_each(Rational(1, 4)) };
    auto result = sweep(cfg);
    REQUIRE(result.rows.size() == 4);
    CHECK(result.all_pass());
    CHECK(result.rows[0].p == Rational(0));
    CHECK(result.rows[0].consistency_bound == Rational(4));
    CHECK(result.rows[0].robustness_bound == Rational(4));
    for (auto & row : result.rows) {
        CHECK(row.error.empty());
        CHECK(row.consistency_monotone);
        CHECK(row.robustness_monotone);
    }
}

TEST_CASE("default chains")
{
    CHECK(default_chain(builtin_pattern("C4"))->first == ChainKind::shared_advice1_vertex);
    CHECK(default_chain(builtin_pattern("K3"))->second == GadgetMode::false_twin);
    CHECK(default_chain(builtin_pattern("P5"))->first == ChainKind::complete_join);
    CHECK(default_chain(builtin_pattern("P3"))->first == ChainKind::disjoint);
    // the diamond has true twins (the degree-3 pair) and false twins
    CHECK_FALSE(default_chain(parse_pattern("edges 0-1,0-2,0-3,1-2,1-3")).has_value());
}
