// hdel: command-line driver for online H-deletion experiments.

#include "hdel/adversary.hpp"
#include "hdel/exact.hpp"
#include "hdel/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hdel;

namespace {

struct Options
{
    std::string pattern = "K3";
    std::string strategy = "algp";
    std::string p;
    std::string mode;
    std::string chain;
    std::size_t m = 1;
    std::size_t budget = 4096;
    std::string advice = "given";
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";

    std::string input;
    std::size_t n = 10;
    std::string edge_prob = "1/2";
    std::size_t instances = 24;
    std::string summary;
};

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string & path, const std::string & text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::optional<Rational> optional_p(const Options & o)
{
    if (o.p.empty())
        return std::nullopt;
    return parse_rational(o.p);
}

std::string render(const std::vector<RunRecord> & records, const std::string & format)
{
    std::string text;
    if (format == "csv") {
        text = csv_header() + "\n";
        for (auto & r : records)
            text += csv_row(r) + "\n";
    }
    else if (format == "jsonl") {
        for (auto & r : records)
            text += jsonl_row(r) + "\n";
    }
    else
        throw std::invalid_argument("unknown format '" + format + "' (csv, jsonl)");
    return text;
}

RunRecord make_record(std::string run_id, std::string source, AdviceProvenance provenance, std::size_t m,
        RunReport report, const PatternGraph & h)
{
    RunRecord r;
    r.run_id = std::move(run_id);
    r.advice_source = std::move(source);
    r.provenance = provenance;
    r.m = m;
    if (report.strategy == StrategyKind::alg_p) {
        r.verdict = verify_bounds(report, h, *report.p, provenance);
        report.additive_slack_used = r.verdict.slack_used;
    }
    r.report = std::move(report);
    return r;
}

// Bound failures and invariant violations are reported on stderr.
bool report_problems(const RunRecord & r)
{
    bool ok = true;
    for (auto & v : r.report.invariant_violations) {
        std::cerr << r.run_id << ": invariant violation: " << v << "\n";
        ok = false;
    }
    if (r.report.strategy == StrategyKind::alg_p && ! r.verdict.passed()) {
        std::cerr << r.run_id << ": bound check failed: " << r.verdict.reason << "\n";
        if (! r.verdict.witness.empty())
            std::cerr << "witness:\n" << r.verdict.witness;
        ok = false;
    }
    return ok;
}

int cmd_classify(const Options & o)
{
    auto h = parse_pattern(o.pattern);
    const auto & t = h.traits();
    std::ostringstream out;
    if (o.format == "jsonl")
        out << "{\"pattern\":\"" << h.name() << "\",\"k\":" << h.k()
            << ",\"true_twins\":" << t.has_true_twin_pair << ",\"false_twins\":" << t.has_false_twin_pair
            << ",\"two_connected\":" << t.is_two_connected << ",\"path\":" << t.is_path << "}\n";
    else {
        out << "pattern,k,true_twins,false_twins,two_connected,path,gadget_modes,chain\n";
        std::string modes;
        if (! t.has_false_twin_pair)
            modes += "false-twin";
        if (! t.has_true_twin_pair)
            modes += std::string(modes.empty() ? "" : "|") + "true-twin";
        auto chain = default_chain(h);
        out << h.name() << ',' << h.k() << ',' << t.has_true_twin_pair << ',' << t.has_false_twin_pair << ','
            << t.is_two_connected << ',' << t.is_path << ',' << (modes.empty() ? "none" : modes) << ','
            << (chain ? to_string(chain->first) : "none") << "\n";
    }
    write_output(o.out, out.str());
    return 0;
}

int cmd_gen(const Options & o)
{
    auto h = parse_pattern(o.pattern);
    auto stream = random_stream(o.n, parse_rational(o.edge_prob), o.seed);
    auto prepared = prepare_advice(stream, h, AdviceSource::parse(o.advice), o.seed);
    write_output(o.out, emit_instance(Instance{ h, prepared.stream }));
    return 0;
}

int cmd_duel(const Options & o)
{
    auto h = parse_pattern(o.pattern);
    auto strategy = parse_strategy(o.strategy, optional_p(o));
    auto fallback = default_chain(h);
    if (o.mode.empty() && ! fallback)
        throw std::invalid_argument("pattern '" + h.name() + "' has both twin kinds; no gadget applies");
    auto mode = o.mode.empty() ? fallback->second : parse_mode(o.mode);
    ChainConfig cfg;
    cfg.m = o.m;
    cfg.kind = o.chain.empty() ? ChainKind::disjoint : parse_chain(o.chain);
    cfg.advice_rule = AdviceRule::class1_gets_one;

    auto duel = chain_duel(h, cfg, mode, strategy, o.budget);
    if (! o.out.empty())
        write_output(o.out, emit_instance(Instance{ h, to_stream(duel.graph) }));

    auto record = make_record("duel", "chain:" + to_string(cfg.kind), AdviceProvenance::class_label, o.m,
            duel.report, h);
    bool ok = report_problems(record);
    for (auto & v : duel.violations) {
        std::cerr << "duel: " << v << "\n";
        ok = false;
    }
    if (duel.unbounded)
        std::cerr << "duel: reveal budget exhausted before a gadget closed (unbounded)\n";
    std::cout << render({ record }, o.format);
    return ok ? 0 : 1;
}

int cmd_run(const Options & o, bool verify_only)
{
    auto instance = parse_instance(read_file(o.input));
    const auto & h = instance.pattern;
    auto source = AdviceSource::parse(o.advice);
    auto prepared = prepare_advice(instance.stream, h, source, o.seed);
    auto strategy = verify_only ? Strategy::alg_p(parse_rational(o.p)) : parse_strategy(o.strategy, optional_p(o));

    auto record = make_record("run", source.name(), prepared.provenance, 0,
            run_strategy(prepared.stream, h, strategy), h);
    bool ok = report_problems(record);

    if (verify_only) {
        const auto & v = record.verdict;
        std::cout << (v.passed() ? "PASS" : "FAIL") << " deletions=" << record.report.deletions_total
            << " opt=" << record.report.opt_cost << " bound=" << format_rational(v.bound)
            << " additive=" << format_rational(v.additive) << " allowed=" << format_rational(v.allowed)
            << " advice=" << to_string(prepared.provenance) << "\n";
    }
    else
        write_output(o.out, render({ record }, o.format));
    return ok ? 0 : 1;
}

std::vector<Rational> parse_grid(const std::string & text)
{
    std::vector<Rational> ps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        ps.push_back(parse_rational(item));
    if (ps.empty())
        throw std::invalid_argument("empty p grid");
    return ps;
}

int cmd_sweep(const Options & o)
{
    SweepConfig cfg{ .pattern = parse_pattern(o.pattern) };
    cfg.ps = parse_grid(o.p.empty() ? "0,1/4,1/2,3/4" : o.p);
    auto fallback = default_chain(cfg.pattern);
    if (! o.chain.empty() && o.chain != "none")
        cfg.chain = parse_chain(o.chain);
    else if (o.chain.empty() && fallback)
        cfg.chain = fallback->first;
    if (! o.mode.empty())
        cfg.mode = parse_mode(o.mode);
    else if (fallback)
        cfg.mode = fallback->second;
    cfg.m = o.m;
    cfg.budget = o.budget;
    cfg.random_instances = o.instances;
    cfg.random_n = o.n;
    cfg.edge_prob = parse_rational(o.edge_prob);
    cfg.seed = o.seed;
    cfg.schemes = { CorruptionScheme::flip_each(Rational(1, 4)), CorruptionScheme::all_zeros(),
        CorruptionScheme::all_ones(), CorruptionScheme::shift_to_class_label() };

    auto result = sweep(cfg);
    bool ok = true;
    for (auto & r : result.runs)
        ok = report_problems(r) && ok;
    for (auto & row : result.rows)
        if (! row.error.empty()) {
            std::cerr << "row p=" << format_rational(row.p) << ": " << row.error << "\n";
            ok = false;
        }

    write_output(o.out, render(result.runs, o.format));
    if (! o.summary.empty()) {
        std::string text = summary_csv_header() + "\n";
        for (auto & row : result.rows)
            text += summary_csv_row(row) + "\n";
        write_output(o.summary, text);
    }
    return ok && result.all_pass() ? 0 : 1;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{ "Online H-deletion with advice: duels, sweeps and bound checks" };
    app.require_subcommand(1);
    Options o;

    auto add_common = [&] (CLI::App * c) {
        c->add_option("--pattern", o.pattern, "builtin name (K3, C4, P5, S3, ...) or \"edges 0-1,1-2\"");
        c->add_option("--seed", o.seed, "RNG seed");
        c->add_option("--out", o.out, "output file (default stdout)");
        c->add_option("--format", o.format, "csv or jsonl");
    };
    auto add_strategy = [&] (CLI::App * c) {
        c->add_option("--strategy", o.strategy, "algp, naive, alg1 or greedy");
        c->add_option("--p", o.p, "ALG_p parameter as num/den");
    };
    auto add_adversary = [&] (CLI::App * c) {
        c->add_option("--mode", o.mode, "false-twin or true-twin (default: picked from the pattern)");
        c->add_option("--chain", o.chain, "disjoint, shared or join");
        c->add_option("--m", o.m, "number of gadgets");
        c->add_option("--budget", o.budget, "reveal budget per gadget");
    };

    auto classify = app.add_subcommand("classify", "twin and connectivity traits of a pattern");
    add_common(classify);

    auto gen = app.add_subcommand("gen", "random instance file");
    add_common(gen);
    gen->add_option("--n", o.n, "vertices");
    gen->add_option("--edge-prob", o.edge_prob, "edge probability as num/den");
    gen->add_option("--advice", o.advice, "given (all zero), correct or corrupt:<scheme>");

    auto duel = app.add_subcommand("duel", "adaptive gadget chain against a strategy; --out saves the replay");
    add_common(duel);
    add_strategy(duel);
    add_adversary(duel);

    auto run = app.add_subcommand("run", "replay an instance file");
    add_common(run);
    add_strategy(run);
    run->add_option("input", o.input, "instance file")->required();
    run->add_option("--advice", o.advice, "given, correct, classwise or corrupt:<flip:q|zeros|ones|shift>");

    auto sweep_cmd = app.add_subcommand("sweep", "ALG_p over a grid of p");
    add_common(sweep_cmd);
    add_adversary(sweep_cmd);
    sweep_cmd->add_option("--p", o.p, "comma-separated grid (default 0,1/4,1/2,3/4)");
    sweep_cmd->add_option("--n", o.n, "vertices per random instance");
    sweep_cmd->add_option("--edge-prob", o.edge_prob, "edge probability of random instances");
    sweep_cmd->add_option("--instances", o.instances, "random instances per row");
    sweep_cmd->add_option("--summary", o.summary, "per-row summary CSV");

    auto verify = app.add_subcommand("verify", "replay an instance under ALG_p and check the bound");
    add_common(verify);
    verify->add_option("input", o.input, "instance file")->required();
    verify->add_option("--p", o.p, "ALG_p parameter")->required();
    verify->add_option("--advice", o.advice, "given, correct, classwise or corrupt:<scheme>");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify)
            return cmd_classify(o);
        if (*gen)
            return cmd_gen(o);
        if (*duel)
            return cmd_duel(o);
        if (*run)
            return cmd_run(o, false);
        if (*sweep_cmd)
            return cmd_sweep(o);
        if (*verify)
            return cmd_run(o, true);
    }
    catch (const std::exception & e) {
        std::cerr << "hdel: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
