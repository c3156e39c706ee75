#include "hdel/harness.hpp"
#include "hdel/exact.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <future>
#include <sstream>

namespace hdel {

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ')
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ')
            ++j;
        if (j > i)
            words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

std::optional<std::uint64_t> to_index(std::string_view text)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        return std::nullopt;
    return value;
}

bool is_builtin(const std::string & name)
{
    auto names = builtin_pattern_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::string edge_list(const PatternGraph & h)
{
    std::string out = "edges ";
    bool first = true;
    for (auto [a, b] : h.edges()) {
        if (! first)
            out += ",";
        out += std::to_string(a) + "-" + std::to_string(b);
        first = false;
    }
    return out;
}

std::string p_column(const std::optional<Rational> & p, bool numerator)
{
    if (! p)
        return "";
    return std::to_string(numerator ? p->numerator() : p->denominator());
}

std::string pass_column(const RunRecord & record)
{
    if (record.report.strategy != StrategyKind::alg_p)
        return "na";
    return record.verdict.passed() ? "1" : "0";
}

}

PatternGraph parse_pattern(std::string_view text)
{
    if (! text.starts_with("edges "))
        return builtin_pattern(text);

    std::vector<std::pair<int, int>> edges;
    int k = 0;
    auto body = text.substr(6);
    std::size_t start = 0;
    while (start <= body.size()) {
        auto comma = body.find(',', start);
        auto token = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto dash = token.find('-');
        if (dash == std::string_view::npos)
            throw std::invalid_argument("malformed edge '" + std::string(token) + "'");
        auto a = to_index(token.substr(0, dash)), b = to_index(token.substr(dash + 1));
        if (! a || ! b || *a >= PatternGraph::max_vertices || *b >= PatternGraph::max_vertices)
            throw std::invalid_argument("malformed edge '" + std::string(token) + "'");
        edges.emplace_back(static_cast<int>(*a), static_cast<int>(*b));
        k = std::max({ k, static_cast<int>(*a) + 1, static_cast<int>(*b) + 1 });
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }

    // canonical name: sorted edge list, a < b
    PatternGraph provisional("edges", k, edges);
    return PatternGraph(edge_list(provisional), k, std::move(edges));
}

Instance parse_instance(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (! line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }

    std::optional<PatternGraph> pattern;
    RevealStream stream;
    bool header = false;
    for (std::size_t i = 0 ; i < lines.size() ; ++i) {
        std::size_t line_no = i + 1;
        auto line = lines[i];
        if (line.empty() || line.front() == '#')
            continue;

        if (! header) {
            if (line != "hdel v1")
                throw ParseError(line_no, "expected header 'hdel v1'");
            header = true;
            continue;
        }

        if (! pattern) {
            if (! line.starts_with("pattern "))
                throw ParseError(line_no, "expected 'pattern <name|edges ...>'");
            try {
                pattern = parse_pattern(line.substr(8));
            }
            catch (const std::invalid_argument & e) {
                throw ParseError(line_no, e.what());
            }
            continue;
        }

        auto words = split_words(line);
        if (words.size() < 2 || words[0] != "v")
            throw ParseError(line_no, "expected 'v <advice-bit> <neighbors...>'");
        if (words[1] != "0" && words[1] != "1")
            throw ParseError(line_no, "advice bit must be 0 or 1, got '" + std::string(words[1]) + "'");

        Reveal r;
        r.advice = words[1] == "1";
        auto index = stream.size();
        for (std::size_t w = 2 ; w < words.size() ; ++w) {
            auto u = to_index(words[w]);
            if (! u)
                throw ParseError(line_no, "malformed neighbor index '" + std::string(words[w]) + "'");
            if (*u >= index)
                throw ParseError(line_no, "vertex " + std::to_string(index) + " references vertex "
                        + std::to_string(*u) + " which has not arrived yet");
            if (std::find(r.neighbors.begin(), r.neighbors.end(), *u) != r.neighbors.end())
                throw ParseError(line_no, "neighbor " + std::to_string(*u) + " listed twice");
            r.neighbors.push_back(static_cast<VertexId>(*u));
        }
        std::sort(r.neighbors.begin(), r.neighbors.end());
        stream.push_back(std::move(r));
    }

    if (! header)
        throw ParseError(lines.size() + 1, "missing header 'hdel v1'");
    if (! pattern)
        throw ParseError(lines.size() + 1, "missing pattern line");
    return Instance{ std::move(*pattern), std::move(stream) };
}

std::string emit_instance(const Instance & instance)
{
    std::ostringstream out;
    out << "hdel v1\n";
    const auto & h = instance.pattern;
    out << "pattern " << (is_builtin(h.name()) ? h.name() : edge_list(h)) << "\n";
    for (const auto & r : instance.stream) {
        auto neighbors = r.neighbors;
        std::sort(neighbors.begin(), neighbors.end());
        out << "v " << (r.advice ? 1 : 0);
        for (auto u : neighbors)
            out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

Rational consistency_bound(int k, const Rational & p)
{
    return Rational(k) - p * Rational(k - 1);
}

Rational robustness_bound(int k, const Rational & p)
{
    return Rational(k) + p / (Rational(1) - p);
}

BoundVerdict verify_bounds(const RunReport & report, const PatternGraph & h, const Rational & p,
        AdviceProvenance provenance)
{
    BoundVerdict verdict;
    if (report.strategy != StrategyKind::alg_p) {
        verdict.reason = "provenance mismatch: report comes from strategy '" + report.strategy_name + "', not ALG_p";
        return verdict;
    }
    if (! report.p || *report.p != p) {
        verdict.reason = "provenance mismatch: report was produced with p = "
            + (report.p ? format_rational(*report.p) : std::string("none")) + ", not " + format_rational(p);
        return verdict;
    }
    if (report.k != h.k() || report.pattern != h.name()) {
        verdict.reason = "provenance mismatch: report is for pattern '" + report.pattern + "'";
        return verdict;
    }

    int k = h.k();
    if (provenance == AdviceProvenance::correct) {
        verdict.bound = consistency_bound(k, p);
        verdict.additive = Rational(k - 1);
    }
    else {
        verdict.bound = robustness_bound(k, p);
        verdict.additive = Rational(1) / (Rational(1) - p);
    }

    Rational deletions(static_cast<std::int64_t>(report.deletions_total));
    Rational opt(static_cast<std::int64_t>(report.opt_cost));
    verdict.allowed = verdict.bound * opt + verdict.additive;
    verdict.slack_used = deletions - verdict.bound * opt;

    if (deletions <= verdict.allowed) {
        verdict.status = BoundStatus::pass;
        return verdict;
    }
    verdict.status = BoundStatus::fail;
    verdict.reason = std::to_string(report.deletions_total) + " deletions exceed " + format_rational(verdict.bound)
        + " * " + std::to_string(report.opt_cost) + " + " + format_rational(verdict.additive) + " = "
        + format_rational(verdict.allowed);
    verdict.witness = emit_instance(Instance{ h, report.stream });
    return verdict;
}

AdviceSource AdviceSource::parse(std::string_view text)
{
    AdviceSource source;
    if (text == "given")
        source.kind = Kind::given;
    else if (text == "correct")
        source.kind = Kind::correct;
    else if (text == "classwise")
        source.kind = Kind::classwise;
    else if (text.starts_with("corrupt:")) {
        source.kind = Kind::corrupt;
        auto scheme = text.substr(8);
        if (scheme == "zeros")
            source.scheme = CorruptionScheme::all_zeros();
        else if (scheme == "ones")
            source.scheme = CorruptionScheme::all_ones();
        else if (scheme == "shift")
            source.scheme = CorruptionScheme::shift_to_class_label();
        else if (scheme.starts_with("flip:"))
            source.scheme = CorruptionScheme::flip_each(parse_rational(scheme.substr(5)));
        else
            throw std::invalid_argument("unknown corruption scheme '" + std::string(scheme) + "'");
    }
    else
        throw std::invalid_argument("unknown advice source '" + std::string(text) + "'");
    return source;
}

std::string AdviceSource::name() const
{
    switch (kind) {
        case Kind::given: return "given";
        case Kind::correct: return "correct";
        case Kind::classwise: return "classwise";
        case Kind::corrupt: return "corrupt:" + scheme.name();
    }
    return "?";
}

bool is_correct_tape(const OnlineGraph & g, const PatternGraph & h, const std::vector<bool> & tape)
{
    VertexSet ones;
    for (VertexId v = 0 ; v < tape.size() ; ++v)
        if (tape[v])
            ones.push_back(v);
    if (! is_solution(g, h, ones))
        return false;
    return min_deletion_set(g, h)->cost == ones.size();
}

PreparedAdvice prepare_advice(const RevealStream & stream, const PatternGraph & h, const AdviceSource & source,
        std::uint64_t seed)
{
    validate_stream(stream);
    auto g = replay_graph(stream);
    PreparedAdvice out;
    switch (source.kind) {
        case AdviceSource::Kind::given:
            out.stream = stream;
            out.provenance = is_correct_tape(g, h, advice_of(stream))
                ? AdviceProvenance::correct : AdviceProvenance::corrupted;
            break;
        case AdviceSource::Kind::correct:
            out.stream = with_advice(stream, correct_advice(g, h));
            out.provenance = AdviceProvenance::correct;
            break;
        case AdviceSource::Kind::classwise:
            out.stream = stream;
            out.provenance = AdviceProvenance::class_label;
            break;
        case AdviceSource::Kind::corrupt: {
            AdviceTape correct{ correct_advice(g, h), AdviceProvenance::correct };
            out.stream = with_advice(stream, corrupt_advice(correct, source.scheme, seed).bits);
            out.provenance = AdviceProvenance::corrupted;
            break;
        }
    }
    return out;
}

Strategy parse_strategy(std::string_view name, std::optional<Rational> p)
{
    if (name == "algp") {
        if (! p)
            throw std::invalid_argument("strategy algp needs --p");
        return Strategy::alg_p(*p);
    }
    if (name == "naive")
        return Strategy::naive();
    if (name == "alg1")
        return Strategy::alg_one();
    if (name == "greedy")
        return Strategy::greedy_overlap();
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "' (algp, naive, alg1, greedy)");
}

GadgetMode parse_mode(std::string_view text)
{
    if (text == "false-twin" || text == "false")
        return GadgetMode::false_twin;
    if (text == "true-twin" || text == "true")
        return GadgetMode::true_twin;
    throw std::invalid_argument("unknown gadget mode '" + std::string(text) + "' (false-twin, true-twin)");
}

ChainKind parse_chain(std::string_view text)
{
    if (text == "disjoint")
        return ChainKind::disjoint;
    if (text == "shared")
        return ChainKind::shared_advice1_vertex;
    if (text == "join")
        return ChainKind::complete_join;
    throw std::invalid_argument("unknown chain kind '" + std::string(text) + "' (disjoint, shared, join)");
}

std::optional<std::pair<ChainKind, GadgetMode>> default_chain(const PatternGraph & h)
{
    const auto & t = h.traits();
    std::optional<GadgetMode> mode;
    if (! t.has_true_twin_pair)
        mode = GadgetMode::true_twin;
    else if (! t.has_false_twin_pair)
        mode = GadgetMode::false_twin;
    if (! mode)
        return std::nullopt;
    if (t.is_two_connected)
        return std::pair{ ChainKind::shared_advice1_vertex, *mode };
    if (t.is_path && h.k() >= 5)
        return std::pair{ ChainKind::complete_join, *mode };
    return std::pair{ ChainKind::disjoint, *mode };
}

namespace {

struct RowOutput
{
    SweepRow row;
    std::vector<RunRecord> runs;
};

RowOutput sweep_row(const SweepConfig & config, std::size_t row_index, const Rational & p)
{
    RowOutput out;
    out.row.p = p;
    int k = config.pattern.k();
    out.row.consistency_bound = consistency_bound(k, p);
    out.row.robustness_bound = robustness_bound(k, p);
    auto strategy = Strategy::alg_p(p);
    std::size_t counter = 0;

    auto record = [&] (std::string source, AdviceProvenance provenance, std::size_t m, RunReport report) {
        RunRecord r;
        r.run_id = std::to_string(row_index) + "." + std::to_string(counter++);
        r.advice_source = std::move(source);
        r.provenance = provenance;
        r.m = m;
        r.verdict = verify_bounds(report, config.pattern, p, provenance);
        report.additive_slack_used = r.verdict.slack_used;
        r.report = std::move(report);
        if (provenance == AdviceProvenance::correct)
            out.row.consistency_measured = std::max(out.row.consistency_measured, r.report.ratio);
        else
            out.row.robustness_measured = std::max(out.row.robustness_measured, r.report.ratio);
        out.runs.push_back(std::move(r));
    };

    try {
        for (std::size_t i = 0 ; i < config.random_instances ; ++i) {
            auto stream = random_stream(config.random_n, config.edge_prob, config.seed + i);
            auto g = replay_graph(stream);
            AdviceTape correct{ correct_advice(g, config.pattern), AdviceProvenance::correct };
            auto opt = static_cast<std::size_t>(std::count(correct.bits.begin(), correct.bits.end(), true));
            record("correct", AdviceProvenance::correct, 0,
                    run_strategy(with_advice(stream, correct.bits), config.pattern, strategy, opt));
            for (std::size_t s = 0 ; s < config.schemes.size() ; ++s) {
                auto bad = corrupt_advice(correct, config.schemes[s], config.seed * 7919 + i * 31 + s);
                record("corrupt:" + config.schemes[s].name(), AdviceProvenance::corrupted, 0,
                        run_strategy(with_advice(stream, bad.bits), config.pattern, strategy, opt));
            }
        }

        if (config.chain) {
            ChainConfig chain{ config.m, *config.chain, AdviceRule::class1_gets_one };
            auto duel = chain_duel(config.pattern, chain, config.mode, strategy, config.budget);
            auto expanded = expand_to_correct(duel.graph, duel.tape, config.pattern);
            record("chain:" + to_string(*config.chain), AdviceProvenance::class_label, config.m, duel.report);
            auto stream = to_stream(expanded.graph);
            record("chain-expanded:" + to_string(*config.chain), AdviceProvenance::correct, config.m,
                    run_strategy(stream, config.pattern, strategy));
            // small random instances are dominated by the additive terms;
            // the chain pair is the meaningful ratio estimate
            out.row.robustness_measured = out.runs[out.runs.size() - 2].report.ratio;
            out.row.consistency_measured = out.runs.back().report.ratio;
        }
    }
    catch (const std::exception & e) {
        out.row.error = e.what();
    }

    out.row.runs = out.runs.size();
    out.row.bounds_pass = out.row.error.empty() && std::all_of(out.runs.begin(), out.runs.end(),
            [] (const RunRecord & r) { return r.verdict.passed() && r.report.invariant_violations.empty(); });
    return out;
}

}

bool SweepResult::all_pass() const
{
    return std::all_of(rows.begin(), rows.end(), [] (const SweepRow & r) { return r.bounds_pass; });
}

SweepResult sweep(const SweepConfig & config)
{
    auto ps = config.ps;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    std::vector<std::future<RowOutput>> futures;
    for (std::size_t i = 0 ; i < ps.size() ; ++i)
        futures.push_back(std::async(std::launch::async, sweep_row, std::cref(config), i, ps[i]));

    SweepResult result;
    for (auto & f : futures) {
        auto out = f.get();
        result.rows.push_back(std::move(out.row));
        for (auto & r : out.runs)
            result.runs.push_back(std::move(r));
    }

    for (std::size_t i = 1 ; i < result.rows.size() ; ++i) {
        auto & prev = result.rows[i - 1];
        auto & row = result.rows[i];
        row.consistency_monotone = row.consistency_measured <= prev.consistency_measured;
        row.robustness_monotone = row.robustness_measured >= prev.robustness_measured;
    }
    return result;
}

std::string csv_header()
{
    return "run_id,pattern,strategy,p_num,p_den,advice_source,m,deletions,opt,e,d,ratio,bound,pass";
}

std::string csv_row(const RunRecord & record)
{
    const auto & r = record.report;
    std::ostringstream out;
    out << record.run_id << ',' << r.pattern << ',' << r.strategy_name << ','
        << p_column(r.p, true) << ',' << p_column(r.p, false) << ','
        << record.advice_source << ',' << record.m << ','
        << r.deletions_total << ',' << r.opt_cost << ',' << r.final_e << ',' << r.final_d << ','
        << format_decimal(r.ratio) << ','
        << (r.strategy == StrategyKind::alg_p ? format_decimal(record.verdict.bound) : std::string()) << ','
        << pass_column(record);
    return out.str();
}

std::string jsonl_row(const RunRecord & record)
{
    const auto & r = record.report;
    nlohmann::ordered_json j;
    j["run_id"] = record.run_id;
    j["pattern"] = r.pattern;
    j["strategy"] = r.strategy_name;
    j["p"] = r.p ? format_rational(*r.p) : "";
    j["advice_source"] = record.advice_source;
    j["m"] = record.m;
    j["deletions"] = r.deletions_total;
    j["opt"] = r.opt_cost;
    j["e"] = r.final_e;
    j["d"] = r.final_d;
    j["ratio"] = format_rational(r.ratio);
    j["bound"] = r.strategy == StrategyKind::alg_p ? format_rational(record.verdict.bound) : "";
    j["additive"] = r.strategy == StrategyKind::alg_p ? format_rational(record.verdict.additive) : "";
    j["pass"] = pass_column(record);
    j["violations"] = r.invariant_violations;
    return j.dump();
}

std::string summary_csv_header()
{
    return "p_num,p_den,p,consistency_measured,robustness_measured,consistency_bound,robustness_bound,"
        "runs,bounds_pass,consistency_monotone,robustness_monotone,error";
}

std::string summary_csv_row(const SweepRow & row)
{
    std::ostringstream out;
    out << row.p.numerator() << ',' << row.p.denominator() << ',' << format_decimal(row.p) << ','
        << format_decimal(row.consistency_measured) << ',' << format_decimal(row.robustness_measured) << ','
        << format_rational(row.consistency_bound) << ',' << format_rational(row.robustness_bound) << ','
        << row.runs << ',' << (row.bounds_pass ? 1 : 0) << ','
        << (row.consistency_monotone ? 1 : 0) << ',' << (row.robustness_monotone ? 1 : 0) << ','
        << '"' << row.error << '"';
    return out.str();
}

}
