#pragma once

#include "hdel/adversary.hpp"
#include "hdel/online.hpp"
#include "hdel/pattern.hpp"
#include "hdel/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hdel {

/// A pattern plus a reveal stream; the unit of replay.
struct Instance
{
    PatternGraph pattern;
    RevealStream stream;
};

class ParseError : public std::runtime_error
{
    public:
        ParseError(std::size_t line, const std::string & reason) :
            std::runtime_error("line " + std::to_string(line) + ": " + reason),
            line_(line)
        {
        }

        std::size_t line() const { return line_; }

    private:
        std::size_t line_;
};

/// Line-oriented instance file:
///
///     hdel v1
///     pattern <builtin name | edges a-b,c-d,...>
///     v <advice-bit> <backward neighbor indices...>     (one line per vertex)
///
/// Blank lines and lines starting with '#' are ignored.
Instance parse_instance(std::string_view text);

/// Canonical text: neighbors ascending, builtin patterns by name, other
/// patterns as a sorted edge list. parse_instance(emit_instance(x)) == x.
std::string emit_instance(const Instance & instance);

/// Parses "edges 0-1,1-2,..." (the part after "pattern ").
PatternGraph parse_pattern(std::string_view text);

Rational consistency_bound(int k, const Rational & p);
Rational robustness_bound(int k, const Rational & p);

enum class BoundStatus
{
    pass,
    fail,
    rejected
};

struct BoundVerdict
{
    BoundStatus status = BoundStatus::rejected;
    /// The multiplicative and additive constants that were applied.
    Rational bound{ 0 };
    Rational additive{ 0 };
    /// bound * opt + additive
    Rational allowed{ 0 };
    /// deletions - bound * opt
    Rational slack_used{ 0 };
    std::string reason;
    /// Replayable instance text, set on failure.
    std::string witness;

    bool passed() const { return status == BoundStatus::pass; }
};

/// Checks deletions <= bound * opt + additive for an ALG_p report. Correct
/// advice selects (k - p(k-1), k-1), anything else (k + p/(1-p), 1/(1-p)).
/// Reports from other strategies or another p are rejected.
BoundVerdict verify_bounds(const RunReport & report, const PatternGraph & h, const Rational & p,
        AdviceProvenance provenance);

/// Where a run's advice comes from.
struct AdviceSource
{
    enum class Kind
    {
        given,
        correct,
        classwise,
        corrupt
    };

    Kind kind = Kind::given;
    CorruptionScheme scheme;

    /// "given", "correct", "classwise", "corrupt:flip:<p>", "corrupt:zeros",
    /// "corrupt:ones" or "corrupt:shift".
    static AdviceSource parse(std::string_view text);
    std::string name() const;
};

/// A stream whose advice bits were set from an AdviceSource.
struct PreparedAdvice
{
    RevealStream stream;
    AdviceProvenance provenance = AdviceProvenance::correct;
};

/// True when the advice-1 vertices form a minimum deletion set.
bool is_correct_tape(const OnlineGraph & g, const PatternGraph & h, const std::vector<bool> & tape);

/// given: keep the stream's bits, provenance decided by is_correct_tape.
/// correct: the lexicographic optimum. classwise: keep the bits, always
/// judged as untrusted. corrupt: the correct tape run through the scheme.
PreparedAdvice prepare_advice(const RevealStream & stream, const PatternGraph & h, const AdviceSource & source,
        std::uint64_t seed);

Strategy parse_strategy(std::string_view name, std::optional<Rational> p);
GadgetMode parse_mode(std::string_view text);
ChainKind parse_chain(std::string_view text);

/// A chain construction that is valid for `h`, if any: shared-vertex chains
/// for 2-connected patterns, complete joins for long paths, disjoint
/// gadgets otherwise; true-twin gadgets unless H has true twins.
std::optional<std::pair<ChainKind, GadgetMode>> default_chain(const PatternGraph & h);

struct SweepConfig
{
    PatternGraph pattern;
    std::vector<Rational> ps{};
    std::optional<ChainKind> chain{};
    GadgetMode mode = GadgetMode::true_twin;
    std::size_t m = 20;
    std::size_t budget = 4096;
    std::size_t random_instances = 24;
    std::size_t random_n = 9;
    Rational edge_prob{ 1, 2 };
    std::vector<CorruptionScheme> schemes{};
    std::uint64_t seed = 1;
};

/// One executed run with its bound check.
struct RunRecord
{
    std::string run_id;
    std::string advice_source;
    AdviceProvenance provenance = AdviceProvenance::correct;
    std::size_t m = 0;
    RunReport report;
    BoundVerdict verdict;
};

struct SweepRow
{
    Rational p{ 0 };
    Rational consistency_measured{ 0 };
    Rational robustness_measured{ 0 };
    Rational consistency_bound{ 0 };
    Rational robustness_bound{ 0 };
    bool bounds_pass = false;
    bool consistency_monotone = true;
    bool robustness_monotone = true;
    std::size_t runs = 0;
    std::string error;
};

struct SweepResult
{
    std::vector<SweepRow> rows;
    std::vector<RunRecord> runs;

    bool all_pass() const;
};

/// For every p: ALG_p on correct advice (random instances and the expanded
/// chain) and on wrong advice (corrupted tapes and the live chain adversary).
/// Every run is bound-checked. The measured ratios are the max over the
/// row's runs, or the chain pair's ratios when a chain is configured.
/// Rows run in parallel and come back in ascending p.
SweepResult sweep(const SweepConfig & config);

std::string csv_header();
std::string csv_row(const RunRecord & record);
std::string jsonl_row(const RunRecord & record);

std::string summary_csv_header();
std::string summary_csv_row(const SweepRow & row);

}
