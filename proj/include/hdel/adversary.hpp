#pragma once

#include "hdel/graph.hpp"
#include "hdel/online.hpp"
#include "hdel/pattern.hpp"
#include "hdel/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdel {

enum class GadgetMode
{
    /// Reinserted vertices copy the open neighborhood; classes are independent sets.
    false_twin,
    /// Reinserted vertices also join their own class; classes are cliques.
    true_twin
};

enum class AdviceRule
{
    /// Bit 1 on every vertex of class V_1 (index 0), 0 elsewhere.
    class1_gets_one,
    none
};

enum class ChainKind
{
    disjoint,
    shared_advice1_vertex,
    complete_join
};

enum class AdviceProvenance
{
    correct,
    class_label,
    corrupted
};

/// One bit per vertex plus where the bits came from.
struct AdviceTape
{
    std::vector<bool> bits;
    AdviceProvenance provenance = AdviceProvenance::correct;
};

struct GadgetState
{
    GadgetMode mode = GadgetMode::false_twin;
    /// classes[j] holds V_{j+1} in arrival order.
    std::vector<VertexSet> classes;
    /// originals[j] is the first-presented vertex of class j.
    VertexSet originals;
    std::optional<int> designated_class;
    std::size_t reveal_budget = 0;
    std::size_t reveals_used = 0;
    bool unbounded = false;

    int class_of(VertexId v) const;
    VertexSet members() const;
};

struct ChainConfig
{
    std::size_t m = 1;
    ChainKind kind = ChainKind::disjoint;
    AdviceRule advice_rule = AdviceRule::class1_gets_one;
};

struct DuelResult
{
    /// The full revealed graph with the strategy's deletions.
    OnlineGraph graph;
    AdviceTape tape;
    RunReport report;
    std::vector<GadgetState> gadgets;
    bool unbounded = false;
    /// One-alive-per-class and blow-up shape checks made during the duel.
    std::vector<std::string> violations;
};

/// Checks the pairing of gadget mode and pattern: false-twin gadgets need H
/// without false twins, true-twin gadgets need H without true twins.
void require_mode_valid(const PatternGraph & h, GadgetMode mode);

/// Plays one adaptive gadget against `strategy`. Every deleted vertex is
/// answered by a reinsertion into its class until the last original is
/// deleted; that original's class becomes the designated class. `budget`
/// caps the number of reveals; running out flags the duel unbounded.
DuelResult gadget_duel(const PatternGraph & h, GadgetMode mode, const Strategy & strategy, std::size_t budget,
        AdviceRule advice_rule = AdviceRule::none);

/// Plays cfg.m gadgets in sequence, combined as cfg.kind prescribes.
/// `budget` applies to each gadget.
DuelResult chain_duel(const PatternGraph & h, const ChainConfig & cfg, GadgetMode mode, const Strategy & strategy,
        std::size_t budget);

/// Thrown by expand_to_correct when a copy of H has no advice-1 vertex.
class ExpansionError : public std::invalid_argument
{
    public:
        ExpansionError(const std::string & what, InducedCopy copy) :
            std::invalid_argument(what),
            copy_(std::move(copy))
        {
        }

        const InducedCopy & copy() const { return copy_; }

    private:
        InducedCopy copy_;
};

struct Expansion
{
    OnlineGraph graph;
    AdviceTape tape;
};

/// Appends two private copies of H (2(k-1) fresh advice-0 vertices) for every
/// advice-1 vertex, which makes the advice-1 set the unique optimum. Works on
/// the full revealed graph; deletion flags of `g` are dropped.
Expansion expand_to_correct(const OnlineGraph & g, const AdviceTape & tape, const PatternGraph & h);

struct CorruptionScheme
{
    enum class Kind
    {
        flip_each,
        all_zeros,
        all_ones,
        shift_to_class_label
    };

    Kind kind = Kind::flip_each;
    Rational prob{ 0 };

    static CorruptionScheme flip_each(Rational prob);
    static CorruptionScheme all_zeros() { return { Kind::all_zeros, Rational(0) }; }
    static CorruptionScheme all_ones() { return { Kind::all_ones, Rational(0) }; }
    static CorruptionScheme shift_to_class_label() { return { Kind::shift_to_class_label, Rational(0) }; }

    std::string name() const;
};

/// Deterministic in (scheme, seed); length preserved. shift_to_class_label
/// moves every bit one position later (cyclically), so each 1 lands on the
/// next-arrived vertex.
AdviceTape corrupt_advice(const AdviceTape & tape, const CorruptionScheme & scheme, std::uint64_t seed);

/// G(n, q) revealed in index order with all-zero advice.
RevealStream random_stream(std::size_t n, const Rational & edge_prob, std::uint64_t seed);

std::string to_string(GadgetMode mode);
std::string to_string(ChainKind kind);
std::string to_string(AdviceProvenance provenance);

}
