#pragma once

#include <rainbow/coloring.hpp>
#include <rainbow/error.hpp>
#include <rainbow/graph.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Constructive 5-coloring of connected bridgeless diameter-2 graphs.
//
// The construction fixes a center u, colors the hub edges u-N1(u) with 1 and
// 2 so that every first-shell vertex sits on a 3-, 4- or 5-cycle through u
// with a fixed "appropriate" color pattern, then classifies the second shell
// by which hub color class it sees and finishes with one of six terminal
// rule sets. Every result is verified before it is returned.

namespace rainbow {

/// Dominator blocks of the first shell.
struct BPartition
{
    std::vector<Vertex> dominators;   ///< b_1..b_b
    std::vector<VertexSet> blocks;    ///< B_i, each containing b_i
    VertexSet overflow_adjacent;      ///< B_{b+1}: hub color 1, adjacent to a non-dominator
    VertexSet overflow_isolated;      ///< B_{b+2}: no edges inside N1(u)
};

enum class CycleCase
{
    Fresh,              ///< cycle meets the staged set only in u
    FreshExtension,     ///< shares an interior vertex but none of the cycle's edges is colored yet
    FourOneShared,      ///< 4-cycle, v3 staged, v2 not
    FourTwoShared,      ///< 4-cycle, v2 and v3 staged
    FiveOneShared,      ///< 5-cycle, v4 staged, v2 and v3 not
    FiveTwoShared,      ///< 5-cycle, v3 and v4 staged
};

std::string to_string(CycleCase c);

struct StagedCycle
{
    Vertex target = 0;            ///< first-shell vertex the cycle absorbs
    std::vector<Vertex> cycle;    ///< u, target, ..., last (last adjacent to u)
    CycleCase kind = CycleCase::Fresh;
    bool mirrored = false;        ///< colored with 1<->2, 3<->4 swapped
};

struct StagedSets
{
    /// S_1 .. S_k; the center u is implicit in every stage.
    std::vector<VertexSet> stages;
    std::vector<StagedCycle> cycles; ///< cycles[i] turns stages[i] into stages[i + 1]
};

struct SecondShellPartition
{
    VertexSet x, y;             ///< first shell by hub color 1 / 2
    VertexSet s, t, q, p, l;    ///< second shell classes
    VertexSet p1, p2;           ///< P with exactly one / at least two X-neighbors
    bool mirrored = false;      ///< P was empty and L not: roles of 1/2 and 3/4 swapped
};

enum class TerminalCase
{
    ShellTwoStaged,       ///< N2(u) inside S_k
    ShellTwoPartitioned,  ///< N2(u) = S u T u Q
    NoSingleNeighborP,    ///< P_1 empty
    SingleX,              ///< P_1 nonempty, |X| = 1
    FreeXVertex,          ///< |X| >= 2, some x outside B_{b+2} misses P_1
    AllXSeeP1,            ///< |X| >= 2, every x outside B_{b+2} sees P_1
};

std::string to_string(TerminalCase c);

struct ConstructionTrace
{
    Vertex center = 0;
    ShellDecomposition shells;
    BPartition bpartition;
    StagedSets staged;
    std::optional<SecondShellPartition> second_shell;
    std::optional<TerminalCase> terminal;
    /// Dominators and leftovers of the P-partition (single-X case only).
    std::optional<BPartition> dpartition;
    /// Rule that fixed each edge's color, indexed like Graph::edges().
    std::vector<std::string> provenance;
    std::vector<std::string> notes;
    std::optional<RainbowCertificate> certificate;
};

/// A step of the construction found no applicable rule, or the finished
/// coloring failed verification. Carries the trace up to the failure.
class ConstructionError : public Error
{
public:
    ConstructionError(const std::string & what, ConstructionTrace trace,
                      std::optional<VertexPair> violation = std::nullopt)
        : Error(what), trace_(std::move(trace)), violation_(violation)
    {
    }

    const ConstructionTrace & trace() const noexcept { return trace_; }
    const std::optional<VertexPair> & violation() const noexcept { return violation_; }

private:
    ConstructionTrace trace_;
    std::optional<VertexPair> violation_;
};

/// Input is not connected, bridgeless and of diameter exactly 2.
class IneligibleGraph : public PreconditionError
{
public:
    explicit IneligibleGraph(Eligibility e)
        : PreconditionError("graph is not eligible: " + e.reason()), eligibility_(e)
    {
    }

    const Eligibility & eligibility() const noexcept { return eligibility_; }

private:
    Eligibility eligibility_;
};

/// Edge colors assigned so far plus the rule responsible for each.
class PartialColoring
{
public:
    explicit PartialColoring(const Graph & g);

    const Graph & graph() const noexcept { return *g_; }

    std::optional<Color> get(Vertex a, Vertex b) const;
    bool colored(Vertex a, Vertex b) const { return get(a, b).has_value(); }

    /// Colors an uncolored edge; returns false and leaves it alone otherwise.
    bool fill(Vertex a, Vertex b, Color c, const std::string & rule);

    /// Colors the edge, or checks that it already has color c.
    /// Returns false on a conflicting existing color.
    bool require(Vertex a, Vertex b, Color c, const std::string & rule);

    /// Swaps 1<->2 and 3<->4 on every colored edge.
    void mirror();

    const std::vector<std::string> & provenance() const noexcept { return rule_; }

    /// Fills the rest with `rest`; num_colors is the largest color present.
    EdgeColoring finish(Color rest, const std::string & rule);

private:
    const Graph * g_;
    std::vector<Color> color_;
    std::vector<std::string> rule_;
};

/// Minimum-eccentricity vertex, smallest index on ties.
Vertex choose_center(const Graph & g);

/// Fixed color pattern for a cycle u, v1, ..., v_{L-1} through the center,
/// listed edge by edge starting with u-v1:
///   C3: 1, 3, 2     C4: 1, 3, 4, 2     C5: 1, 3, 5, 4, 2
/// `mirrored` swaps 1<->2 and 3<->4 (the C3 chord stays 3).
/// Throws PreconditionError for other lengths.
std::vector<std::pair<Edge, Color>> appropriate_coloring(std::span<const Vertex> cycle, bool mirrored = false);

/// Among the shortest cycles through edge uv, one with the most vertices
/// outside `staged` (u never counts), then the lexicographically smallest
/// vertex sequence. Returned as u, v, ..., last. Throws PreconditionError if
/// uv is a bridge or not an edge.
std::vector<Vertex> shortest_cycle_through_edge(const Graph & g, Vertex u, Vertex v, std::span<const Vertex> staged);

/// Greedy dominator blocks on the subgraph induced by `domain`: the uncovered
/// vertex with most uncovered closed neighbors (smallest index on ties) opens
/// a block while that count is at least 2. Leftovers adjacent to a covered
/// vertex go to overflow_adjacent, the rest to overflow_isolated.
BPartition dominator_partition(const Graph & g, std::span<const Vertex> domain);

/// Hub colors for blocks (1 on dominators, 2 on other members, 1 on
/// overflow_adjacent) followed by the staged cycle loop until N1(u) is covered.
StagedSets build_staged_sets(const Graph & g, Vertex u, const BPartition & bpart, PartialColoring & coloring);

/// Maximal S, T, Q (greatest fixed point), P/L remainder, P_1/P_2 split.
/// When P is empty and L is not, returns the mirrored partition (x and y,
/// s and t, p and l swapped) with mirrored = true; the caller must mirror
/// its colors. Throws PreconditionError when P and L are both nonempty.
SecondShellPartition partition_second_shell(const Graph & g, Vertex u, std::span<const Vertex> x,
                                            std::span<const Vertex> y);

/// Applies the terminal rule set for the trace's staged state and returns the
/// finished coloring. Records the terminal case, partition and provenance.
EdgeColoring color_terminal_case(const Graph & g, ConstructionTrace & trace, PartialColoring & coloring);

struct ConstructionResult
{
    EdgeColoring coloring;
    ConstructionTrace trace;
};

/// Construction around a fixed center, then verification. Throws
/// IneligibleGraph, PreconditionError for a bad center, or ConstructionError
/// when a rule is missing or verification fails.
ConstructionResult five_color_from(const Graph & g, Vertex center);

/// Vertices by eccentricity, smallest index on ties; the first is choose_center.
std::vector<Vertex> center_order(const Graph & g);

/// Rainbow connected coloring with at most 5 colors. Runs five_color_from on
/// each center of center_order until one verifies; if none does, rethrows
/// the failure of the first center.
ConstructionResult five_color(const Graph & g);

/// JSON rendering of the trace with one provenance entry per edge.
std::string trace_to_json(const Graph & g, const ConstructionTrace & trace);

} // namespace rainbow
