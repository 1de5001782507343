#pragma once

#include <rainbow/coloring.hpp>
#include <rainbow/graph.hpp>

#include <cstdint>

namespace rainbow {

struct ExactResult
{
    /// Minimum t when `exhausted`, otherwise the best upper bound known.
    int rc_value = 0;
    EdgeColoring optimal_coloring;
    std::int64_t colorings_tested = 0;
    /// True when every coloring with fewer than rc_value colors was ruled out.
    bool exhausted = false;
};

/// max(1, diameter): a diametral pair needs a path with at least diam distinct colors.
int rc_lower_bound(const Graph & g);

/// Exhaustive rc(G). Colorings are enumerated as restricted-growth strings
/// over the sorted edge list (first edge color 1; color j+1 appears only
/// after color j), so each partition of E(G) into color classes is tested
/// exactly once. `budget` caps the number of colorings tested; when it runs
/// out, or max_colors is passed without success, the all-distinct coloring is
/// returned as the bound with exhausted = false.
ExactResult exact_rc(const Graph & g, int max_colors, std::int64_t budget);

} // namespace rainbow
