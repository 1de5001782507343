#include <rainbow/error.hpp>
#include <rainbow/exact.hpp>

#include <algorithm>

namespace rainbow {

int rc_lower_bound(const Graph & g)
{
    return std::max(1, metrics(g).diameter);
}

namespace {

struct Search
{
    const Graph & g;
    int colors;
    std::int64_t budget;
    std::int64_t tested = 0;
    std::vector<Color> current;
    bool found = false;
    bool out_of_budget = false;

    // Lexicographic DFS over restricted-growth strings whose maximum is
    // exactly `colors`.
    void expand(int edge, int max_so_far)
    {
        const int m = g.size();
        if (edge == m) {
            if (max_so_far != colors)
                return;
            if (tested >= budget) {
                out_of_budget = true;
                return;
            }
            ++tested;
            found = rainbow_connected_fast(g, current, colors);
            return;
        }
        // Not enough edges left to introduce the missing colors.
        if (colors - max_so_far > m - edge)
            return;
        const int top = std::min(colors, max_so_far + 1);
        for (Color col = 1; col <= top && !found && !out_of_budget; ++col) {
            current[edge] = col;
            expand(edge + 1, std::max(max_so_far, col));
        }
    }
};

EdgeColoring all_distinct(const Graph & g)
{
    std::vector<Color> colors(g.size());
    for (int i = 0; i < g.size(); ++i)
        colors[i] = i + 1;
    return EdgeColoring(g.size(), std::move(colors));
}

} // namespace

ExactResult exact_rc(const Graph & g, int max_colors, std::int64_t budget)
{
    if (g.size() == 0)
        throw PreconditionError("graph has no edges");
    const int lower = rc_lower_bound(g); // throws when disconnected
    if (max_colors > kDefaultColorCap)
        throw PreconditionError("max_colors above " + std::to_string(kDefaultColorCap));

    ExactResult result;
    for (int t = lower; t <= std::min(max_colors, g.size()); ++t) {
        Search search{g, t, budget - result.colorings_tested, 0, std::vector<Color>(g.size(), 0)};
        search.current[0] = 1;
        search.expand(1, 1);
        result.colorings_tested += search.tested;
        if (search.found) {
            result.rc_value = t;
            result.optimal_coloring = EdgeColoring(t, search.current);
            result.exhausted = true;
            return result;
        }
        if (search.out_of_budget)
            break;
    }

    result.rc_value = g.size();
    result.optimal_coloring = all_distinct(g);
    result.exhausted = false;
    return result;
}

} // namespace rainbow
