#include <rainbow/error.hpp>
#include <rainbow/extremal.hpp>

#include <map>

namespace rainbow {

VertexSet ExtremalSpec::middle_layer() const
{
    VertexSet layer;
    for (int i = 1; i <= k; ++i)
        layer.push_back(middle(i));
    return layer;
}

VertexSet ExtremalSpec::clique_layer() const
{
    VertexSet layer;
    for (int i = 1; i <= k; ++i)
        layer.push_back(clique(i));
    return layer;
}

std::pair<Graph, ExtremalSpec> gen_extremal(int k)
{
    if (k < 2)
        throw PreconditionError("extremal family needs k >= 2, got " + std::to_string(k));

    ExtremalSpec spec{k};
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) {
        edges.push_back(Edge::canonical(spec.hub(), spec.middle(i)));
        edges.push_back(Edge::canonical(spec.middle(i), spec.clique(i)));
        for (int j = i + 1; j <= k; ++j)
            edges.push_back(Edge::canonical(spec.clique(i), spec.clique(j)));
    }
    return {Graph(2 * k + 1, std::move(edges)), spec};
}

EdgeColoring canonical_coloring(int k)
{
    auto [g, spec] = gen_extremal(k);
    std::vector<Color> colors(g.size(), 5);
    for (int i = 1; i <= k; ++i) {
        colors[g.edge_index(spec.hub(), spec.middle(i))] = i == 1 ? 1 : 3;
        colors[g.edge_index(spec.middle(i), spec.clique(i))] = i == 1 ? 2 : 4;
    }
    return EdgeColoring(5, std::move(colors));
}

std::pair<int, int> pigeonhole_pair(const Graph & g, const ExtremalSpec & spec, const EdgeColoring & c)
{
    if (spec.k < kPigeonholeK)
        throw PreconditionError("pigeonhole needs k >= 17, got " + std::to_string(spec.k));
    if (c.colors_used() > 4)
        throw PreconditionError("pigeonhole needs a coloring with at most 4 colors");
    if (c.edge_count() != g.size())
        throw PreconditionError("coloring does not match graph");

    // The smallest pair is the two lowest indices of some (hub, spoke) color
    // type, minimized over types.
    std::map<std::pair<Color, Color>, std::vector<int>> by_type;
    for (int i = 1; i <= spec.k; ++i)
        by_type[{c.at(g, spec.hub(), spec.middle(i)), c.at(g, spec.middle(i), spec.clique(i))}].push_back(i);

    std::pair<int, int> best{0, 0};
    for (const auto & [type, indices] : by_type)
        if (indices.size() >= 2) {
            std::pair<int, int> candidate{indices[0], indices[1]};
            if (best.first == 0 || candidate < best)
                best = candidate;
        }
    if (best.first == 0)
        throw InternalFault("no colliding path pair under a <= 4 coloring of G_" + std::to_string(spec.k));
    return best;
}

FourColoringRefutation refute_four_coloring(const Graph & g, const ExtremalSpec & spec, const EdgeColoring & c)
{
    FourColoringRefutation r;
    r.pair = pigeonhole_pair(g, spec, c);
    r.vertices = {spec.middle(r.pair.first), spec.middle(r.pair.second)};
    auto reach = rainbow_reachable(g, c, r.vertices.first);
    r.rainbow_path_exists = reach.reachable[r.vertices.second];
    if (r.rainbow_path_exists)
        throw InternalFault("rainbow path between v_" + std::to_string(r.pair.first) + " and v_" +
                            std::to_string(r.pair.second) + " under a 4-coloring of G_" + std::to_string(spec.k));
    return r;
}

} // namespace rainbow
