#include <rainbow/extremal.hpp>
#include <rainbow/generator.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rainbow {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t r;
    do
        r = next();
    while (r >= limit);
    return r % bound;
}

std::string to_string(Model m)
{
    switch (m) {
    case Model::UniformRejection: return "uniform-rejection";
    case Model::HubAugmented: return "hub-augmented";
    case Model::ExtremalPerturbed: return "extremal-perturbed";
    }
    return "?";
}

Model parse_model(const std::string & name)
{
    for (auto m : {Model::UniformRejection, Model::HubAugmented, Model::ExtremalPerturbed})
        if (to_string(m) == name)
            return m;
    throw PreconditionError("unknown model '" + name + "'");
}

namespace {

Graph sample_uniform(int n, SplitMix64 & rng)
{
    const double p = std::min(0.95, 3.0 * std::log(static_cast<double>(n)) / n);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (rng.chance(p))
                edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

Graph sample_hub(int n, SplitMix64 & rng)
{
    const int shell1 = rng.between(2, n - 1);
    const double to_shell1 = 0.15 + 0.5 * rng.unit();
    const double inside1 = 0.4 * rng.unit();
    const double inside2 = 0.5 * rng.unit();

    // Hub is 0, first shell 1..shell1, the rest form the second shell.
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= shell1; ++v)
        edges.push_back({0, v});
    for (Vertex a = 1; a <= shell1; ++a)
        for (Vertex b = a + 1; b <= shell1; ++b)
            if (rng.chance(inside1))
                edges.push_back({a, b});
    for (Vertex w = shell1 + 1; w < n; ++w) {
        bool any = false;
        for (Vertex v = 1; v <= shell1; ++v)
            if (rng.chance(to_shell1)) {
                edges.push_back({v, w});
                any = true;
            }
        if (!any)
            edges.push_back({rng.between(1, shell1), w});
        for (Vertex z = w + 1; z < n; ++z)
            if (rng.chance(inside2))
                edges.push_back({w, z});
    }

    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(label[i], label[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    for (auto & e : edges)
        e = Edge::canonical(label[e.a], label[e.b]);
    return Graph(n, std::move(edges));
}

Graph sample_extremal(int n, std::optional<int> extra, SplitMix64 & rng)
{
    const int k = std::max(2, (n - 1) / 2);
    auto [g, spec] = gen_extremal(k);

    std::vector<Edge> candidates;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (i != j)
                candidates.push_back(Edge::canonical(spec.middle(i), spec.clique(j)));
            if (i < j)
                candidates.push_back(Edge::canonical(spec.middle(i), spec.middle(j)));
        }
    std::sort(candidates.begin(), candidates.end());

    const int count = std::clamp(extra ? *extra : rng.between(1, k), 0, static_cast<int>(candidates.size()));
    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < count; ++i) {
        auto j = i + static_cast<int>(rng.below(candidates.size() - static_cast<std::size_t>(i)));
        std::swap(candidates[i], candidates[j]);
        edges.push_back(candidates[i]);
    }
    return Graph(g.order(), std::move(edges));
}

} // namespace

Graph random_diam2_bridgeless(const GenModel & model)
{
    if (model.n < 4)
        throw PreconditionError("random generation needs n >= 4");

    SplitMix64 rng(model.seed);
    for (int attempt = 0; attempt < model.max_attempts; ++attempt) {
        Graph g;
        switch (model.model) {
        case Model::UniformRejection: g = sample_uniform(model.n, rng); break;
        case Model::HubAugmented: g = sample_hub(model.n, rng); break;
        case Model::ExtremalPerturbed: g = sample_extremal(model.n, model.extra_edges, rng); break;
        }
        if (check_eligibility(g).eligible())
            return g;
    }
    throw GeneratorExhausted("no eligible " + to_string(model.model) + " graph on " + std::to_string(model.n) +
                             " vertices after " + std::to_string(model.max_attempts) +
                             " attempts; try a different n or a larger max_attempts");
}

} // namespace rainbow
