#include <rainbow/coloring.hpp>
#include <rainbow/error.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

namespace rainbow {

EdgeColoring::EdgeColoring(int num_colors, std::vector<Color> colors)
    : num_colors_(num_colors), colors_(std::move(colors))
{
    if (num_colors_ < 1)
        throw PreconditionError("a coloring needs at least one color");
    for (auto col : colors_)
        if (col < 1 || col > num_colors_)
            throw PreconditionError("color " + std::to_string(col) + " outside 1.." + std::to_string(num_colors_));
}

int EdgeColoring::colors_used() const
{
    std::set<Color> used(colors_.begin(), colors_.end());
    return static_cast<int>(used.size());
}

std::string write_coloring(const Graph & g, const EdgeColoring & c)
{
    if (c.edge_count() != g.size())
        throw PreconditionError("coloring does not match graph");
    std::ostringstream out;
    out << "num_colors " << c.num_colors() << '\n';
    out << "edges " << g.size() << '\n';
    for (int i = 0; i < g.size(); ++i)
        out << g.edges()[i].a << ' ' << g.edges()[i].b << ' ' << c[i] << '\n';
    return out.str();
}

namespace {

class LineReader
{
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    /// Next non-blank, non-comment line split on whitespace; empty at end.
    std::vector<std::string_view> next()
    {
        while (pos_ <= text_.size()) {
            auto nl = text_.find('\n', pos_);
            auto line = text_.substr(pos_, nl == std::string_view::npos ? std::string_view::npos : nl - pos_);
            pos_ = nl == std::string_view::npos ? text_.size() + 1 : nl + 1;
            ++line_;
            line = line.substr(0, line.find('#'));
            std::vector<std::string_view> tokens;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t j = i;
                while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                    ++j;
                if (j > i)
                    tokens.push_back(line.substr(i, j - i));
                i = j;
            }
            if (!tokens.empty())
                return tokens;
        }
        return {};
    }

    int line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

int to_int(std::string_view token, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("malformed integer '" + std::string(token) + "'", line);
    return value;
}

int header_field(LineReader & reader, std::string_view key)
{
    auto tokens = reader.next();
    if (tokens.size() != 2 || tokens[0] != key)
        throw ParseError("expected '" + std::string(key) + " <value>'", reader.line());
    return to_int(tokens[1], reader.line());
}

} // namespace

EdgeColoring read_coloring(const Graph & g, std::string_view text)
{
    LineReader reader(text);
    int num_colors = header_field(reader, "num_colors");
    int m = header_field(reader, "edges");
    if (num_colors < 1)
        throw ParseError("num_colors must be positive", 1);
    if (m != g.size())
        throw ParseError("coloring has " + std::to_string(m) + " edges, graph has " + std::to_string(g.size()),
                         reader.line());

    std::vector<Color> colors(g.size(), 0);
    for (int i = 0; i < m; ++i) {
        auto tokens = reader.next();
        if (tokens.size() != 3)
            throw ParseError("expected '<a> <b> <color>'", reader.line());
        int a = to_int(tokens[0], reader.line());
        int b = to_int(tokens[1], reader.line());
        int col = to_int(tokens[2], reader.line());
        if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b))
            throw ParseError("edge " + std::to_string(a) + " " + std::to_string(b) + " is not in the graph",
                             reader.line());
        if (col < 1 || col > num_colors)
            throw ParseError("color out of range", reader.line());
        int e = g.edge_index(a, b);
        if (colors[e] != 0)
            throw ParseError("edge colored twice", reader.line());
        colors[e] = col;
    }
    if (!reader.next().empty())
        throw ParseError("trailing content after edge list", reader.line());

    return EdgeColoring(num_colors, std::move(colors));
}

namespace {

void check_coloring(const Graph & g, const EdgeColoring & c, int color_cap)
{
    if (c.edge_count() != g.size())
        throw PreconditionError("coloring covers " + std::to_string(c.edge_count()) + " edges, graph has " +
                                std::to_string(g.size()));
    if (c.num_colors() > color_cap)
        throw PreconditionError("coloring has " + std::to_string(c.num_colors()) + " colors; cap is " +
                                std::to_string(color_cap));
}

} // namespace

RainbowReach rainbow_reachable(const Graph & g, const EdgeColoring & c, Vertex source, int color_cap)
{
    check_coloring(g, c, color_cap);
    const int t = c.num_colors();
    const std::size_t subsets = std::size_t{1} << t;
    auto state = [&](Vertex v, std::uint32_t mask) { return static_cast<std::size_t>(v) * subsets + mask; };

    // Breadth-first over (vertex, used colors). The first state reached for a
    // vertex is a shortest rainbow walk to it, and a shortest rainbow walk
    // cannot repeat a vertex, so it is a path.
    std::vector<std::int64_t> parent(static_cast<std::size_t>(g.order()) * subsets, -1);
    std::vector<std::int64_t> first_hit(g.order(), -1);
    std::vector<std::size_t> frontier{state(source, 0)};
    parent[frontier.front()] = static_cast<std::int64_t>(frontier.front());
    first_hit[source] = static_cast<std::int64_t>(frontier.front());

    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto s : frontier) {
            Vertex v = static_cast<Vertex>(s / subsets);
            auto mask = static_cast<std::uint32_t>(s % subsets);
            for (auto w : g.neighbors(v)) {
                std::uint32_t bit = std::uint32_t{1} << (c.at(g, v, w) - 1);
                if (mask & bit)
                    continue;
                auto ns = state(w, mask | bit);
                if (parent[ns] >= 0)
                    continue;
                parent[ns] = static_cast<std::int64_t>(s);
                if (first_hit[w] < 0)
                    first_hit[w] = static_cast<std::int64_t>(ns);
                next.push_back(ns);
            }
        }
        frontier = std::move(next);
    }

    RainbowReach r;
    r.source = source;
    r.reachable.assign(g.order(), false);
    r.witness.assign(g.order(), {});
    for (Vertex v = 0; v < g.order(); ++v) {
        if (first_hit[v] < 0)
            continue;
        r.reachable[v] = true;
        std::vector<Vertex> path;
        for (auto s = static_cast<std::size_t>(first_hit[v]);; s = static_cast<std::size_t>(parent[s])) {
            path.push_back(static_cast<Vertex>(s / subsets));
            if (static_cast<std::size_t>(parent[s]) == s)
                break;
        }
        std::reverse(path.begin(), path.end());
        r.witness[v] = std::move(path);
    }
    return r;
}

RainbowCertificate is_rainbow_connected(const Graph & g, const EdgeColoring & c, int color_cap)
{
    check_coloring(g, c, color_cap);
    if (!is_connected(g))
        throw PreconditionError("graph is disconnected");

    RainbowCertificate cert;
    cert.connected = true;
    for (Vertex s = 0; s + 1 < g.order(); ++s) {
        auto reach = rainbow_reachable(g, c, s, color_cap);
        for (Vertex v = s + 1; v < g.order(); ++v) {
            if (!reach.reachable[v]) {
                cert.connected = false;
                cert.violation = VertexPair{s, v};
                return cert;
            }
            cert.witnesses.emplace(VertexPair{s, v}, std::move(reach.witness[v]));
        }
    }
    return cert;
}

namespace {

// kFree[c] has bit m set iff subset m (of six colors) does not contain color c.
constexpr std::array<std::uint64_t, 6> make_free_masks()
{
    std::array<std::uint64_t, 6> free{};
    for (int col = 0; col < 6; ++col)
        for (int m = 0; m < 64; ++m)
            if (!(m & (1 << col)))
                free[col] |= std::uint64_t{1} << m;
    return free;
}

constexpr auto kFree = make_free_masks();

bool rainbow_connected_wide(const Graph & g, std::span<const Color> colors, int num_colors)
{
    const std::size_t subsets = std::size_t{1} << num_colors;
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n) * subsets);
    std::vector<char> hit(n);
    std::vector<std::size_t> stack;
    for (Vertex s = 0; s + 1 < n; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        std::fill(hit.begin(), hit.end(), 0);
        stack.assign(1, static_cast<std::size_t>(s) * subsets);
        seen[stack.front()] = hit[s] = 1;
        while (!stack.empty()) {
            auto st = stack.back();
            stack.pop_back();
            auto v = static_cast<Vertex>(st / subsets);
            auto mask = st % subsets;
            for (auto w : g.neighbors(v)) {
                std::size_t bit = std::size_t{1} << (colors[g.edge_index(v, w)] - 1);
                if (mask & bit)
                    continue;
                auto ns = static_cast<std::size_t>(w) * subsets + (mask | bit);
                if (!seen[ns]) {
                    seen[ns] = hit[w] = 1;
                    stack.push_back(ns);
                }
            }
        }
        for (Vertex v = s + 1; v < n; ++v)
            if (!hit[v])
                return false;
    }
    return true;
}

} // namespace

bool rainbow_connected_fast(const Graph & g, std::span<const Color> colors, int num_colors)
{
    if (num_colors > kDefaultColorCap)
        throw PreconditionError("too many colors for rainbow search");
    if (num_colors > 6)
        return rainbow_connected_wide(g, colors, num_colors);

    // Each vertex holds a 64-bit set of color subsets that label a rainbow
    // walk from the source. Extending by an edge of color c moves subset m to
    // m | (1 << c), which is a left shift by 2^c on the positions where c is free.
    const int n = g.order();
    std::vector<std::uint64_t> reach(n), layer(n), next(n);
    for (Vertex s = 0; s + 1 < n; ++s) {
        std::fill(reach.begin(), reach.end(), 0);
        std::fill(layer.begin(), layer.end(), 0);
        reach[s] = layer[s] = 1;
        for (int step = 0; step < num_colors; ++step) {
            std::fill(next.begin(), next.end(), 0);
            bool grew = false;
            for (Vertex v = 0; v < n; ++v) {
                if (!layer[v])
                    continue;
                for (auto w : g.neighbors(v)) {
                    int col = colors[g.edge_index(v, w)] - 1;
                    next[w] |= (layer[v] & kFree[col]) << (1u << col);
                }
            }
            for (Vertex v = 0; v < n; ++v) {
                next[v] &= ~reach[v];
                reach[v] |= next[v];
                grew |= next[v] != 0;
            }
            if (!grew)
                break;
            std::swap(layer, next);
        }
        for (Vertex v = s + 1; v < n; ++v)
            if (!reach[v])
                return false;
    }
    return true;
}

bool is_rainbow_path(const Graph & g, const EdgeColoring & c, std::span<const Vertex> path)
{
    if (path.empty())
        return false;
    std::set<Vertex> seen(path.begin(), path.end());
    if (seen.size() != path.size())
        return false;
    std::set<Color> used;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.adjacent(path[i], path[i + 1]))
            return false;
        if (!used.insert(c.at(g, path[i], path[i + 1])).second)
            return false;
    }
    return true;
}

} // namespace rainbow
