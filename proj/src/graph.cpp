#include <rainbow/error.hpp>
#include <rainbow/graph.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>

namespace rainbow {

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges))
{
    if (n < 0)
        throw PreconditionError("negative vertex count");

    for (auto & e : edges_) {
        if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n)
            throw PreconditionError("edge endpoint out of range");
        if (e.a == e.b)
            throw PreconditionError("self-loop at vertex " + std::to_string(e.a));
        e = Edge::canonical(e.a, e.b);
    }

    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw PreconditionError("duplicate edge " + std::to_string(dup->a) + " " + std::to_string(dup->b));

    adjacency_.assign(n_, {});
    edge_index_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (int i = 0; i < size(); ++i) {
        auto [a, b] = edges_[i];
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
        edge_index_[index(a, b)] = i;
        edge_index_[index(b, a)] = i;
    }
    for (auto & nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

namespace {

bool parse_vertex(std::string_view token, Vertex & out)
{
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size() && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::vector<Edge> edges;
    std::vector<int> first_seen_line;
    int max_vertex = -1;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = line.substr(0, line.find('#'));
        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;
        if (tokens.size() != 2)
            throw ParseError("expected two vertex indices, got " + std::to_string(tokens.size()) + " tokens", line_no);

        Vertex a = 0, b = 0;
        if (!parse_vertex(tokens[0], a) || !parse_vertex(tokens[1], b))
            throw ParseError("malformed vertex index", line_no);
        if (a == b)
            throw ParseError("self-loop at vertex " + std::to_string(a), line_no);

        edges.push_back(Edge::canonical(a, b));
        first_seen_line.push_back(line_no);
        max_vertex = std::max({max_vertex, a, b});
    }

    if (edges.empty())
        throw ParseError("no edges", 0);

    std::vector<int> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return edges[x] < edges[y]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (edges[order[i]] == edges[order[i - 1]])
            throw ParseError("duplicate edge " + std::to_string(edges[order[i]].a) + " " +
                                 std::to_string(edges[order[i]].b),
                             first_seen_line[order[i]]);

    return Graph(max_vertex + 1, std::move(edges));
}

std::string write_edge_list(const Graph & g)
{
    std::ostringstream out;
    for (auto [a, b] : g.edges())
        out << a << ' ' << b << '\n';
    return out.str();
}

std::vector<int> distances_from(const Graph & g, Vertex source)
{
    std::vector<int> dist(g.order(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

bool is_connected(const Graph & g)
{
    if (g.order() == 0)
        return true;
    auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

Metrics metrics(const Graph & g)
{
    if (g.order() == 0)
        throw PreconditionError("empty graph");

    Metrics m;
    m.eccentricities.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto dist = distances_from(g, v);
        int ecc = *std::max_element(dist.begin(), dist.end());
        if (ecc == kUnreachable)
            throw PreconditionError("graph is disconnected");
        m.eccentricities[v] = ecc;
    }
    m.radius = *std::min_element(m.eccentricities.begin(), m.eccentricities.end());
    m.diameter = *std::max_element(m.eccentricities.begin(), m.eccentricities.end());
    for (Vertex v = 0; v < g.order(); ++v)
        if (m.eccentricities[v] == m.radius)
            m.center_vertices.push_back(v);
    return m;
}

std::vector<Edge> bridges(const Graph & g)
{
    // Iterative low-link DFS; the parent edge is skipped by index so that
    // the search never walks straight back along the tree edge.
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> result;
    int timer = 0;

    struct Frame
    {
        Vertex v;
        int parent_edge;
        std::size_t next;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto & top = stack.back();
            auto nbrs = g.neighbors(top.v);
            if (top.next < nbrs.size()) {
                Vertex w = nbrs[top.next++];
                int e = g.edge_index(top.v, w);
                if (e == top.parent_edge)
                    continue;
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                }
                else
                    low[top.v] = std::min(low[top.v], disc[w]);
            }
            else {
                Frame done = top;
                stack.pop_back();
                if (!stack.empty()) {
                    auto & parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (low[done.v] > disc[parent.v])
                        result.push_back(Edge::canonical(parent.v, done.v));
                }
            }
        }
    }

    std::sort(result.begin(), result.end());
    return result;
}

ShellDecomposition shells(const Graph & g, Vertex u)
{
    ShellDecomposition s{u, {}, {}};
    auto dist = distances_from(g, u);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (dist[v] == 1)
            s.shell1.push_back(v);
        else if (dist[v] == 2)
            s.shell2.push_back(v);
    }
    return s;
}

std::vector<Edge> edges_between(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y)
{
    std::vector<char> in_x(g.order(), 0), in_y(g.order(), 0);
    for (auto v : x)
        in_x[v] = 1;
    for (auto v : y)
        in_y[v] = 1;

    std::vector<Edge> result;
    for (auto e : g.edges())
        if ((in_x[e.a] && in_y[e.b]) || (in_y[e.a] && in_x[e.b]))
            result.push_back(e);
    return result;
}

bool is_independent(const Graph & g, std::span<const Vertex> x)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (g.adjacent(x[i], x[j]))
                return false;
    return true;
}

bool is_clique(const Graph & g, std::span<const Vertex> x)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!g.adjacent(x[i], x[j]))
                return false;
    return true;
}

std::string Eligibility::reason() const
{
    if (eligible())
        return "eligible";
    if (!connected)
        return "disconnected";
    std::string why;
    if (bridge_count > 0)
        why = "bridges";
    if (diameter != 2)
        why += (why.empty() ? "" : ", ") + std::string("diam=") + std::to_string(diameter);
    return why;
}

Eligibility check_eligibility(const Graph & g)
{
    Eligibility e;
    e.connected = g.order() > 0 && is_connected(g);
    e.bridge_count = static_cast<int>(bridges(g).size());
    if (e.connected)
        e.diameter = metrics(g).diameter;
    return e;
}

} // namespace rainbow
