#include <rainbow/constructive.hpp>

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace rainbow {

std::string to_string(CycleCase c)
{
    switch (c) {
    case CycleCase::Fresh: return "fresh";
    case CycleCase::FreshExtension: return "fresh-extension";
    case CycleCase::FourOneShared: return "four-one-shared";
    case CycleCase::FourTwoShared: return "four-two-shared";
    case CycleCase::FiveOneShared: return "five-one-shared";
    case CycleCase::FiveTwoShared: return "five-two-shared";
    }
    return "?";
}

std::string to_string(TerminalCase c)
{
    switch (c) {
    case TerminalCase::ShellTwoStaged: return "shell2-staged";
    case TerminalCase::ShellTwoPartitioned: return "shell2-partitioned";
    case TerminalCase::NoSingleNeighborP: return "no-single-neighbor-p";
    case TerminalCase::SingleX: return "single-x";
    case TerminalCase::FreeXVertex: return "free-x-vertex";
    case TerminalCase::AllXSeeP1: return "all-x-see-p1";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// PartialColoring

PartialColoring::PartialColoring(const Graph & g)
    : g_(&g), color_(g.size(), 0), rule_(g.size())
{
}

std::optional<Color> PartialColoring::get(Vertex a, Vertex b) const
{
    auto c = color_[g_->edge_index(a, b)];
    if (c == 0)
        return std::nullopt;
    return c;
}

bool PartialColoring::fill(Vertex a, Vertex b, Color c, const std::string & rule)
{
    auto e = g_->edge_index(a, b);
    if (color_[e] != 0)
        return false;
    color_[e] = c;
    rule_[e] = rule;
    return true;
}

bool PartialColoring::require(Vertex a, Vertex b, Color c, const std::string & rule)
{
    auto e = g_->edge_index(a, b);
    if (color_[e] == 0) {
        color_[e] = c;
        rule_[e] = rule;
        return true;
    }
    return color_[e] == c;
}

namespace {

Color mirror_color(Color c)
{
    switch (c) {
    case 1: return 2;
    case 2: return 1;
    case 3: return 4;
    case 4: return 3;
    default: return c;
    }
}

} // namespace

void PartialColoring::mirror()
{
    for (auto & c : color_)
        c = mirror_color(c);
}

EdgeColoring PartialColoring::finish(Color rest, const std::string & rule)
{
    for (std::size_t e = 0; e < color_.size(); ++e)
        if (color_[e] == 0) {
            color_[e] = rest;
            rule_[e] = rule;
        }
    Color top = color_.empty() ? 1 : *std::max_element(color_.begin(), color_.end());
    return EdgeColoring(top, color_);
}

// ---------------------------------------------------------------------------
// Cycles through the center

Vertex choose_center(const Graph & g)
{
    auto m = metrics(g);
    return m.center_vertices.front();
}

std::vector<std::pair<Edge, Color>> appropriate_coloring(std::span<const Vertex> cycle, bool mirrored)
{
    static const std::vector<Color> c3{1, 3, 2}, c4{1, 3, 4, 2}, c5{1, 3, 5, 4, 2};
    const std::vector<Color> * pattern = nullptr;
    switch (cycle.size()) {
    case 3: pattern = &c3; break;
    case 4: pattern = &c4; break;
    case 5: pattern = &c5; break;
    default:
        throw PreconditionError("appropriate coloring needs a 3-, 4- or 5-cycle, got length " +
                                std::to_string(cycle.size()));
    }

    std::vector<std::pair<Edge, Color>> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Color c = (*pattern)[i];
        if (mirrored && !(cycle.size() == 3 && c == 3))
            c = mirror_color(c);
        out.emplace_back(Edge::canonical(cycle[i], cycle[(i + 1) % cycle.size()]), c);
    }
    return out;
}

std::vector<Vertex> shortest_cycle_through_edge(const Graph & g, Vertex u, Vertex v, std::span<const Vertex> staged)
{
    if (!g.adjacent(u, v))
        throw PreconditionError("not an edge: " + std::to_string(u) + " " + std::to_string(v));

    // Distances to u with the edge uv removed.
    std::vector<int> dist(g.order(), kUnreachable);
    std::vector<Vertex> queue{u};
    dist[u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex a = queue[head];
        for (auto b : g.neighbors(a)) {
            if ((a == u && b == v) || (a == v && b == u))
                continue;
            if (dist[b] == kUnreachable) {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    if (dist[v] == kUnreachable)
        throw PreconditionError("edge " + std::to_string(u) + " " + std::to_string(v) + " lies on no cycle");

    std::vector<char> in_staged(g.order(), 0);
    for (auto s : staged)
        in_staged[s] = 1;

    std::vector<Vertex> best, current{u, v};
    int best_score = -1;
    auto score = [&](const std::vector<Vertex> & cyc) {
        int outside = 0;
        for (std::size_t i = 1; i < cyc.size(); ++i)
            outside += !in_staged[cyc[i]];
        return outside;
    };

    // Neighbors are sorted, so the first cycle found at any score is the
    // lexicographically smallest with that score.
    std::function<void(Vertex)> walk = [&](Vertex a) {
        if (dist[a] == 1) {
            int s = score(current);
            if (s > best_score) {
                best_score = s;
                best = current;
            }
            return;
        }
        for (auto b : g.neighbors(a))
            if (b != u && dist[b] == dist[a] - 1) {
                current.push_back(b);
                walk(b);
                current.pop_back();
            }
    };
    walk(v);
    return best;
}

// ---------------------------------------------------------------------------
// First-shell blocks and staging

BPartition dominator_partition(const Graph & g, std::span<const Vertex> domain)
{
    std::vector<char> in_domain(g.order(), 0), covered(g.order(), 0);
    for (auto v : domain)
        in_domain[v] = 1;

    BPartition part;
    for (;;) {
        Vertex pick = -1;
        int pick_count = 1;
        for (auto v : domain) {
            if (covered[v])
                continue;
            int count = 1;
            for (auto w : g.neighbors(v))
                count += in_domain[w] && !covered[w];
            if (count > pick_count) {
                pick = v;
                pick_count = count;
            }
        }
        if (pick < 0)
            break;

        VertexSet block{pick};
        for (auto w : g.neighbors(pick))
            if (in_domain[w] && !covered[w])
                block.push_back(w);
        std::sort(block.begin(), block.end());
        for (auto w : block)
            covered[w] = 1;
        part.dominators.push_back(pick);
        part.blocks.push_back(std::move(block));
    }

    for (auto v : domain) {
        if (covered[v])
            continue;
        bool touches_block = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                         [&](Vertex w) { return in_domain[w] && covered[w]; });
        (touches_block ? part.overflow_adjacent : part.overflow_isolated).push_back(v);
    }
    return part;
}

namespace {

[[noreturn]] void fail(const std::string & what)
{
    throw ConstructionError(what, ConstructionTrace{});
}

VertexSet members(const std::vector<char> & flags)
{
    VertexSet out;
    for (Vertex v = 0; v < static_cast<Vertex>(flags.size()); ++v)
        if (flags[v])
            out.push_back(v);
    return out;
}

bool consistent(const PartialColoring & coloring, const std::vector<std::pair<Edge, Color>> & pattern)
{
    return std::all_of(pattern.begin(), pattern.end(), [&](const auto & ec) {
        auto have = coloring.get(ec.first.a, ec.first.b);
        return !have || *have == ec.second;
    });
}

} // namespace

StagedSets build_staged_sets(const Graph & g, Vertex u, const BPartition & bpart, PartialColoring & coloring)
{
    for (std::size_t i = 0; i < bpart.blocks.size(); ++i)
        for (auto x : bpart.blocks[i]) {
            bool dom = x == bpart.dominators[i];
            if (!coloring.require(u, x, dom ? 1 : 2, dom ? "hub-dominator" : "hub-block"))
                fail("hub edge already colored");
        }
    for (auto w : bpart.overflow_adjacent)
        if (!coloring.require(u, w, 1, "hub-overflow-adjacent"))
            fail("hub edge already colored");

    auto dist = distances_from(g, u);
    std::vector<char> staged(g.order(), 0);
    for (const auto & block : bpart.blocks)
        for (auto x : block)
            staged[x] = 1;
    for (auto w : bpart.overflow_adjacent)
        staged[w] = 1;

    StagedSets out;
    out.stages.push_back(members(staged));

    for (;;) {
        Vertex target = -1;
        for (Vertex v : g.neighbors(u))
            if (!staged[v]) {
                target = v;
                break;
            }
        if (target < 0)
            break;

        auto cycle = shortest_cycle_through_edge(g, u, target, out.stages.back());
        const auto len = cycle.size();
        if (len != 4 && len != 5)
            fail("shortest cycle through hub edge " + std::to_string(u) + "-" + std::to_string(target) +
                 " has length " + std::to_string(len));

        StagedCycle rec{target, cycle, CycleCase::Fresh, false};
        auto in = [&](std::size_t i) { return staged[cycle[i]] != 0; };
        if (len == 4) {
            if (dist[cycle[2]] != 2 || dist[cycle[3]] != 1)
                fail("4-cycle through the center has an unexpected shape");
            if (!in(2) && !in(3))
                rec.kind = CycleCase::Fresh;
            else if (!in(2) && in(3))
                rec.kind = CycleCase::FourOneShared;
            else if (in(2) && in(3))
                rec.kind = CycleCase::FourTwoShared;
            else
                rec.kind = CycleCase::FreshExtension;
        }
        else {
            if (dist[cycle[2]] != 2 || dist[cycle[3]] != 2 || dist[cycle[4]] != 1)
                fail("5-cycle through the center has an unexpected shape");
            if (in(2))
                fail("5-cycle second vertex already staged, but a 4-cycle would then exist");
            if (!in(3) && !in(4))
                rec.kind = CycleCase::Fresh;
            else if (!in(3) && in(4))
                rec.kind = CycleCase::FiveOneShared;
            else if (in(3) && in(4))
                rec.kind = CycleCase::FiveTwoShared;
            else
                rec.kind = CycleCase::FreshExtension;
        }

        // A staged far hub vertex fixes the orientation: hub color 2 there
        // means the target takes 1, and vice versa.
        bool prefer_mirror = false;
        if (in(len - 1))
            prefer_mirror = coloring.get(u, cycle[len - 1]) == 1;

        auto plain = appropriate_coloring(cycle, prefer_mirror);
        auto other = appropriate_coloring(cycle, !prefer_mirror);
        const std::vector<std::pair<Edge, Color>> * chosen = nullptr;
        if (consistent(coloring, plain)) {
            chosen = &plain;
            rec.mirrored = prefer_mirror;
        }
        else if (consistent(coloring, other)) {
            chosen = &other;
            rec.mirrored = !prefer_mirror;
        }
        else
            fail("no orientation of the cycle through " + std::to_string(target) + " agrees with existing colors");

        const std::string rule = "cycle-" + to_string(rec.kind);
        for (const auto & [e, c] : *chosen)
            coloring.require(e.a, e.b, c, rule);

        for (std::size_t i = 1; i < len; ++i)
            staged[cycle[i]] = 1;
        out.stages.push_back(members(staged));
        out.cycles.push_back(std::move(rec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Second shell

SecondShellPartition partition_second_shell(const Graph & g, Vertex u, std::span<const Vertex> x,
                                            std::span<const Vertex> y)
{
    auto shell2 = shells(g, u).shell2;
    std::vector<char> in_x(g.order(), 0), in_y(g.order(), 0);
    for (auto v : x)
        in_x[v] = 1;
    for (auto v : y)
        in_y[v] = 1;

    enum Kind : char { None, SCand, TCand, QKind };
    std::vector<char> kind(g.order(), None);
    for (auto v : shell2) {
        bool sees_x = false, sees_y = false;
        for (auto w : g.neighbors(v)) {
            sees_x |= in_x[w] != 0;
            sees_y |= in_y[w] != 0;
        }
        if (!sees_x && !sees_y)
            throw PreconditionError("second-shell vertex " + std::to_string(v) + " has no first-shell neighbor");
        kind[v] = sees_x && sees_y ? QKind : (sees_x ? SCand : TCand);
    }

    // Greatest fixed point: drop S-candidates without a T/Q neighbor and
    // T-candidates without an S/Q neighbor until nothing changes.
    std::vector<char> alive(g.order(), 0);
    for (auto v : shell2)
        alive[v] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto v : shell2) {
            if (!alive[v] || kind[v] == QKind)
                continue;
            auto partner = kind[v] == SCand ? TCand : SCand;
            bool ok = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) {
                return alive[w] && (kind[w] == QKind || kind[w] == partner);
            });
            if (!ok) {
                alive[v] = 0;
                changed = true;
            }
        }
    }

    SecondShellPartition part;
    part.x.assign(x.begin(), x.end());
    part.y.assign(y.begin(), y.end());
    for (auto v : shell2) {
        if (kind[v] == QKind)
            part.q.push_back(v);
        else if (kind[v] == SCand)
            (alive[v] ? part.s : part.p).push_back(v);
        else
            (alive[v] ? part.t : part.l).push_back(v);
    }

    if (!part.p.empty() && !part.l.empty())
        throw PreconditionError("both P and L are nonempty; some P-L pair is at distance above 2");
    if (part.p.empty() && !part.l.empty()) {
        std::swap(part.x, part.y);
        std::swap(part.s, part.t);
        std::swap(part.p, part.l);
        std::swap(in_x, in_y);
        part.mirrored = true;
    }

    for (auto p : part.p) {
        int ex = 0;
        for (auto w : g.neighbors(p))
            ex += in_x[w];
        (ex == 1 ? part.p1 : part.p2).push_back(p);
    }
    return part;
}

// ---------------------------------------------------------------------------
// Terminal rule sets

namespace {

/// Membership flags over all vertices for quick lookups.
struct Flags
{
    std::vector<char> bits;
    Flags(int n, std::span<const Vertex> set) : bits(n, 0)
    {
        for (auto v : set)
            bits[v] = 1;
    }
    bool operator()(Vertex v) const { return bits[v] != 0; }
};

VertexSet set_union(const VertexSet & a, const VertexSet & b)
{
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet & a, const VertexSet & b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class Rules
{
public:
    Rules(const Graph & g, PartialColoring & coloring) : g_(g), coloring_(coloring) {}

    void fill_between(const VertexSet & a, const VertexSet & b, Color c, const std::string & rule)
    {
        for (auto e : edges_between(g_, a, b))
            coloring_.fill(e.a, e.b, c, rule);
    }

    void require_between(const VertexSet & a, const VertexSet & b, Color c, const std::string & rule)
    {
        for (auto e : edges_between(g_, a, b))
            if (!coloring_.require(e.a, e.b, c, rule))
                fail("rule " + rule + " conflicts with the color of edge " + std::to_string(e.a) + "-" +
                     std::to_string(e.b));
    }

    void fill_inside(const VertexSet & a, Color c, const std::string & rule) { fill_between(a, a, c, rule); }

private:
    const Graph & g_;
    PartialColoring & coloring_;
};

Vertex first_neighbor_in(const Graph & g, Vertex v, const Flags & set)
{
    for (auto w : g.neighbors(v))
        if (set(w))
            return w;
    return -1;
}

int count_neighbors_in(const Graph & g, Vertex v, const Flags & set)
{
    int c = 0;
    for (auto w : g.neighbors(v))
        c += set(w);
    return c;
}

} // namespace

EdgeColoring color_terminal_case(const Graph & g, ConstructionTrace & trace, PartialColoring & coloring)
{
    const Vertex u = trace.center;
    const auto & shell1 = trace.shells.shell1;
    const auto & shell2 = trace.shells.shell2;
    const auto & staged_final = trace.staged.stages.back();
    const int n = g.order();
    Rules rules(g, coloring);

    if (std::includes(staged_final.begin(), staged_final.end(), shell2.begin(), shell2.end())) {
        trace.terminal = TerminalCase::ShellTwoStaged;
        rules.fill_inside(shell1, 3, "shell1-internal");
        return coloring.finish(1, "used-color");
    }

    VertexSet x, y;
    for (auto v : shell1) {
        auto c = coloring.get(u, v);
        if (!c)
            fail("hub edge to " + std::to_string(v) + " left uncolored by staging");
        (*c == 1 ? x : y).push_back(v);
    }

    SecondShellPartition part;
    try {
        part = partition_second_shell(g, u, x, y);
    }
    catch (const PreconditionError & e) {
        fail(e.what());
    }
    if (part.mirrored) {
        coloring.mirror();
        trace.notes.push_back("P empty and L nonempty: swapped hub colors 1/2 and shell colors 3/4");
    }
    trace.second_shell = part;

    const auto & X = part.x;
    const auto & Y = part.y;
    const auto & S = part.s;
    const auto & T = part.t;
    const auto & Q = part.q;
    const auto & P = part.p;
    const auto TQ = set_union(T, Q);

    rules.require_between(S, X, 3, "shell-s-x");
    rules.require_between(T, Y, 4, "shell-t-y");
    rules.require_between(Q, X, 3, "shell-q-x");
    rules.require_between(Q, Y, 4, "shell-q-y");
    rules.require_between(S, TQ, 5, "shell-s-tq");
    rules.require_between(T, Q, 5, "shell-t-q");

    if (P.empty()) {
        trace.terminal = TerminalCase::ShellTwoPartitioned;
        rules.fill_inside(shell1, 3, "shell1-internal");
        return coloring.finish(1, "used-color");
    }

    const auto & isolated = trace.bpartition.overflow_isolated;
    const Flags in_x(n, X), in_y(n, Y), in_p(n, P), in_isolated(n, isolated);
    const Flags in_p1(n, part.p1);

    for (auto v : isolated)
        if (!in_x(v))
            fail("P nonempty but isolated first-shell vertex " + std::to_string(v) + " has hub color 2");
    for (auto p : part.p1)
        if (count_neighbors_in(g, p, in_isolated) > 0)
            fail("P_1 vertex " + std::to_string(p) + " is adjacent to an isolated first-shell vertex");
    for (auto p : part.p2)
        if (count_neighbors_in(g, p, in_isolated) > 1)
            fail("P_2 vertex " + std::to_string(p) + " has two isolated first-shell neighbors");

    const auto x_open = set_minus(X, isolated); // X \ B_{b+2}
    const Flags in_x_open(n, x_open);

    if (part.p1.empty()) {
        trace.terminal = TerminalCase::NoSingleNeighborP;
        rules.fill_between(X, Y, 3, "p2only-x-y");
        rules.fill_between(P, S, 2, "p2only-p-s");
        rules.fill_inside(P, 5, "p2only-p-p");
        for (auto p : P) {
            Vertex xp = -1;
            for (auto w : g.neighbors(p))
                if (in_x_open(w) && first_neighbor_in(g, w, in_y) >= 0) {
                    xp = w;
                    break;
                }
            if (xp < 0)
                fail("P_2 vertex " + std::to_string(p) + " has no X-neighbor outside B_{b+2} with a Y-neighbor");
            coloring.fill(p, xp, 5, "p2only-p-xp");
            for (auto w : g.neighbors(p))
                if (in_x(w))
                    coloring.fill(p, w, 4, "p2only-p-x");
        }
        return coloring.finish(1, "used-color");
    }

    if (X.size() == 1) {
        trace.terminal = TerminalCase::SingleX;
        const Vertex xv = X.front();
        auto dpart = dominator_partition(g, P);
        VertexSet dominators = dpart.dominators;
        std::sort(dominators.begin(), dominators.end());
        const auto d_leftover = set_union(dpart.overflow_adjacent, dpart.overflow_isolated);
        const auto shell2_rest = set_minus(set_minus(shell2, dominators), d_leftover);
        for (auto v : d_leftover) {
            bool ok = false;
            for (auto w : g.neighbors(v))
                ok |= std::binary_search(shell2.begin(), shell2.end(), w) &&
                      !std::binary_search(dominators.begin(), dominators.end(), w);
            if (!ok)
                fail("leftover P vertex " + std::to_string(v) + " has no second-shell neighbor outside the dominators");
        }
        trace.dpartition = dpart;

        for (std::size_t i = 0; i < dpart.blocks.size(); ++i)
            for (auto p : dpart.blocks[i])
                coloring.fill(xv, p, p == dpart.dominators[i] ? 1 : 2,
                              p == dpart.dominators[i] ? "singlex-x-dominator" : "singlex-x-block");
        for (auto p : d_leftover)
            coloring.fill(xv, p, 1, "singlex-x-leftover");
        rules.fill_between(d_leftover, set_minus(shell2, d_leftover), 4, "singlex-leftover-shell2");
        rules.fill_inside(P, 3, "singlex-p-p");
        rules.fill_inside(shell1, 3, "shell1-internal");
        return coloring.finish(1, "used-color");
    }

    Vertex free_x = -1;
    for (auto xv : x_open)
        if (first_neighbor_in(g, xv, in_p1) < 0) {
            free_x = xv;
            break;
        }

    if (free_x >= 0) {
        trace.terminal = TerminalCase::FreeXVertex;
        VertexSet x1;
        for (auto xv : X)
            if (first_neighbor_in(g, xv, in_p1) >= 0)
                x1.push_back(xv);
        const auto x2 = set_minus(x_open, x1);
        const Flags in_x1(n, x1), in_x2(n, x2);
        const Vertex x2v = x2.front();

        VertexSet p1_prime, p2_prime;
        for (auto p : P)
            (first_neighbor_in(g, p, in_x1) >= 0 ? p1_prime : p2_prime).push_back(p);

        rules.fill_between(x1, Y, 3, "freex-x1-y");
        rules.fill_between(x2, Y, 4, "freex-x2-y");
        rules.fill_between(x1, p1_prime, 1, "freex-x1-p1prime");
        rules.fill_between({x2v}, P, 5, "freex-x2-p");
        for (auto p : p2_prime) {
            if (!g.adjacent(p, x2v)) {
                Vertex xp = first_neighbor_in(g, p, in_x2);
                if (xp < 0)
                    fail("P_2' vertex " + std::to_string(p) + " has no neighbor in X_2");
                coloring.fill(p, xp, 5, "freex-p-xp");
            }
            for (auto w : g.neighbors(p))
                if (in_x(w))
                    coloring.fill(p, w, 3, "freex-p-x");
        }
        rules.fill_inside(P, 2, "freex-p-p");
        rules.fill_between(P, S, 2, "freex-p-s");
        return coloring.finish(1, "used-color");
    }

    trace.terminal = TerminalCase::AllXSeeP1;
    if (x_open.empty())
        fail("every X vertex is isolated in the first shell");
    auto attempt = [&](Vertex x1, PartialColoring & pc) {
        Rules r(g, pc);
        r.fill_between({x1}, P, 5, "allx-x1-p");
        r.fill_between(X, P, 3, "allx-x-p");
        r.fill_between({x1}, Y, 4, "allx-x1-y");
        r.fill_between(X, Y, 1, "allx-x-y");
        r.fill_inside(P, 2, "allx-p-p");
        r.fill_between(P, S, 2, "allx-p-s");
        return pc.finish(1, "used-color");
    };
    for (auto x1 : X) {
        PartialColoring trial = coloring;
        auto out = attempt(x1, trial);
        if (rainbow_connected_fast(g, out.colors(), out.num_colors())) {
            coloring = std::move(trial);
            return out;
        }
    }
    return attempt(x_open.front(), coloring);
}

// ---------------------------------------------------------------------------

ConstructionResult five_color_from(const Graph & g, Vertex center)
{
    auto elig = check_eligibility(g);
    if (!elig.eligible())
        throw IneligibleGraph(elig);
    if (center < 0 || center >= g.order())
        throw PreconditionError("center " + std::to_string(center) + " is not a vertex");

    ConstructionTrace trace;
    PartialColoring coloring(g);
    auto with_trace = [&](const ConstructionError & e) {
        trace.provenance = coloring.provenance();
        return ConstructionError(e.what(), trace, e.violation());
    };

    EdgeColoring result;
    try {
        trace.center = center;
        trace.shells = shells(g, trace.center);
        trace.bpartition = dominator_partition(g, trace.shells.shell1);
        trace.staged = build_staged_sets(g, trace.center, trace.bpartition, coloring);
        result = color_terminal_case(g, trace, coloring);
    }
    catch (const ConstructionError & e) {
        throw with_trace(e);
    }
    trace.provenance = coloring.provenance();

    if (result.num_colors() > 5)
        throw ConstructionError("construction used more than 5 colors", trace);
    auto cert = is_rainbow_connected(g, result);
    trace.certificate = cert;
    if (!cert.connected)
        throw ConstructionError("constructed coloring is not rainbow connected", trace, cert.violation);
    return {std::move(result), std::move(trace)};
}

std::vector<Vertex> center_order(const Graph & g)
{
    auto ecc = metrics(g).eccentricities;
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return ecc[a] < ecc[b]; });
    return order;
}

ConstructionResult five_color(const Graph & g)
{
    auto elig = check_eligibility(g);
    if (!elig.eligible())
        throw IneligibleGraph(elig);

    auto order = center_order(g);
    std::optional<ConstructionError> first;
    for (std::size_t i = 0; i < order.size(); ++i) {
        try {
            auto r = five_color_from(g, order[i]);
            if (i > 0)
                r.trace.notes.push_back("fell back to center " + std::to_string(order[i]) + " after " +
                                        std::to_string(i) + " failed center(s); first failure: " +
                                        first->what());
            return r;
        }
        catch (const ConstructionError & e) {
            if (!first)
                first = e;
        }
    }
    throw *first;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json set_json(const VertexSet & s)
{
    return nlohmann::json(s);
}

nlohmann::json partition_json(const BPartition & b)
{
    nlohmann::json blocks = nlohmann::json::array();
    for (std::size_t i = 0; i < b.blocks.size(); ++i)
        blocks.push_back({{"dominator", b.dominators[i]}, {"members", set_json(b.blocks[i])}});
    return {{"blocks", blocks},
            {"overflow_adjacent", set_json(b.overflow_adjacent)},
            {"overflow_isolated", set_json(b.overflow_isolated)}};
}

} // namespace

std::string trace_to_json(const Graph & g, const ConstructionTrace & trace)
{
    nlohmann::ordered_json j;
    j["center"] = trace.center;
    j["shell1"] = trace.shells.shell1;
    j["shell2"] = trace.shells.shell2;
    j["b_partition"] = partition_json(trace.bpartition);

    nlohmann::json stages = nlohmann::json::array();
    for (const auto & s : trace.staged.stages)
        stages.push_back(s);
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto & c : trace.staged.cycles)
        cycles.push_back({{"target", c.target}, {"cycle", c.cycle}, {"case", to_string(c.kind)},
                          {"mirrored", c.mirrored}});
    j["stages"] = stages;
    j["cycles"] = cycles;

    if (trace.second_shell) {
        const auto & p = *trace.second_shell;
        j["second_shell"] = {{"X", p.x}, {"Y", p.y}, {"S", p.s},   {"T", p.t},   {"Q", p.q},
                             {"P", p.p}, {"L", p.l}, {"P1", p.p1}, {"P2", p.p2}, {"mirrored", p.mirrored}};
    }
    if (trace.dpartition)
        j["d_partition"] = partition_json(*trace.dpartition);
    j["terminal_case"] = trace.terminal ? to_string(*trace.terminal) : std::string("none");

    nlohmann::json edges = nlohmann::json::array();
    for (int e = 0; e < g.size() && e < static_cast<int>(trace.provenance.size()); ++e)
        edges.push_back({{"a", g.edges()[e].a}, {"b", g.edges()[e].b}, {"rule", trace.provenance[e]}});
    j["provenance"] = edges;
    j["notes"] = trace.notes;

    if (trace.certificate) {
        const auto & c = *trace.certificate;
        j["verification"] = {{"connected", c.connected}, {"witness_pairs", c.witnesses.size()}};
        if (c.violation)
            j["verification"]["violation"] = {c.violation->first, c.violation->second};
    }
    return j.dump(2) + "\n";
}

} // namespace rainbow
