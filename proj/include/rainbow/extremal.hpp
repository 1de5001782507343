#pragma once

#include <rainbow/coloring.hpp>
#include <rainbow/graph.hpp>

#include <utility>

namespace rainbow {

/// Vertex roles in the sharpness family G_k: hub u = 0, middle v_i = i and
/// clique w_i = k + i for i = 1..k. Path i is u - v_i - w_i; the w_i form a clique.
struct ExtremalSpec
{
    int k = 0;

    Vertex hub() const { return 0; }
    Vertex middle(int i) const { return i; }
    Vertex clique(int i) const { return k + i; }
    VertexSet middle_layer() const;
    VertexSet clique_layer() const;
};

/// Smallest k for which every 4-coloring of G_k has two identically colored
/// u-v_i-w_i paths (16 color pairs, 17 paths).
inline constexpr int kPigeonholeK = 17;

/// G_k for k >= 2: n = 2k + 1, m = 2k + k(k-1)/2. Throws PreconditionError for k < 2.
std::pair<Graph, ExtremalSpec> gen_extremal(int k);

/// The 5-coloring c(u v_1) = 1, c(v_1 w_1) = 2, c(u v_i) = 3 and
/// c(v_i w_i) = 4 for i >= 2, every clique edge 5.
EdgeColoring canonical_coloring(int k);

/// Lexicographically smallest (i, j), i < j, with c(u v_i) = c(u v_j) and
/// c(v_i w_i) = c(v_j w_j). Requires k >= 17 and at most 4 colors.
std::pair<int, int> pigeonhole_pair(const Graph & g, const ExtremalSpec & spec, const EdgeColoring & c);

struct FourColoringRefutation
{
    std::pair<int, int> pair;          ///< path indices i < j
    VertexPair vertices;               ///< (v_i, v_j)
    bool rainbow_path_exists = false;  ///< always false on return
};

/// Confirms with the exact verifier that v_i and v_j from pigeonhole_pair have
/// no rainbow path under c. Throws InternalFault if one is found.
FourColoringRefutation refute_four_coloring(const Graph & g, const ExtremalSpec & spec, const EdgeColoring & c);

} // namespace rainbow
