#pragma once
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "glab/chains.hpp"
#include "glab/linkages.hpp"
#include "glab/models.hpp"
#include "glab/walls.hpp"

namespace glab {

// seeded source; modulo reduction keeps sequences identical across standard libraries
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    int uniform(int n) { return (int)(eng() % (uint64_t)n); }  // [0, n)
    Elem element(const Group& g);
    Elem nonzero_element(const Group& g);
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = (int)v.size() - 1; i > 0; i--) std::swap(v[i], v[uniform(i + 1)]);
    }
};

// n x n grid, vertex (r,c) has id (r-1)*n + (c-1). Edges are added per vertex in row-major
// order, right neighbour first, then the one below; then (1,i)-(n,n-i+1) for i = 1..k labelled g.
LGraph projective_grid(int n, const Group& group, const Elem& g, int k);
// Z/m labelled grid with label l on all n cross edges
LGraph dnl_instance(int n, int m, int l);

// weights are per brick in row-major order (i = 1..r, j = 1..s). The designated edge of
// brick (i,j) is its top-left horizontal edge; it is the only edge given a nonzero label.
Wall facially_odd_wall(int r, int s, const Group& group, const std::vector<Elem>& weights);
Wall facially_odd_wall(int r, int s, const Group& group, uint64_t seed);

struct WallLinkage {
    Wall wall;
    Linkage linkage;
};
// r x 4n wall with zero labels and n external paths on every other top nail; each path has one
// internal vertex and weight weights[i]. With shifts > 0 the host is then shifted at random.
WallLinkage bipartite_wall_with_linkage(int r, PairKind purity, const std::vector<Elem>& weights,
                                        const Group& group, uint64_t seed = 0, int shifts = 0);

// relabels g with zero labels shifted `shifts` times at random vertices by random involutions
LGraph random_bipartite_labelling(const LGraph& g, const Group& group, uint64_t seed, int shifts);
// as above, then one non-bridge edge gets a nonzero offset, so every cycle through it is nonzero
struct Planted {
    LGraph g;
    int edge = -1;
};
Planted planted_nonzero(const LGraph& g, const Group& group, uint64_t seed, int shifts);

// random multigraph on vertices 0..n-1 with uniformly random labels
LGraph random_graph(int n, int m, const Group& group, uint64_t seed, bool loops = true);

// random trees of 1..max_tree vertices joined by one edge per pair
KModel random_model(int t, const Group& group, int max_tree, uint64_t seed, bool random_labels);
// edge_weights, when given, label the connecting edges in lexicographic pair order
KModel odd_model(int t, const Group& group, const std::optional<std::vector<Elem>>& edge_weights, int max_tree,
                 uint64_t seed, int retries = 50);

struct ChainInstance {
    LGraph g;
    ClosedCycleChain chain;
};
// cycle c_0..c_{3q-1}; link i reroutes c_{3i} c_{3i+1} c_{3i+2} through a new vertex. Increments
// are random elements of Z/p^a outside <p>.
ChainInstance ladder_closed_chain(int p, int a, int q, uint64_t seed);

struct LinkageInstance {
    LGraph g;
    Linkage linkage;
};
// X = 0..2n-1 matched at random; path i runs through the new vertex 2n+i
LinkageInstance random_linkage(int n, uint64_t seed);

}  // namespace glab
