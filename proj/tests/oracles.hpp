#pragma once
// Brute-force reference implementations. These deliberately avoid the library algorithms
// they are used to check; only the graph container and group arithmetic are shared.
#include <utility>
#include <vector>

#include "glab/lgraph.hpp"
#include "glab/models.hpp"

namespace oracle {

using glab::Elem;
using glab::LGraph;

struct RawCycle {
    std::vector<int> edges;  // sorted edge ids
    std::vector<int> verts;  // sorted vertex ids
    Elem weight;
};

// every edge subset that forms one cycle; needs m <= 22
std::vector<RawCycle> cycles_by_subsets(const LGraph& g);
// depth-first enumeration from the smallest vertex of each cycle
std::vector<RawCycle> cycles_by_dfs(const LGraph& g);
bool bipartite(const LGraph& g);  // via cycles_by_dfs

// A-paths with nonzero weight, as sorted vertex sets (one per distinct path)
std::vector<std::vector<int>> nonzero_a_paths(const LGraph& g, const std::vector<int>& A);

// exhaustive set packing / covering on explicit vertex sets
int max_disjoint(const std::vector<std::vector<int>>& sets);
int max_half(const std::vector<std::vector<int>>& sets, bool repetition);  // k with 2k members
int min_hitting(const std::vector<std::vector<int>>& sets, const std::vector<int>& universe);

// separation by <= 2 other vertices, via deleting every candidate pair
bool separable(const LGraph& g, int u, int v);

std::vector<int> central_vertices(const glab::KModel& m, int i, int d);

// linkage pair kind from endpoint positions: 0 series, 1 nested, 2 crossing
int pair_kind(std::pair<int, int> a, std::pair<int, int> b);
// size of the largest pure subset (all pairs of one kind)
int max_pure(const std::vector<std::pair<int, int>>& ends);

}  // namespace oracle
