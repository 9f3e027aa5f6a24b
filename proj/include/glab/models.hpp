#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glab/chains.hpp"
#include "glab/lgraph.hpp"

namespace glab {

// K_t-model: disjoint trees plus one host edge between every pair of trees. Indices are 0-based.
struct KModel {
    LGraph host;
    int t = 0;
    std::vector<std::vector<int>> tree_verts;
    std::vector<std::vector<int>> tree_edges;
    std::vector<std::vector<int>> conn;  // t x t, conn[i][j] == conn[j][i] is a host edge id, -1 on the diagonal

    int endpoint(int i, int j) const;  // the end of conn[i][j] inside tree i
};

std::optional<std::string> validate_model(const KModel& m);

// union of the trees in U and the connecting edges among them
LGraph model_subgraph(const KModel& m, const std::vector<int>& U);
LGraph tree_graph(const KModel& m, int i);

enum class ModelClass { gamma_odd, gamma_bipartite, mixed };
std::string to_string(ModelClass c);

struct ClassifyResult {
    ModelClass verdict = ModelClass::mixed;
    std::vector<std::vector<int>> subsets;  // all 4-subsets in lex order
    std::vector<char> nonzero;              // per subset
    std::vector<std::optional<Cycle>> witness;
};
ClassifyResult classify_model(const KModel& m, int64_t cap = kDefaultCap);

// number of indices j != i whose connection endpoint lies at each tree vertex
std::vector<int> endpoint_counts(const KModel& m, int i);  // aligned with tree_graph(m, i).vertices()

bool is_d_central(const KModel& m, int i, int v, int d);
// walk to one central vertex, then flood the subtree of central vertices
std::vector<int> d_central_vertices(const KModel& m, int i, int d);
bool is_d_branching(const KModel& m, int i, int u, int d);
// does u branch to three indices outside Y (direct check of the 3-star condition)
bool branches_avoiding(const KModel& m, int i, int u, const std::vector<int>& Y);

// Lemma-style extraction; the group must have no involution and the model must be gamma-odd
CycleChain chain_from_odd_model(const KModel& m, int l);
std::vector<ClosedCycleChain> closed_chains_from_model(const KModel& m, int k, int l);

}  // namespace glab
