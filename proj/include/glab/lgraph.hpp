#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "glab/group.hpp"

namespace glab {

constexpr int64_t kDefaultCap = 1000000;

struct Edge {
    int id = 0;
    int u = 0, v = 0;
    Elem label;
    bool loop() const { return u == v; }
};

// verts.size() == edges.size() + 1; edges[i] joins verts[i] and verts[i+1]
struct Path {
    std::vector<int> verts;
    std::vector<int> edges;

    bool trivial() const { return edges.empty(); }
    int front() const { return verts.front(); }
    int back() const { return verts.back(); }
    bool operator==(const Path& o) const { return verts == o.verts && edges == o.edges; }
};

// verts.size() == edges.size(); edges[i] joins verts[i] and verts[(i+1) % n]
struct Cycle {
    std::vector<int> verts;
    std::vector<int> edges;

    int length() const { return (int)edges.size(); }
    bool operator==(const Cycle& o) const { return verts == o.verts && edges == o.edges; }
};

class LGraph {
public:
    Group group;

    LGraph() = default;
    explicit LGraph(Group g) : group(std::move(g)) {}

    void add_vertex(int v);
    int add_edge(int u, int v, const Elem& label);  // fresh id = max id + 1
    void add_edge_with_id(int id, int u, int v, const Elem& label);
    int add_edge(int u, int v) { return add_edge(u, v, zero(group)); }

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int n() const { return (int)verts_.size(); }
    int m() const { return (int)edges_.size(); }

    bool has_vertex(int v) const { return vpos_.count(v) > 0; }
    bool has_edge(int id) const { return epos_.count(id) > 0; }
    int vindex(int v) const;
    int eindex(int id) const;
    const Edge& edge(int id) const { return edges_[eindex(id)]; }
    const Edge& edge_at(int pos) const { return edges_[pos]; }
    void set_label(int id, const Elem& label);

    // edge positions (indices into edges()) incident with v, ascending by id
    const std::vector<int>& incident_pos(int v) const { return inc_[vindex(v)]; }
    std::vector<int> incident(int v) const;  // edge ids
    int other(int id, int v) const;
    int degree(int v) const;  // loops count twice

    // lowest-id edge between u and v, or -1
    int edge_between(int u, int v) const;
    bool adjacent(int u, int v) const { return u != v && edge_between(u, v) >= 0; }

    int max_vertex_id() const { return verts_.empty() ? -1 : verts_.back(); }
    int max_edge_id() const { return max_eid_; }

private:
    std::vector<int> verts_;
    std::unordered_map<int, int> vpos_;
    std::vector<std::vector<int>> inc_;
    std::vector<Edge> edges_;
    std::unordered_map<int, int> epos_;
    int max_eid_ = -1;
};

// weights
Elem weight(const LGraph& g, const std::vector<int>& edge_ids);
Elem weight(const LGraph& g, const Path& p);
Elem weight(const LGraph& g, const Cycle& c);

// validity checks; on failure write a reason when why != nullptr
bool is_path(const LGraph& g, const Path& p, std::string* why = nullptr);
bool is_cycle(const LGraph& g, const Cycle& c, std::string* why = nullptr);

// shifting at v by h (2h = 0 required)
LGraph shift(const LGraph& g, int v, const Elem& h);
void shift_in_place(LGraph& g, int v, const Elem& h);

Cycle canonical(const Cycle& c);
bool cycle_less(const Cycle& a, const Cycle& b);  // canonical order of enumeration
std::vector<int> sorted_edges(const Cycle& c);

std::vector<Cycle> enumerate_cycles(const LGraph& g, int64_t cap = kDefaultCap);
int64_t count_cycles(const LGraph& g, int64_t cap = kDefaultCap);
std::optional<Cycle> find_nonzero_cycle(const LGraph& g, int64_t cap = kDefaultCap);

// Returns a 1-based pair (i,j), i<j, such that the two w_i-w_j paths in c differ in
// weight. Pairs are tried in the order (1,2), (1,3), (2,3).
std::optional<std::pair<int, int>> three_paths_witness(const LGraph& g, const Cycle& c, int w1, int w2,
                                                       int w3);

std::vector<Path> enumerate_A_paths(const LGraph& g, const std::vector<int>& A, bool nonzero_only,
                                    int64_t cap = kDefaultCap);

// path / cycle helpers
Path reverse(const Path& p);
Path concat(const Path& a, const Path& b);  // a.back() == b.front()
Path subpath(const Path& p, int from_vertex, int to_vertex);  // may run backwards
Cycle close_path(const Path& p, int closing_edge);
Cycle cycle_from_paths(const Path& a, const Path& b);  // same endpoints, internally disjoint
// the two arcs of c from a to b; first follows the stored orientation
std::pair<Path, Path> cycle_arcs(const Cycle& c, int a, int b);
Path path_from_vertices(const LGraph& g, const std::vector<int>& verts);
// traces the edge set of a single cycle (every vertex degree 2, connected)
std::optional<Cycle> cycle_from_edges(const LGraph& g, const std::vector<int>& edge_ids);

// subgraphs keep original ids and labels
LGraph subgraph(const LGraph& g, const std::vector<int>& verts, const std::vector<int>& edge_ids);
LGraph induced_subgraph(const LGraph& g, const std::vector<int>& verts);
LGraph delete_vertices(const LGraph& g, const std::vector<int>& verts);
LGraph delete_edges(const LGraph& g, const std::vector<int>& edge_ids);

// connected components as sorted vertex lists, ordered by smallest vertex
std::vector<std::vector<int>> components(const LGraph& g);

// shortest s-t path (BFS, lowest ids first) avoiding blocked vertices; nullopt if none
std::optional<Path> bfs_path(const LGraph& g, int s, int t, const std::vector<int>& blocked = {});

// up to k internally disjoint s-t paths (s != t); skips edge skip_edge
std::vector<Path> disjoint_paths(const LGraph& g, int s, int t, int k, int skip_edge = -1);

std::string to_dot(const LGraph& g, const std::string& name = "G");
std::string elem_str(const Elem& e);

}  // namespace glab
