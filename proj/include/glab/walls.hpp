#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glab/decomp.hpp"
#include "glab/lgraph.hpp"

namespace glab {

using RC = std::pair<int, int>;  // (row, col) in the elementary wall grid, 1-based

// The elementary r x s wall lives on rows 1..r+1 and columns 1..2s+2 of a grid.
// Skeleton vertex id of (row, col) is (row-1)*(2s+2) + (col-1).
struct Wall {
    LGraph host;
    int r = 0, s = 0;
    LGraph skel;               // elementary wall, zero labels, ids as above
    std::vector<int> branch;   // skeleton vertex id -> host vertex, -1 for the two deleted grid points
    std::vector<Path> seg;     // skeleton edge position -> host path from branch[u] to branch[v]

    int width() const { return 2 * s + 2; }
    int sid(int row, int col) const { return (row - 1) * width() + (col - 1); }
    RC rc(int sid) const { return {sid / width() + 1, sid % width() + 1}; }
    bool exists(int row, int col) const;
    int vertex(int row, int col) const;  // host vertex
};

LGraph elementary_skeleton(int r, int s, const Group& g);
Wall elementary_wall(int r, int s, const Group& g);
// wraps an existing host whose vertex ids already follow the grid scheme
Wall wall_on_host(const LGraph& host, int r, int s);

// host path between two skeleton-adjacent grid points, oriented a -> b
Path segment(const Wall& w, RC a, RC b);
// concatenation of segments along consecutive skeleton-adjacent grid points
Path walk(const Wall& w, const std::vector<RC>& pts);

std::vector<RC> horizontal_coords(const Wall& w, int i);  // left to right
std::vector<RC> vertical_coords(const Wall& w, int j);    // top to bottom
Path horizontal_path(const Wall& w, int i);
Path vertical_path(const Wall& w, int j);
std::vector<RC> brick_coords(const Wall& w, int i, int j);  // 6 points, clockwise from top-left
Cycle brick(const Wall& w, int i, int j);

std::vector<int> corners(const Wall& w);    // host vertices
std::vector<int> nails(const Wall& w);      // host vertices, sorted
std::vector<int> top_nails(const Wall& w);  // along the first horizontal path, left to right
std::vector<RC> top_nail_coords(const Wall& w);
std::vector<int> branch_vertices(const Wall& w);
std::vector<int> wall_vertices(const Wall& w);  // sorted
std::vector<int> wall_edges(const Wall& w);     // sorted
LGraph wall_graph(const Wall& w);               // the subgraph of the host formed by the wall
std::vector<int> perimeter_skeleton_edges(const Wall& w);  // skeleton edge ids
bool is_perimeter_edge(const Wall& w, int skel_edge_id);

// nullopt when the wall is consistent, otherwise the first problem found
std::optional<std::string> validate_wall(const Wall& w);

// compact subwall on bricks rows [r0, r1], columns [c0, c1] (1-based, inclusive).
// When r0 is even the subwall is mirrored so that its first row keeps the elementary pattern.
Wall subwall(const Wall& w, int r0, int r1, int c0, int c1);
// grid point of w that corresponds to (row, col) of subwall(w, r0, r1, c0, c1)
RC subwall_origin(int r0, int c0, int c1, RC p);
bool k_contained(const Wall& w, const Wall& sub, int k);
// degree 2 in sub, degree 3 in w
std::vector<int> natural_corners_and_nails(const Wall& w, const Wall& sub);

// replace the b(W)-path p by r (same endpoints, r avoids the rest of the wall)
Wall local_reroute(const Wall& w, const Path& p, const Path& r);

struct FacialReport {
    bool odd = false;
    std::vector<RC> zero_bricks;  // (i, j)
};
FacialReport is_facially_odd(const Wall& w);

struct WallBipartiteResult {
    bool bipartite = false;
    ShiftCertificate cert;           // host vertices; every b(W)-path has weight 0 afterwards
    std::optional<Path> bad_path;    // a b(W)-path whose weight survives any shifting
    std::optional<Cycle> witness;    // a nonzero cycle of the wall when one exists
};
WallBipartiteResult is_bipartite_wall(const Wall& w);

}  // namespace glab
