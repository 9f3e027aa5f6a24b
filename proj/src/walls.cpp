#include "glab/walls.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace glab {

static bool grid_exists(int r, int s, int row, int col) {
    if (row < 1 || row > r + 1 || col < 1 || col > 2 * s + 2) return false;
    if (row == 1 && col == 2 * s + 2) return false;
    if (row == r + 1) {
        if (r % 2 == 1 && col == 2 * s + 2) return false;
        if (r % 2 == 0 && col == 1) return false;
    }
    return true;
}

bool Wall::exists(int row, int col) const { return grid_exists(r, s, row, col); }

int Wall::vertex(int row, int col) const {
    if (!exists(row, col)) throw DomainError("grid point outside the wall");
    return branch[sid(row, col)];
}

LGraph elementary_skeleton(int r, int s, const Group& g) {
    if (r < 1 || s < 1) throw DomainError("wall dimensions must be positive");
    int w = 2 * s + 2;
    auto id = [&](int row, int col) { return (row - 1) * w + (col - 1); };
    LGraph k(g);
    for (int row = 1; row <= r + 1; row++)
        for (int col = 1; col <= w; col++)
            if (grid_exists(r, s, row, col)) k.add_vertex(id(row, col));
    for (int row = 1; row <= r + 1; row++) {
        for (int col = 1; col < w; col++)
            if (grid_exists(r, s, row, col) && grid_exists(r, s, row, col + 1))
                k.add_edge(id(row, col), id(row, col + 1));
        if (row == r + 1) break;
        for (int col = (row % 2 == 1 ? 1 : 2); col <= w; col += 2)
            if (grid_exists(r, s, row, col) && grid_exists(r, s, row + 1, col))
                k.add_edge(id(row, col), id(row + 1, col));
    }
    return k;
}

Wall wall_on_host(const LGraph& host, int r, int s) {
    Wall w;
    w.host = host;
    w.r = r;
    w.s = s;
    w.skel = elementary_skeleton(r, s, host.group);
    w.branch.assign((r + 1) * (2 * s + 2), -1);
    for (int v : w.skel.vertices()) w.branch[v] = v;
    for (const Edge& e : w.skel.edges()) {
        int he = host.edge_between(e.u, e.v);
        if (he < 0) throw DomainError("host lacks a wall edge");
        w.seg.push_back(Path{{e.u, e.v}, {he}});
    }
    return w;
}

Wall elementary_wall(int r, int s, const Group& g) {
    if (r < 2 || s < 2) throw DomainError("elementary_wall needs r, s >= 2");
    LGraph host = elementary_skeleton(r, s, g);
    return wall_on_host(host, r, s);
}

Path segment(const Wall& w, RC a, RC b) {
    int sa = w.sid(a.first, a.second), sb = w.sid(b.first, b.second);
    if (!w.exists(a.first, a.second) || !w.exists(b.first, b.second)) throw DomainError("segment endpoint missing");
    int e = w.skel.edge_between(sa, sb);
    if (e < 0) throw DomainError("grid points are not adjacent in the wall");
    const Path& p = w.seg[w.skel.eindex(e)];
    return p.front() == w.branch[sa] ? p : reverse(p);
}

Path walk(const Wall& w, const std::vector<RC>& pts) {
    Path out;
    out.verts.push_back(w.vertex(pts[0].first, pts[0].second));
    for (size_t i = 0; i + 1 < pts.size(); i++) out = concat(out, segment(w, pts[i], pts[i + 1]));
    return out;
}

std::vector<RC> horizontal_coords(const Wall& w, int i) {
    if (i < 1 || i > w.r + 1) throw DomainError("horizontal path index out of range");
    std::vector<RC> out;
    for (int c = 1; c <= w.width(); c++)
        if (w.exists(i, c)) out.push_back({i, c});
    return out;
}

std::vector<RC> vertical_coords(const Wall& w, int j) {
    if (j < 1 || j > w.s + 1) throw DomainError("vertical path index out of range");
    std::vector<RC> out{{1, 2 * j - 1}};
    int col = 2 * j - 1;
    for (int a = 1; a <= w.r; a++) {
        int need = a % 2 == 1 ? 2 * j - 1 : 2 * j;
        if (col != need) {
            col = need;
            out.push_back({a, col});
        }
        out.push_back({a + 1, col});
    }
    return out;
}

Path horizontal_path(const Wall& w, int i) { return walk(w, horizontal_coords(w, i)); }
Path vertical_path(const Wall& w, int j) { return walk(w, vertical_coords(w, j)); }

std::vector<RC> brick_coords(const Wall& w, int i, int j) {
    if (i < 1 || i > w.r || j < 1 || j > w.s) throw DomainError("brick index out of range");
    int cl = i % 2 == 1 ? 2 * j - 1 : 2 * j;
    return {{i, cl}, {i, cl + 1}, {i, cl + 2}, {i + 1, cl + 2}, {i + 1, cl + 1}, {i + 1, cl}};
}

static Cycle closed_walk(const Wall& w, std::vector<RC> pts) {
    pts.push_back(pts.front());
    Path p = walk(w, pts);
    Cycle c;
    c.verts.assign(p.verts.begin(), p.verts.end() - 1);
    c.edges = p.edges;
    return c;
}

Cycle brick(const Wall& w, int i, int j) { return closed_walk(w, brick_coords(w, i, j)); }

static std::vector<RC> corner_coords(const Wall& w) {
    auto top = horizontal_coords(w, 1), bot = horizontal_coords(w, w.r + 1);
    return {top.front(), top.back(), bot.front(), bot.back()};
}

std::vector<int> corners(const Wall& w) {
    std::vector<int> out;
    for (auto [a, b] : corner_coords(w)) out.push_back(w.vertex(a, b));
    return out;
}

std::vector<int> nails(const Wall& w) {
    std::set<int> cs;
    for (auto [a, b] : corner_coords(w)) cs.insert(w.sid(a, b));
    std::vector<int> out;
    for (int v : w.skel.vertices())
        if (w.skel.degree(v) == 2 && !cs.count(v)) out.push_back(w.branch[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RC> top_nail_coords(const Wall& w) {
    std::vector<RC> out;
    for (int j = 1; j <= w.s; j++) out.push_back({1, 2 * j});
    return out;
}

std::vector<int> top_nails(const Wall& w) {
    std::vector<int> out;
    for (auto [a, b] : top_nail_coords(w)) out.push_back(w.vertex(a, b));
    return out;
}

std::vector<int> branch_vertices(const Wall& w) {
    std::vector<int> out;
    for (int v : w.skel.vertices()) out.push_back(w.branch[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> wall_vertices(const Wall& w) {
    std::set<int> vs;
    for (auto& p : w.seg) vs.insert(p.verts.begin(), p.verts.end());
    return {vs.begin(), vs.end()};
}

std::vector<int> wall_edges(const Wall& w) {
    std::set<int> es;
    for (auto& p : w.seg) es.insert(p.edges.begin(), p.edges.end());
    return {es.begin(), es.end()};
}

LGraph wall_graph(const Wall& w) { return subgraph(w.host, wall_vertices(w), wall_edges(w)); }

std::vector<int> perimeter_skeleton_edges(const Wall& w) {
    std::set<int> es;
    auto add = [&](const std::vector<RC>& pts) {
        for (size_t i = 0; i + 1 < pts.size(); i++)
            es.insert(w.skel.edge_between(w.sid(pts[i].first, pts[i].second), w.sid(pts[i + 1].first, pts[i + 1].second)));
    };
    add(horizontal_coords(w, 1));
    add(horizontal_coords(w, w.r + 1));
    add(vertical_coords(w, 1));
    add(vertical_coords(w, w.s + 1));
    return {es.begin(), es.end()};
}

bool is_perimeter_edge(const Wall& w, int id) {
    auto p = perimeter_skeleton_edges(w);
    return std::binary_search(p.begin(), p.end(), id);
}

std::optional<std::string> validate_wall(const Wall& w) {
    if ((int)w.seg.size() != w.skel.m()) return "segment count does not match the skeleton";
    std::set<int> bs;
    for (int v : w.skel.vertices()) {
        int b = w.branch[v];
        if (!w.host.has_vertex(b)) return "branch vertex missing from host";
        if (!bs.insert(b).second) return "branch vertices are not distinct";
    }
    std::set<int> interior, used_edges;
    for (int p = 0; p < w.skel.m(); p++) {
        const Edge& e = w.skel.edge_at(p);
        const Path& s = w.seg[p];
        std::string why;
        if (!is_path(w.host, s, &why)) return "segment " + std::to_string(e.id) + ": " + why;
        if (s.trivial()) return "segment " + std::to_string(e.id) + " is trivial";
        if (s.front() != w.branch[e.u] || s.back() != w.branch[e.v])
            return "segment " + std::to_string(e.id) + " has wrong endpoints";
        for (size_t i = 1; i + 1 < s.verts.size(); i++) {
            if (bs.count(s.verts[i])) return "segment interior meets a branch vertex";
            if (!interior.insert(s.verts[i]).second) return "segments share an interior vertex";
        }
        for (int id : s.edges)
            if (!used_edges.insert(id).second) return "segments share an edge";
    }
    return std::nullopt;
}

RC subwall_origin(int r0, int c0, int c1, RC p) {
    int row = p.first + r0 - 1;
    int col = r0 % 2 == 1 ? p.second + 2 * c0 - 2 : 2 * c1 + 3 - p.second;
    return {row, col};
}

Wall subwall(const Wall& w, int r0, int r1, int c0, int c1) {
    if (r0 < 1 || r1 > w.r || c0 < 1 || c1 > w.s || r0 > r1 || c0 > c1)
        throw DomainError("subwall range out of bounds");
    Wall out;
    out.host = w.host;
    out.r = r1 - r0 + 1;
    out.s = c1 - c0 + 1;
    out.skel = elementary_skeleton(out.r, out.s, w.host.group);
    out.branch.assign((out.r + 1) * out.width(), -1);
    for (int v : out.skel.vertices()) {
        RC o = subwall_origin(r0, c0, c1, out.rc(v));
        if (!w.exists(o.first, o.second)) throw InternalError("subwall maps onto a missing grid point");
        out.branch[v] = w.vertex(o.first, o.second);
    }
    for (const Edge& e : out.skel.edges()) {
        RC a = subwall_origin(r0, c0, c1, out.rc(e.u)), b = subwall_origin(r0, c0, c1, out.rc(e.v));
        out.seg.push_back(segment(w, a, b));
    }
    return out;
}

bool k_contained(const Wall& w, const Wall& sub, int k) {
    auto vs = wall_vertices(sub);
    std::set<int> in(vs.begin(), vs.end());
    auto hits = [&](const Path& p) {
        for (int v : p.verts)
            if (in.count(v)) return true;
        return false;
    };
    for (int i = 1; i <= w.r + 1; i++)
        if ((i <= k || i > w.r - k + 1) && hits(horizontal_path(w, i))) return false;
    for (int j = 1; j <= w.s + 1; j++)
        if ((j <= k || j > w.s - k + 1) && hits(vertical_path(w, j))) return false;
    return true;
}

std::vector<int> natural_corners_and_nails(const Wall& w, const Wall& sub) {
    std::vector<int> out;
    LGraph gw = wall_graph(w), gs = wall_graph(sub);
    for (int v : branch_vertices(sub))
        if (gs.degree(v) == 2 && gw.degree(v) == 3) out.push_back(v);
    return out;
}

Wall local_reroute(const Wall& w, const Path& p, const Path& r) {
    int at = -1;
    for (int i = 0; i < (int)w.seg.size(); i++)
        if (w.seg[i] == p || w.seg[i] == reverse(p)) at = i;
    if (at < 0) throw DomainError("local_reroute: P is not a b(W)-path of the wall");
    if (is_perimeter_edge(w, w.skel.edge_at(at).id)) throw DomainError("local_reroute: P lies on the perimeter");
    std::string why;
    if (!is_path(w.host, r, &why)) throw DomainError("local_reroute: R is not a path: " + why);
    Path rr = r.front() == w.seg[at].front() ? r : reverse(r);
    if (rr.front() != w.seg[at].front() || rr.back() != w.seg[at].back())
        throw DomainError("local_reroute: R must have the endpoints of P");
    std::set<int> pv(p.verts.begin(), p.verts.end());
    auto wv = wall_vertices(w);
    std::set<int> rest;
    for (int v : wv)
        if (!pv.count(v)) rest.insert(v);
    for (int v : rr.verts)
        if (rest.count(v)) throw DomainError("local_reroute: R meets W - P");
    Wall out = w;
    out.seg[at] = rr;
    return out;
}

FacialReport is_facially_odd(const Wall& w) {
    FacialReport rep;
    for (int i = 1; i <= w.r; i++)
        for (int j = 1; j <= w.s; j++)
            if (is_zero(weight(w.host, brick(w, i, j)))) rep.zero_bricks.push_back({i, j});
    rep.odd = rep.zero_bricks.empty();
    return rep;
}

WallBipartiteResult is_bipartite_wall(const Wall& w) {
    WallBipartiteResult res;
    LGraph k(w.host.group);
    for (int v : w.skel.vertices()) k.add_vertex(v);
    for (int p = 0; p < w.skel.m(); p++) {
        const Edge& e = w.skel.edge_at(p);
        Elem wt = weight(w.host, w.seg[p]);
        if (!twice_zero(w.host.group, wt)) {
            res.bad_path = w.seg[p];
            return res;
        }
        k.add_edge_with_id(e.id, e.u, e.v, wt);
    }
    auto sr = shift_reduce(k);
    if (!sr.reduced) {
        Cycle c;
        int n = sr.witness.length();
        for (int i = 0; i < n; i++) {
            const Path& s = w.seg[w.skel.eindex(sr.witness.edges[i])];
            Path q = s.front() == w.branch[sr.witness.verts[i]] ? s : reverse(s);
            c.verts.insert(c.verts.end(), q.verts.begin(), q.verts.end() - 1);
            c.edges.insert(c.edges.end(), q.edges.begin(), q.edges.end());
        }
        res.witness = c;
        res.bad_path = w.seg[w.skel.eindex(sr.witness.edges.back())];
        return res;
    }
    for (auto& op : sr.cert) res.cert.push_back({w.branch[op.v], op.g});
    res.bipartite = true;
    return res;
}

}  // namespace glab
