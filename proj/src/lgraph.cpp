#include "glab/lgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace glab {

// ---- LGraph ----

void LGraph::add_vertex(int v) {
    if (vpos_.count(v)) return;
    if (verts_.empty() || v > verts_.back()) {
        vpos_[v] = (int)verts_.size();
        verts_.push_back(v);
        inc_.emplace_back();
        return;
    }
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    size_t at = it - verts_.begin();
    verts_.insert(it, v);
    inc_.insert(inc_.begin() + at, std::vector<int>{});
    for (size_t i = at; i < verts_.size(); i++) vpos_[verts_[i]] = (int)i;
}

int LGraph::add_edge(int u, int v, const Elem& label) {
    int id = max_eid_ + 1;
    add_edge_with_id(id, u, v, label);
    return id;
}

void LGraph::add_edge_with_id(int id, int u, int v, const Elem& label) {
    if (epos_.count(id)) throw DomainError("duplicate edge id " + std::to_string(id));
    if (!has_vertex(u) || !has_vertex(v)) throw DomainError("edge endpoint is not a vertex");
    check_elem(group, label);
    int pos = (int)edges_.size();
    edges_.push_back(Edge{id, u, v, label});
    epos_[id] = pos;
    max_eid_ = std::max(max_eid_, id);
    auto ins = [&](int x) {
        auto& lst = inc_[vindex(x)];
        auto it = std::lower_bound(lst.begin(), lst.end(), pos,
                                   [&](int a, int b) { return edges_[a].id < edges_[b].id; });
        lst.insert(it, pos);
    };
    ins(u);
    if (v != u) ins(v);
}

int LGraph::vindex(int v) const {
    auto it = vpos_.find(v);
    if (it == vpos_.end()) throw DomainError("unknown vertex " + std::to_string(v));
    return it->second;
}

int LGraph::eindex(int id) const {
    auto it = epos_.find(id);
    if (it == epos_.end()) throw DomainError("unknown edge id " + std::to_string(id));
    return it->second;
}

void LGraph::set_label(int id, const Elem& label) {
    check_elem(group, label);
    edges_[eindex(id)].label = label;
}

std::vector<int> LGraph::incident(int v) const {
    std::vector<int> out;
    for (int p : inc_[vindex(v)]) out.push_back(edges_[p].id);
    return out;
}

int LGraph::other(int id, int v) const {
    const Edge& e = edge(id);
    if (e.u == v) return e.v;
    if (e.v == v) return e.u;
    throw DomainError("edge " + std::to_string(id) + " is not incident with " + std::to_string(v));
}

int LGraph::degree(int v) const {
    int d = 0;
    for (int p : inc_[vindex(v)]) d += edges_[p].loop() ? 2 : 1;
    return d;
}

int LGraph::edge_between(int u, int v) const {
    for (int p : inc_[vindex(u)]) {
        const Edge& e = edges_[p];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.id;
    }
    return -1;
}

// ---- weights & validity ----

Elem weight(const LGraph& g, const std::vector<int>& edge_ids) {
    Elem w = zero(g.group);
    for (int id : edge_ids) add_into(g.group, w, g.edge(id).label);
    return w;
}

Elem weight(const LGraph& g, const Path& p) { return weight(g, p.edges); }
Elem weight(const LGraph& g, const Cycle& c) { return weight(g, c.edges); }

static bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool is_path(const LGraph& g, const Path& p, std::string* why) {
    if (p.verts.size() != p.edges.size() + 1) return fail(why, "path vertex/edge counts do not match");
    std::set<int> seen;
    for (int v : p.verts) {
        if (!g.has_vertex(v)) return fail(why, "path uses unknown vertex " + std::to_string(v));
        if (!seen.insert(v).second) return fail(why, "path repeats vertex " + std::to_string(v));
    }
    for (size_t i = 0; i < p.edges.size(); i++) {
        if (!g.has_edge(p.edges[i])) return fail(why, "path uses unknown edge " + std::to_string(p.edges[i]));
        const Edge& e = g.edge(p.edges[i]);
        int a = p.verts[i], b = p.verts[i + 1];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a)))
            return fail(why, "path edge " + std::to_string(e.id) + " does not join its neighbours");
    }
    return true;
}

bool is_cycle(const LGraph& g, const Cycle& c, std::string* why) {
    size_t n = c.edges.size();
    if (n == 0 || c.verts.size() != n) return fail(why, "cycle must have as many vertices as edges (>= 1)");
    std::set<int> seen, eseen;
    for (int v : c.verts) {
        if (!g.has_vertex(v)) return fail(why, "cycle uses unknown vertex " + std::to_string(v));
        if (!seen.insert(v).second) return fail(why, "cycle repeats vertex " + std::to_string(v));
    }
    for (size_t i = 0; i < n; i++) {
        int id = c.edges[i];
        if (!g.has_edge(id)) return fail(why, "cycle uses unknown edge " + std::to_string(id));
        if (!eseen.insert(id).second) return fail(why, "cycle repeats edge " + std::to_string(id));
        const Edge& e = g.edge(id);
        int a = c.verts[i], b = c.verts[(i + 1) % n];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a)))
            return fail(why, "cycle edge " + std::to_string(id) + " does not join its neighbours");
    }
    return true;
}

// ---- shifting ----

void shift_in_place(LGraph& g, int v, const Elem& h) {
    check_elem(g.group, h);
    if (!twice_zero(g.group, h)) throw DomainError("shift requires 2g = 0");
    if (!g.has_vertex(v)) throw DomainError("shift at unknown vertex " + std::to_string(v));
    if (is_zero(h)) return;
    for (int id : g.incident(v)) {
        const Edge& e = g.edge(id);
        if (e.loop()) continue;  // gains 2g = 0
        g.set_label(id, add(g.group, e.label, h));
    }
}

LGraph shift(const LGraph& g, int v, const Elem& h) {
    LGraph out = g;
    shift_in_place(out, v, h);
    return out;
}

// ---- cycles ----

Cycle canonical(const Cycle& c) {
    int n = c.length();
    if (n <= 1) return c;
    int best = 0;
    for (int i = 1; i < n; i++)
        if (c.edges[i] < c.edges[best]) best = i;
    // forward: start at verts[best], edges best, best+1, ...
    Cycle f, b;
    for (int k = 0; k < n; k++) {
        f.verts.push_back(c.verts[(best + k) % n]);
        f.edges.push_back(c.edges[(best + k) % n]);
    }
    // backward: start at verts[best+1], edges best, best-1, ...
    for (int k = 0; k < n; k++) {
        b.verts.push_back(c.verts[((best + 1 - k) % n + n) % n]);
        b.edges.push_back(c.edges[((best - k) % n + n) % n]);
    }
    if (f.edges[1] != b.edges[1]) return f.edges[1] < b.edges[1] ? f : b;
    return f.verts[0] <= b.verts[0] ? f : b;
}

std::vector<int> sorted_edges(const Cycle& c) {
    std::vector<int> e = c.edges;
    std::sort(e.begin(), e.end());
    return e;
}

bool cycle_less(const Cycle& a, const Cycle& b) { return sorted_edges(a) < sorted_edges(b); }

namespace {

struct Adj {
    std::vector<std::vector<std::pair<int, int>>> nb;  // (neighbour index, edge position)
    explicit Adj(const LGraph& g) : nb(g.n()) {
        for (int i = 0; i < g.n(); i++) {
            int v = g.vertices()[i];
            for (int p : g.incident_pos(v)) {
                const Edge& e = g.edge_at(p);
                if (e.loop()) continue;
                int w = e.u == v ? e.v : e.u;
                nb[i].push_back({g.vindex(w), p});
            }
        }
    }
};

template <class F>
void for_each_cycle(const LGraph& g, F&& emit) {
    // loops first
    for (const Edge& e : g.edges())
        if (e.loop()) emit(std::vector<int>{g.vindex(e.u)}, std::vector<int>{g.eindex(e.id)});
    Adj adj(g);
    int n = g.n();
    std::vector<char> on(n, 0);
    std::vector<int> vstack, estack;
    for (int s = 0; s < n; s++) {
        vstack.assign(1, s);
        estack.clear();
        on[s] = 1;
        std::function<void(int)> dfs = [&](int x) {
            for (auto [y, p] : adj.nb[x]) {
                if (y == s) {
                    if (estack.empty() || p == estack.front()) continue;
                    if (g.edge_at(estack.front()).id < g.edge_at(p).id) {
                        estack.push_back(p);
                        emit(vstack, estack);
                        estack.pop_back();
                    }
                    continue;
                }
                if (y < s || on[y]) continue;
                on[y] = 1;
                vstack.push_back(y);
                estack.push_back(p);
                dfs(y);
                vstack.pop_back();
                estack.pop_back();
                on[y] = 0;
            }
        };
        dfs(s);
        on[s] = 0;
    }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const LGraph& g, int64_t cap) {
    std::vector<Cycle> out;
    for_each_cycle(g, [&](const std::vector<int>& vs, const std::vector<int>& es) {
        if ((int64_t)out.size() >= cap) throw CapExceeded("cycle enumeration exceeds cap " + std::to_string(cap));
        Cycle c;
        for (int i : vs) c.verts.push_back(g.vertices()[i]);
        for (int p : es) c.edges.push_back(g.edge_at(p).id);
        out.push_back(canonical(c));
    });
    std::vector<std::pair<std::vector<int>, size_t>> keys;
    keys.reserve(out.size());
    for (size_t i = 0; i < out.size(); i++) keys.push_back({sorted_edges(out[i]), i});
    std::sort(keys.begin(), keys.end());
    std::vector<Cycle> sorted;
    sorted.reserve(out.size());
    for (auto& k : keys) sorted.push_back(std::move(out[k.second]));
    return sorted;
}

int64_t count_cycles(const LGraph& g, int64_t cap) {
    int64_t cnt = 0;
    for_each_cycle(g, [&](const std::vector<int>&, const std::vector<int>&) {
        if (++cnt > cap) throw CapExceeded("cycle count exceeds cap " + std::to_string(cap));
    });
    return cnt;
}

std::optional<Cycle> find_nonzero_cycle(const LGraph& g, int64_t cap) {
    for (auto& c : enumerate_cycles(g, cap))
        if (!is_zero(weight(g, c))) return c;
    return std::nullopt;
}

std::pair<Path, Path> cycle_arcs(const Cycle& c, int a, int b) {
    int n = c.length();
    auto ia = std::find(c.verts.begin(), c.verts.end(), a) - c.verts.begin();
    auto ib = std::find(c.verts.begin(), c.verts.end(), b) - c.verts.begin();
    if (ia == n || ib == n) throw DomainError("vertex not on cycle");
    if (ia == ib) throw DomainError("arc endpoints must differ");
    Path f, r;
    f.verts.push_back(a);
    for (int i = (int)ia; i != ib; i = (i + 1) % n) {
        f.edges.push_back(c.edges[i]);
        f.verts.push_back(c.verts[(i + 1) % n]);
    }
    r.verts.push_back(a);
    for (int i = (int)ia; i != ib; i = (i - 1 + n) % n) {
        r.edges.push_back(c.edges[(i - 1 + n) % n]);
        r.verts.push_back(c.verts[(i - 1 + n) % n]);
    }
    return {f, r};
}

std::optional<std::pair<int, int>> three_paths_witness(const LGraph& g, const Cycle& c, int w1, int w2,
                                                       int w3) {
    std::string why;
    if (!is_cycle(g, c, &why)) throw DomainError("three_paths_witness: " + why);
    int w[3] = {w1, w2, w3};
    for (int i = 0; i < 3; i++) {
        if (std::find(c.verts.begin(), c.verts.end(), w[i]) == c.verts.end())
            throw DomainError("three_paths_witness: vertex not on cycle");
        for (int j = 0; j < i; j++)
            if (w[i] == w[j]) throw DomainError("three_paths_witness: vertices must be distinct");
    }
    const std::pair<int, int> order[3] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : order) {
        auto [p, q] = cycle_arcs(c, w[i], w[j]);
        if (weight(g, p) != weight(g, q)) return std::make_pair(i + 1, j + 1);
    }
    return std::nullopt;
}

std::vector<Path> enumerate_A_paths(const LGraph& g, const std::vector<int>& A, bool nonzero_only,
                                    int64_t cap) {
    std::vector<char> inA(g.n(), 0);
    for (int a : A) inA[g.vindex(a)] = 1;
    Adj adj(g);
    std::vector<Path> out;
    std::vector<char> on(g.n(), 0);
    std::vector<int> vs, ps;
    std::vector<int> sortedA = A;
    std::sort(sortedA.begin(), sortedA.end());
    sortedA.erase(std::unique(sortedA.begin(), sortedA.end()), sortedA.end());
    for (int a : sortedA) {
        int s = g.vindex(a);
        vs.assign(1, s);
        ps.clear();
        on[s] = 1;
        std::function<void(int)> dfs = [&](int x) {
            for (auto [y, p] : adj.nb[x]) {
                if (on[y]) continue;
                if (inA[y]) {
                    if (g.vertices()[y] <= a) continue;
                    Path P;
                    for (int i : vs) P.verts.push_back(g.vertices()[i]);
                    P.verts.push_back(g.vertices()[y]);
                    for (int q : ps) P.edges.push_back(g.edge_at(q).id);
                    P.edges.push_back(g.edge_at(p).id);
                    if (nonzero_only && is_zero(weight(g, P))) continue;
                    if ((int64_t)out.size() >= cap)
                        throw CapExceeded("A-path enumeration exceeds cap " + std::to_string(cap));
                    out.push_back(std::move(P));
                    continue;
                }
                on[y] = 1;
                vs.push_back(y);
                ps.push_back(p);
                dfs(y);
                vs.pop_back();
                ps.pop_back();
                on[y] = 0;
            }
        };
        dfs(s);
        on[s] = 0;
    }
    return out;
}

// ---- path helpers ----

Path reverse(const Path& p) {
    Path r;
    r.verts.assign(p.verts.rbegin(), p.verts.rend());
    r.edges.assign(p.edges.rbegin(), p.edges.rend());
    return r;
}

Path concat(const Path& a, const Path& b) {
    if (a.verts.empty()) return b;
    if (b.verts.empty()) return a;
    if (a.back() != b.front()) throw InternalError("concat: paths do not meet");
    Path r = a;
    r.verts.insert(r.verts.end(), b.verts.begin() + 1, b.verts.end());
    r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
    return r;
}

Path subpath(const Path& p, int from_vertex, int to_vertex) {
    auto i = std::find(p.verts.begin(), p.verts.end(), from_vertex) - p.verts.begin();
    auto j = std::find(p.verts.begin(), p.verts.end(), to_vertex) - p.verts.begin();
    if (i == (long)p.verts.size() || j == (long)p.verts.size()) throw DomainError("subpath: vertex not on path");
    Path r;
    if (i <= j) {
        r.verts.assign(p.verts.begin() + i, p.verts.begin() + j + 1);
        r.edges.assign(p.edges.begin() + i, p.edges.begin() + j);
    } else {
        Path t;
        t.verts.assign(p.verts.begin() + j, p.verts.begin() + i + 1);
        t.edges.assign(p.edges.begin() + j, p.edges.begin() + i);
        r = reverse(t);
    }
    return r;
}

Cycle close_path(const Path& p, int closing_edge) {
    Cycle c;
    c.verts = p.verts;
    c.edges = p.edges;
    c.edges.push_back(closing_edge);
    return c;
}

Cycle cycle_from_paths(const Path& a, const Path& b) {
    if (a.front() != b.front() || a.back() != b.back()) throw InternalError("cycle_from_paths: endpoints differ");
    Cycle c;
    c.verts = a.verts;
    c.edges = a.edges;
    Path rb = reverse(b);
    c.verts.insert(c.verts.end(), rb.verts.begin() + 1, rb.verts.end() - 1);
    c.edges.insert(c.edges.end(), rb.edges.begin(), rb.edges.end());
    return c;
}

Path path_from_vertices(const LGraph& g, const std::vector<int>& verts) {
    Path p;
    p.verts = verts;
    for (size_t i = 0; i + 1 < verts.size(); i++) {
        int e = g.edge_between(verts[i], verts[i + 1]);
        if (e < 0) throw DomainError("no edge between consecutive path vertices");
        p.edges.push_back(e);
    }
    return p;
}

std::optional<Cycle> cycle_from_edges(const LGraph& g, const std::vector<int>& edge_ids) {
    if (edge_ids.empty()) return std::nullopt;
    std::map<int, std::vector<int>> inc;
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        inc[e.u].push_back(id);
        inc[e.v].push_back(id);  // a loop lands twice on the same vertex
    }
    for (auto& [v, l] : inc)
        if (l.size() != 2) return std::nullopt;
    int start_e = *std::min_element(edge_ids.begin(), edge_ids.end());
    const Edge& e0 = g.edge(start_e);
    Cycle c;
    int v = std::min(e0.u, e0.v), e = start_e;
    do {
        c.verts.push_back(v);
        c.edges.push_back(e);
        int w = g.other(e, v);
        auto& l = inc[w];
        int ne = l[0] == e ? l[1] : l[0];
        v = w;
        e = ne;
    } while (e != start_e && c.edges.size() <= edge_ids.size());
    if (c.edges.size() != edge_ids.size()) return std::nullopt;
    return c;
}

// ---- subgraphs ----

LGraph subgraph(const LGraph& g, const std::vector<int>& verts, const std::vector<int>& edge_ids) {
    LGraph h(g.group);
    std::vector<int> vs = verts;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) h.add_vertex(v);
    std::vector<int> es = edge_ids;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (int id : es) {
        const Edge& e = g.edge(id);
        h.add_vertex(e.u);
        h.add_vertex(e.v);
        h.add_edge_with_id(e.id, e.u, e.v, e.label);
    }
    return h;
}

LGraph induced_subgraph(const LGraph& g, const std::vector<int>& verts) {
    std::set<int> keep(verts.begin(), verts.end());
    std::vector<int> es;
    for (const Edge& e : g.edges())
        if (keep.count(e.u) && keep.count(e.v)) es.push_back(e.id);
    return subgraph(g, verts, es);
}

LGraph delete_vertices(const LGraph& g, const std::vector<int>& verts) {
    std::set<int> drop(verts.begin(), verts.end());
    std::vector<int> keep;
    for (int v : g.vertices())
        if (!drop.count(v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

LGraph delete_edges(const LGraph& g, const std::vector<int>& edge_ids) {
    std::set<int> drop(edge_ids.begin(), edge_ids.end());
    std::vector<int> es;
    for (const Edge& e : g.edges())
        if (!drop.count(e.id)) es.push_back(e.id);
    return subgraph(g, g.vertices(), es);
}

std::vector<std::vector<int>> components(const LGraph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); s++) {
        if (comp[s] >= 0) continue;
        int c = (int)out.size();
        out.emplace_back();
        std::deque<int> q{s};
        comp[s] = c;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            int vx = g.vertices()[x];
            out[c].push_back(vx);
            for (int p : g.incident_pos(vx)) {
                const Edge& e = g.edge_at(p);
                int y = g.vindex(e.u == vx ? e.v : e.u);
                if (comp[y] < 0) {
                    comp[y] = c;
                    q.push_back(y);
                }
            }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

std::optional<Path> bfs_path(const LGraph& g, int s, int t, const std::vector<int>& blocked) {
    std::vector<char> bad(g.n(), 0);
    for (int b : blocked)
        if (g.has_vertex(b)) bad[g.vindex(b)] = 1;
    int si = g.vindex(s), ti = g.vindex(t);
    bad[si] = bad[ti] = 0;
    std::vector<int> par(g.n(), -1), pe(g.n(), -1);
    std::vector<char> seen(g.n(), 0);
    std::deque<int> q{si};
    seen[si] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == ti) break;
        int vx = g.vertices()[x];
        for (int p : g.incident_pos(vx)) {
            const Edge& e = g.edge_at(p);
            if (e.loop()) continue;
            int y = g.vindex(e.u == vx ? e.v : e.u);
            if (seen[y] || bad[y]) continue;
            seen[y] = 1;
            par[y] = x;
            pe[y] = e.id;
            q.push_back(y);
        }
    }
    if (!seen[ti]) return std::nullopt;
    Path p;
    for (int x = ti; x != si; x = par[x]) {
        p.verts.push_back(g.vertices()[x]);
        p.edges.push_back(pe[x]);
    }
    p.verts.push_back(s);
    return reverse(p);
}

std::vector<Path> disjoint_paths(const LGraph& g, int s, int t, int k, int skip_edge) {
    if (s == t) throw DomainError("disjoint_paths needs distinct endpoints");
    int n = g.n();
    struct Arc {
        int to, cap, rev, eid;
    };
    std::vector<std::vector<Arc>> net(2 * n);
    auto add_arc = [&](int a, int b, int cap, int eid) {
        net[a].push_back({b, cap, (int)net[b].size(), eid});
        net[b].push_back({a, 0, (int)net[a].size() - 1, -1});
    };
    int si = g.vindex(s), ti = g.vindex(t);
    for (int i = 0; i < n; i++) add_arc(2 * i, 2 * i + 1, (i == si || i == ti) ? k : 1, -1);
    for (const Edge& e : g.edges()) {
        if (e.loop() || e.id == skip_edge) continue;
        int a = g.vindex(e.u), b = g.vindex(e.v);
        add_arc(2 * a + 1, 2 * b, 1, e.id);
        add_arc(2 * b + 1, 2 * a, 1, e.id);
    }
    int src = 2 * si + 1, snk = 2 * ti;
    int flow = 0;
    while (flow < k) {
        std::vector<std::pair<int, int>> prev(2 * n, {-1, -1});
        std::deque<int> q{src};
        prev[src] = {src, -1};
        while (!q.empty() && prev[snk].first < 0) {
            int x = q.front();
            q.pop_front();
            for (int i = 0; i < (int)net[x].size(); i++) {
                Arc& a = net[x][i];
                if (a.cap > 0 && prev[a.to].first < 0) {
                    prev[a.to] = {x, i};
                    q.push_back(a.to);
                }
            }
        }
        if (prev[snk].first < 0) break;
        for (int y = snk; y != src;) {
            auto [x, i] = prev[y];
            Arc& a = net[x][i];
            a.cap -= 1;
            net[y][a.rev].cap += 1;
            y = x;
        }
        flow++;
    }
    // decompose: follow saturated forward arcs from src
    std::vector<Path> out;
    for (int f = 0; f < flow; f++) {
        Path p;
        p.verts.push_back(s);
        int x = src;
        while (x != snk) {
            bool moved = false;
            for (Arc& a : net[x]) {
                if (a.eid < 0 || a.cap != 0) continue;
                // forward arc with flow: residual 0, reverse has 1
                Arc& r = net[a.to][a.rev];
                if (r.cap != 1) continue;
                r.cap = 0;  // consume
                int vi = a.to / 2;
                p.edges.push_back(a.eid);
                p.verts.push_back(g.vertices()[vi]);
                x = a.to == snk ? snk : a.to + 1;
                moved = true;
                break;
            }
            if (!moved) throw InternalError("flow decomposition failed");
        }
        out.push_back(p);
    }
    return out;
}

// ---- output ----

std::string elem_str(const Elem& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); i++) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

std::string to_dot(const LGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v : g.vertices()) os << "  " << v << ";\n";
    for (const Edge& e : g.edges())
        os << "  " << e.u << " -- " << e.v << " [label=\"" << elem_str(e.label) << "\", id=\"e" << e.id << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace glab
