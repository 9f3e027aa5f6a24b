#include "glab/models.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace glab {

int KModel::endpoint(int i, int j) const {
    const Edge& e = host.edge(conn[i][j]);
    std::set<int> in(tree_verts[i].begin(), tree_verts[i].end());
    return in.count(e.u) ? e.u : e.v;
}

std::optional<std::string> validate_model(const KModel& m) {
    if (m.t < 1) return std::string("model needs at least one tree");
    if ((int)m.tree_verts.size() != m.t || (int)m.tree_edges.size() != m.t) return std::string("tree count does not match t");
    if ((int)m.conn.size() != m.t) return std::string("connection table has wrong size");
    std::map<int, int> owner;
    std::set<int> tree_edge_ids;
    for (int i = 0; i < m.t; i++) {
        std::string tag = "tree " + std::to_string(i) + ": ";
        if (m.tree_verts[i].empty()) return tag + "empty";
        for (int v : m.tree_verts[i]) {
            if (!m.host.has_vertex(v)) return tag + "vertex not in host";
            if (owner.count(v)) return std::string("trees not disjoint");
            owner[v] = i;
        }
        if (m.tree_edges[i].size() + 1 != m.tree_verts[i].size()) return tag + "edge count is not |V|-1";
        for (int e : m.tree_edges[i]) {
            if (!m.host.has_edge(e)) return tag + "edge not in host";
            const Edge& ed = m.host.edge(e);
            auto iu = owner.find(ed.u), iv = owner.find(ed.v);
            if (iu == owner.end() || iv == owner.end() || iu->second != i || iv->second != i || ed.loop())
                return tag + "edge leaves the tree";
            if (!tree_edge_ids.insert(e).second) return tag + "edge repeated";
        }
        LGraph tg = subgraph(m.host, m.tree_verts[i], m.tree_edges[i]);
        if (components(tg).size() != 1) return tag + "not connected";
    }
    std::set<int> used;
    for (int i = 0; i < m.t; i++) {
        if ((int)m.conn[i].size() != m.t) return std::string("connection table has wrong size");
        for (int j = 0; j < m.t; j++) {
            if (i == j) continue;
            int e = m.conn[i][j];
            std::string tag = "connection " + std::to_string(i) + "-" + std::to_string(j) + ": ";
            if (e < 0) return tag + "missing";
            if (m.conn[j][i] != e) return tag + "table not symmetric";
            if (!m.host.has_edge(e)) return tag + "edge not in host";
            if (tree_edge_ids.count(e)) return tag + "edge is also a tree edge";
            const Edge& ed = m.host.edge(e);
            auto iu = owner.find(ed.u), iv = owner.find(ed.v);
            if (iu == owner.end() || iv == owner.end()) return tag + "edge leaves the model";
            int a = iu->second, b = iv->second;
            if (!((a == i && b == j) || (a == j && b == i))) return tag + "edge joins the wrong trees";
            if (i < j && !used.insert(e).second) return tag + "edge reused";
        }
    }
    return std::nullopt;
}

LGraph model_subgraph(const KModel& m, const std::vector<int>& U) {
    std::vector<int> vs, es;
    for (int i : U) {
        vs.insert(vs.end(), m.tree_verts[i].begin(), m.tree_verts[i].end());
        es.insert(es.end(), m.tree_edges[i].begin(), m.tree_edges[i].end());
    }
    for (size_t a = 0; a < U.size(); a++)
        for (size_t b = a + 1; b < U.size(); b++) es.push_back(m.conn[U[a]][U[b]]);
    return subgraph(m.host, vs, es);
}

LGraph tree_graph(const KModel& m, int i) { return subgraph(m.host, m.tree_verts[i], m.tree_edges[i]); }

std::string to_string(ModelClass c) {
    switch (c) {
        case ModelClass::gamma_odd: return "gamma_odd";
        case ModelClass::gamma_bipartite: return "gamma_bipartite";
        default: return "mixed";
    }
}

ClassifyResult classify_model(const KModel& m, int64_t cap) {
    if (m.t < 4) throw DomainError("classify_model needs t >= 4");
    ClassifyResult res;
    int odd = 0;
    for (int a = 0; a < m.t; a++)
        for (int b = a + 1; b < m.t; b++)
            for (int c = b + 1; c < m.t; c++)
                for (int d = c + 1; d < m.t; d++) {
                    std::vector<int> U{a, b, c, d};
                    auto w = find_nonzero_cycle(model_subgraph(m, U), cap);
                    res.subsets.push_back(U);
                    res.nonzero.push_back(w.has_value());
                    res.witness.push_back(w);
                    odd += w.has_value();
                }
    int n = (int)res.subsets.size();
    res.verdict = odd == n ? ModelClass::gamma_odd : odd == 0 ? ModelClass::gamma_bipartite : ModelClass::mixed;
    return res;
}

// ---- centrality ----

std::vector<int> endpoint_counts(const KModel& m, int i) {
    LGraph tg = tree_graph(m, i);
    std::vector<int> cnt(tg.n(), 0);
    for (int j = 0; j < m.t; j++)
        if (j != i) cnt[tg.vindex(m.endpoint(i, j))]++;
    return cnt;
}

namespace {

// endpoint count of the component of tree - s that contains the neighbour nb
int side_count(const LGraph& tg, const std::vector<int>& cnt, int s, int nb) {
    int total = 0;
    std::vector<int> st{nb};
    std::set<int> seen{s, nb};
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        total += cnt[tg.vindex(x)];
        for (int e : tg.incident(x)) {
            int y = tg.other(e, x);
            if (seen.insert(y).second) st.push_back(y);
        }
    }
    return total;
}

std::vector<int> neighbours(const LGraph& tg, int v) {
    std::vector<int> out;
    for (int e : tg.incident(v)) out.push_back(tg.other(e, v));
    std::sort(out.begin(), out.end());
    return out;
}

bool central_in(const LGraph& tg, const std::vector<int>& cnt, int t, int v, int d) {
    for (int nb : neighbours(tg, v))
        if (side_count(tg, cnt, v, nb) >= t - 1 - d) return false;
    return true;
}

}  // namespace

bool is_d_central(const KModel& m, int i, int v, int d) {
    LGraph tg = tree_graph(m, i);
    return central_in(tg, endpoint_counts(m, i), m.t, v, d);
}

std::vector<int> d_central_vertices(const KModel& m, int i, int d) {
    LGraph tg = tree_graph(m, i);
    auto cnt = endpoint_counts(m, i);
    int s = tg.vertices().front(), found = -1;
    for (int step = 0; step <= tg.n() && found < 0; step++) {
        int next = -1;
        for (int nb : neighbours(tg, s))
            if (side_count(tg, cnt, s, nb) >= m.t - 1 - d) {
                next = nb;
                break;
            }
        if (next < 0) found = s;
        else s = next;
    }
    if (found < 0)  // the walk can cycle once d >= (t-1)/2
        for (int v : tg.vertices())
            if (central_in(tg, cnt, m.t, v, d)) {
                found = v;
                break;
            }
    if (found < 0) return {};
    std::set<int> out{found};
    std::deque<int> q{found};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : neighbours(tg, x))
            if (!out.count(y) && central_in(tg, cnt, m.t, y, d)) {
                out.insert(y);
                q.push_back(y);
            }
    }
    return {out.begin(), out.end()};
}

bool is_d_branching(const KModel& m, int i, int u, int d) {
    LGraph tg = tree_graph(m, i);
    if (!tg.has_vertex(u)) throw DomainError("vertex is not in the tree");
    // slots: each connection edge at u, and each component of tree - u
    std::map<int, int> comp_of;
    for (int nb : neighbours(tg, u)) {
        std::vector<int> st{nb};
        comp_of[nb] = nb;
        std::set<int> seen{u, nb};
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int e : tg.incident(x)) {
                int y = tg.other(e, x);
                if (seen.insert(y).second) {
                    comp_of[y] = nb;
                    st.push_back(y);
                }
            }
        }
    }
    std::vector<int> sizes;
    std::map<int, int> comp_size;
    for (int j = 0; j < m.t; j++) {
        if (j == i) continue;
        int x = m.endpoint(i, j);
        if (x == u) sizes.push_back(1);
        else comp_size[comp_of.at(x)]++;
    }
    for (auto& [c, sz] : comp_size) sizes.push_back(sz);
    if (sizes.size() < 3) return false;
    std::sort(sizes.begin(), sizes.end());
    int kill = 0;
    for (size_t a = 0; a + 2 < sizes.size(); a++) kill += sizes[a];
    return kill > d;
}

bool branches_avoiding(const KModel& m, int i, int u, const std::vector<int>& Y) {
    LGraph tg = tree_graph(m, i);
    std::set<int> ys(Y.begin(), Y.end());
    std::vector<int> J;
    for (int j = 0; j < m.t; j++)
        if (j != i && !ys.count(j)) J.push_back(j);
    auto tree_path = [&](int a, int b) { return *bfs_path(tg, a, b); };
    for (size_t a = 0; a < J.size(); a++)
        for (size_t b = a + 1; b < J.size(); b++)
            for (size_t c = b + 1; c < J.size(); c++) {
                int e[3] = {m.endpoint(i, J[a]), m.endpoint(i, J[b]), m.endpoint(i, J[c])};
                // tree induced on T by the three connection edges: union of the pairwise tree paths
                // plus one pendant edge per index
                std::map<int, int> deg;
                std::set<int> edges;
                for (int x = 0; x < 3; x++)
                    for (int y = x + 1; y < 3; y++)
                        if (e[x] != e[y]) {
                            Path p = tree_path(e[x], e[y]);
                            edges.insert(p.edges.begin(), p.edges.end());
                        }
                for (int id : edges) {
                    deg[tg.edge(id).u]++;
                    deg[tg.edge(id).v]++;
                }
                for (int x = 0; x < 3; x++) deg[e[x]]++;
                bool ok = deg[u] == 3;
                for (auto& [v, dg] : deg)
                    if (v != u && dg > 2) ok = false;
                if (ok) return true;
            }
    return false;
}

// ---- chains ----

namespace {

// path from tree `from` across conn[from][to] into tree `to`, ending at the first vertex of `target`
Path into_tree(const KModel& m, int from, int to, const std::set<int>& target) {
    int a = m.endpoint(from, to), b = m.endpoint(to, from);
    LGraph tg = tree_graph(m, to);
    std::map<int, int> par;
    std::deque<int> q{b};
    par[b] = b;
    int hit = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (target.count(x)) {
            hit = x;
            break;
        }
        for (int y : neighbours(tg, x))
            if (!par.count(y)) {
                par[y] = x;
                q.push_back(y);
            }
    }
    if (hit < 0) throw InternalError("tree does not meet the target");
    std::vector<int> vs;
    for (int x = hit; x != b; x = par[x]) vs.push_back(x);
    vs.push_back(b);
    vs.push_back(a);
    std::reverse(vs.begin(), vs.end());
    Path p = path_from_vertices(tg, {vs.begin() + 1, vs.end()});
    Path out{{a}, {}};
    out.verts.insert(out.verts.end(), p.verts.begin(), p.verts.end());
    out.edges.push_back(m.conn[from][to]);
    out.edges.insert(out.edges.end(), p.edges.begin(), p.edges.end());
    return out;
}

Path tree_path(const KModel& m, int i, int a, int b) {
    if (a == b) return Path{{a}, {}};
    return *bfs_path(tree_graph(m, i), a, b);
}

// one K6 block on trees base..base+5
CycleChain block_chain(const KModel& m, int base, int64_t cap) {
    std::vector<int> mid{base + 1, base + 2, base + 3, base + 4};
    auto C = find_nonzero_cycle(model_subgraph(m, mid), cap);
    if (!C) throw DomainError("model is not gamma-odd: no nonzero cycle in the middle four trees");
    std::set<int> onC(C->verts.begin(), C->verts.end());
    std::vector<int> met;
    for (int x : mid) {
        bool hit = false;
        for (int v : m.tree_verts[x]) hit = hit || onC.count(v);
        if (hit) met.push_back(x);
    }
    if (met.size() < 3) throw InternalError("nonzero cycle meets fewer than three trees");
    met.resize(3);
    int last = base + 5;
    std::map<int, Path> P;
    for (int x : met) P[x] = into_tree(m, last, x, onC);
    const LGraph& g = m.host;
    for (int xi = 0; xi < 3; xi++) {
        int x = met[xi];
        Path R = into_tree(m, base, x, onC);
        int r = R.back();
        for (int j : met) {
            if (j == x) continue;
            int wj = P[j].back();
            auto [a1, a2] = cycle_arcs(*C, r, wj);
            if (weight(g, a1) == weight(g, a2)) continue;
            CycleChain ch;
            ch.core = concat(concat(R, a1), reverse(P[j]));
            ch.Q.push_back(a2);
            ch.P.push_back(a1);
            return ch;
        }
    }
    throw InternalError("no role assignment yields a nonzero link");
}

CycleChain chain_in_range(const KModel& m, int first, int l, int64_t cap) {
    CycleChain out;
    for (int b = 0; b < l; b++) {
        int base = first + 5 * b;
        CycleChain bc = block_chain(m, base, cap);
        if (b == 0) {
            out.core = bc.core;
        } else {
            out.core = concat(concat(out.core, tree_path(m, base, out.core.back(), bc.core.front())), bc.core);
        }
        out.Q.push_back(bc.Q[0]);
        out.P.push_back(bc.P[0]);
    }
    if (auto why = validate_chain(m.host, out)) throw InternalError("model chain invalid: " + *why);
    if (!is_nonzero(m.host, out)) throw InternalError("model chain is not nonzero");
    return out;
}

void check_odd_model(const KModel& m) {
    if (auto why = validate_model(m)) throw DomainError("invalid model: " + *why);
    if (has_involution(m.host.group)) throw DomainError("the group has an element of order two");
    if (classify_model(m).verdict != ModelClass::gamma_odd) throw DomainError("model is not gamma-odd");
}

}  // namespace

CycleChain chain_from_odd_model(const KModel& m, int l) {
    if (l < 1) throw DomainError("chain length must be positive");
    if (m.t != 5 * l + 1) throw DomainError("chain_from_odd_model needs t = 5l+1");
    check_odd_model(m);
    return chain_in_range(m, 0, l, kDefaultCap);
}

std::vector<ClosedCycleChain> closed_chains_from_model(const KModel& m, int k, int l) {
    if (k < 0) throw DomainError("k must be nonnegative");
    if (k == 0) return {};
    if (l < 1) throw DomainError("chain length must be positive");
    if (m.t != k * (5 * l + 1)) throw DomainError("closed_chains_from_model needs t = k(5l+1)");
    check_odd_model(m);
    std::vector<ClosedCycleChain> out;
    for (int c = 0; c < k; c++) {
        int F = c * (5 * l + 1), L = F + 5 * l;
        CycleChain ch = chain_in_range(m, F, l, kDefaultCap);
        Path closing = tree_path(m, L, ch.core.back(), m.endpoint(L, F));
        Path bridge{{m.endpoint(L, F), m.endpoint(F, L)}, {m.conn[L][F]}};
        closing = concat(concat(closing, bridge), tree_path(m, F, m.endpoint(F, L), ch.core.front()));
        out.push_back(close_chain(m.host, ch, closing));
    }
    return out;
}

}  // namespace glab
