#include "glab/decomp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace glab {

// ---- 3-blocks ----

std::vector<std::vector<char>> inseparable_matrix(const LGraph& g) {
    int n = g.n();
    std::vector<std::vector<char>> ok(n, std::vector<char>(n, 1));
    const auto& V = g.vertices();
    // label components of G - S for every S with |S| <= 2
    auto cut = [&](const std::vector<int>& S) {
        std::vector<int> comp(n, -1);
        for (int s : S) comp[s] = -2;
        int c = 0;
        for (int s = 0; s < n; s++) {
            if (comp[s] != -1) continue;
            std::vector<int> st{s};
            comp[s] = c;
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                for (int p : g.incident_pos(V[x])) {
                    const Edge& e = g.edge_at(p);
                    int y = g.vindex(e.u == V[x] ? e.v : e.u);
                    if (comp[y] == -1) {
                        comp[y] = c;
                        st.push_back(y);
                    }
                }
            }
            c++;
        }
        if (c <= 1) return;
        for (int a = 0; a < n; a++)
            for (int b = a + 1; b < n; b++)
                if (comp[a] >= 0 && comp[b] >= 0 && comp[a] != comp[b]) ok[a][b] = ok[b][a] = 0;
    };
    cut({});
    for (int a = 0; a < n; a++) {
        cut({a});
        for (int b = a + 1; b < n; b++) cut({a, b});
    }
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            if (a != b && g.adjacent(V[a], V[b])) ok[a][b] = 1;
    return ok;
}

std::vector<ThreeBlock> three_blocks(const LGraph& g) {
    int n = g.n();
    auto ok = inseparable_matrix(g);
    std::vector<std::vector<int>> cliques;
    std::vector<int> R;
    std::function<void(std::vector<int>, std::vector<int>)> bk = [&](std::vector<int> P, std::vector<int> X) {
        if (P.empty() && X.empty()) {
            if (R.size() >= 3) cliques.push_back(R);
            return;
        }
        int pivot = !P.empty() ? P[0] : X[0];
        std::vector<int> cand;
        for (int v : P)
            if (!ok[pivot][v] || v == pivot) cand.push_back(v);
        for (int v : cand) {
            std::vector<int> P2, X2;
            for (int w : P)
                if (w != v && ok[v][w]) P2.push_back(w);
            for (int w : X)
                if (ok[v][w]) X2.push_back(w);
            R.push_back(v);
            bk(P2, X2);
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), v));
            X.push_back(v);
        }
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; i++) all[i] = i;
    bk(all, {});
    std::vector<ThreeBlock> out;
    for (auto& cl : cliques) {
        ThreeBlock b;
        for (int i : cl) b.verts.push_back(g.vertices()[i]);
        std::sort(b.verts.begin(), b.verts.end());
        std::set<int> inB(b.verts.begin(), b.verts.end());
        for (const Edge& e : g.edges())
            if (inB.count(e.u) && inB.count(e.v)) {
                Bridge br;
                br.attachments = e.u == e.v ? std::vector<int>{e.u} : std::vector<int>{std::min(e.u, e.v), std::max(e.u, e.v)};
                br.edges = {e.id};
                b.bridges.push_back(br);
            }
        LGraph rest = delete_vertices(g, b.verts);
        for (auto& comp : components(rest)) {
            Bridge br;
            br.interior = comp;
            std::set<int> inC(comp.begin(), comp.end()), att;
            for (const Edge& e : g.edges()) {
                bool cu = inC.count(e.u), cv = inC.count(e.v);
                if (!cu && !cv) continue;
                br.edges.push_back(e.id);
                if (!cu) att.insert(e.u);
                if (!cv) att.insert(e.v);
            }
            br.attachments.assign(att.begin(), att.end());
            b.bridges.push_back(br);
        }
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const ThreeBlock& a, const ThreeBlock& b) { return a.verts < b.verts; });
    return out;
}

LabelledThreeBlock labelled_three_block(const LGraph& g, const ThreeBlock& b, int64_t cap) {
    LabelledThreeBlock lb;
    lb.block = b.verts;
    lb.virt = LGraph(g.group);
    for (int v : b.verts) lb.virt.add_vertex(v);
    auto paths = enumerate_A_paths(g, b.verts, false, cap);
    // key: (u, v, label rank) so virtual edges come out in a stable order
    std::map<std::tuple<int, int, int64_t>, Path> best;
    for (auto& p : paths) {
        Path q = p.front() <= p.back() ? p : reverse(p);
        auto key = std::make_tuple(q.front(), q.back(), elem_index(g.group, weight(g, q)));
        auto it = best.find(key);
        if (it == best.end() || q.edges.size() < it->second.edges.size() ||
            (q.edges.size() == it->second.edges.size() && q.edges < it->second.edges))
            best[key] = q;
    }
    for (auto& [key, p] : best) {
        int id = lb.virt.add_edge(p.front(), p.back(), weight(g, p));
        lb.realizer[id] = p;
    }
    return lb;
}

Path expand_path(const LabelledThreeBlock& lb, const Path& p) {
    Path out;
    out.verts.push_back(p.front());
    for (size_t i = 0; i < p.edges.size(); i++) {
        Path r = lb.realizer.at(p.edges[i]);
        if (r.front() != p.verts[i]) r = reverse(r);
        out = concat(out, r);
    }
    return out;
}

std::optional<Cycle> expand_cycle(const LGraph& g, const LabelledThreeBlock& lb, const Cycle& c) {
    Cycle out;
    int n = c.length();
    for (int i = 0; i < n; i++) {
        Path r = lb.realizer.at(c.edges[i]);
        if (r.front() != c.verts[i]) r = reverse(r);
        out.verts.insert(out.verts.end(), r.verts.begin(), r.verts.end() - 1);
        out.edges.insert(out.edges.end(), r.edges.begin(), r.edges.end());
    }
    if (!is_cycle(g, out)) return std::nullopt;
    return out;
}

// ---- shifting ----

LGraph apply_certificate(const LGraph& g, const ShiftCertificate& cert) {
    LGraph h = g;
    for (auto& op : cert) shift_in_place(h, op.v, op.g);
    return h;
}

ShiftResult shift_reduce(const LGraph& g) {
    for (const Edge& e : g.edges())
        if (!twice_zero(g.group, e.label))
            throw DomainError("shift_reduce: label of edge " + std::to_string(e.id) + " has 2g != 0");
    ShiftResult res;
    for (const Edge& e : g.edges())
        if (e.loop() && !is_zero(e.label)) {
            res.witness = Cycle{{e.u}, {e.id}};
            return res;
        }
    LGraph h = g;
    int n = g.n();
    const auto& V = g.vertices();
    std::vector<int> parent(n, -1), pedge(n, -1), depth(n, -1);
    std::vector<char> tree_edge(g.m(), 0);
    for (int s = 0; s < n; s++) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        std::vector<int> q{s};
        for (size_t qi = 0; qi < q.size(); qi++) {
            int x = q[qi];
            for (int p : h.incident_pos(V[x])) {
                const Edge& e = h.edge_at(p);
                if (e.loop()) continue;
                int y = h.vindex(e.u == V[x] ? e.v : e.u);
                if (depth[y] >= 0) continue;
                depth[y] = depth[x] + 1;
                parent[y] = x;
                pedge[y] = e.id;
                tree_edge[p] = 1;
                if (!is_zero(e.label)) {
                    Elem gsh = e.label;
                    res.cert.push_back({V[y], gsh});
                    shift_in_place(h, V[y], gsh);
                }
                q.push_back(y);
            }
        }
    }
    for (int p = 0; p < h.m(); p++) {
        const Edge& e = h.edge_at(p);
        if (tree_edge[p] || e.loop() || is_zero(e.label)) continue;
        // fundamental cycle of e
        int a = h.vindex(e.u), b = h.vindex(e.v);
        std::vector<int> va{a}, ea, vb{b}, eb;
        while (depth[a] > depth[b]) ea.push_back(pedge[a]), a = parent[a], va.push_back(a);
        while (depth[b] > depth[a]) eb.push_back(pedge[b]), b = parent[b], vb.push_back(b);
        while (a != b) {
            ea.push_back(pedge[a]), a = parent[a], va.push_back(a);
            eb.push_back(pedge[b]), b = parent[b], vb.push_back(b);
        }
        // u ... lca ... v, closed by e
        Cycle c;
        for (int x : va) c.verts.push_back(V[x]);
        c.edges = ea;
        for (int i = (int)vb.size() - 2; i >= 0; i--) c.verts.push_back(V[vb[i]]);
        for (int i = (int)eb.size() - 1; i >= 0; i--) c.edges.push_back(eb[i]);
        c.edges.push_back(e.id);
        if (!is_cycle(g, c) || is_zero(weight(g, c))) throw InternalError("shift_reduce produced a bad witness");
        res.witness = c;
        return res;
    }
    res.reduced = true;
    return res;
}

// ---- blocks ----

std::vector<std::vector<int>> biconnected_blocks(const LGraph& g) {
    int n = g.n();
    const auto& V = g.vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> estack;
    std::vector<std::vector<int>> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int x, int pe) {
        disc[x] = low[x] = timer++;
        for (int p : g.incident_pos(V[x])) {
            const Edge& e = g.edge_at(p);
            if (e.loop() || e.id == pe) continue;
            int y = g.vindex(e.u == V[x] ? e.v : e.u);
            if (disc[y] < 0) {
                estack.push_back(e.id);
                dfs(y, e.id);
                low[x] = std::min(low[x], low[y]);
                if (low[y] >= disc[x]) {
                    std::vector<int> blk;
                    while (true) {
                        int f = estack.back();
                        estack.pop_back();
                        blk.push_back(f);
                        if (f == e.id) break;
                    }
                    std::sort(blk.begin(), blk.end());
                    out.push_back(blk);
                }
            } else if (disc[y] < disc[x]) {
                estack.push_back(e.id);
                low[x] = std::min(low[x], disc[y]);
            }
        }
    };
    for (int s = 0; s < n; s++)
        if (disc[s] < 0) dfs(s, -1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Solver {
    int64_t cap;
    std::vector<BlockCertificate>* dossier;

    void record(const LGraph& k) {
        BlockCertificate bc;
        bc.verts = k.vertices();
        for (const Edge& e : k.edges()) bc.edges.push_back(e.id);
        bool inv = true;
        for (const Edge& e : k.edges()) inv = inv && twice_zero(k.group, e.label);
        if (inv) {
            auto r = shift_reduce(k);
            if (!r.reduced) throw InternalError("block certified bipartite but shift_reduce found a witness");
            bc.cert = r.cert;
        }
        dossier->push_back(bc);
    }

    // graph without loops, arbitrary connectivity
    std::optional<Cycle> general(const LGraph& g) {
        for (auto& blk : biconnected_blocks(g)) {
            if (blk.size() == 1) continue;
            LGraph k = subgraph(g, {}, blk);
            if (auto w = block(k)) return w;
        }
        return std::nullopt;
    }

    std::optional<Cycle> block(const LGraph& k) {
        int n = k.n();
        const auto& V = k.vertices();
        if (n <= 3) {
            if (auto c = find_nonzero_cycle(k, cap)) return c;
            record(k);
            return std::nullopt;
        }
        for (int a = 0; a < n; a++)
            for (int b = a + 1; b < n; b++) {
                LGraph rest = delete_vertices(k, {V[a], V[b]});
                auto comps = components(rest);
                if (comps.size() < 2) continue;
                return split(k, V[a], V[b], comps[0]);
            }
        return three_connected(k);
    }

    std::optional<Cycle> split(const LGraph& k, int x, int y, const std::vector<int>& c1) {
        std::set<int> in1(c1.begin(), c1.end());
        std::vector<int> e1, e2;
        for (const Edge& e : k.edges()) (in1.count(e.u) || in1.count(e.v) ? e1 : e2).push_back(e.id);
        std::vector<int> v1 = c1;
        v1.push_back(x), v1.push_back(y);
        LGraph h1 = subgraph(k, v1, e1);
        std::vector<int> v2;
        for (int v : k.vertices())
            if (!in1.count(v)) v2.push_back(v);
        LGraph h2 = subgraph(k, v2, e2);
        if (auto w = general(h1)) return w;
        if (auto w = general(h2)) return w;
        auto weights = [&](const LGraph& h) {
            std::map<int64_t, Path> m;
            for (auto& p : enumerate_A_paths(h, {x, y}, false, cap)) {
                Path q = p.front() == x ? p : reverse(p);
                m.emplace(elem_index(h.group, weight(h, q)), q);
            }
            return m;
        };
        auto s1 = weights(h1), s2 = weights(h2);
        for (auto& [i1, p1] : s1)
            for (auto& [i2, p2] : s2) {
                Cycle c = cycle_from_paths(p1, p2);
                if (!is_zero(weight(k, c))) return c;
            }
        return std::nullopt;
    }

    std::optional<Cycle> three_connected(const LGraph& k) {
        for (const Edge& e : k.edges()) {
            auto ps = disjoint_paths(k, e.u, e.v, 2, e.id);
            if (ps.size() < 2) throw InternalError("3-connected block lacks two disjoint paths");
            Path pe{{e.u, e.v}, {e.id}};
            Cycle cands[3] = {cycle_from_paths(pe, ps[0]), cycle_from_paths(pe, ps[1]),
                              cycle_from_paths(ps[0], ps[1])};
            for (auto& c : cands)
                if (!is_zero(weight(k, c))) return c;
        }
        // every label now satisfies 2g = 0
        auto r = shift_reduce(k);
        if (!r.reduced) return r.witness;
        BlockCertificate bc;
        bc.verts = k.vertices();
        for (const Edge& e : k.edges()) bc.edges.push_back(e.id);
        bc.cert = r.cert;
        dossier->push_back(bc);
        return std::nullopt;
    }
};

}  // namespace

BipartiteResult is_gamma_bipartite(const LGraph& g, int64_t cap) {
    BipartiteResult res;
    std::vector<int> loops;
    for (const Edge& e : g.edges())
        if (e.loop()) {
            if (!is_zero(e.label)) {
                res.witness = Cycle{{e.u}, {e.id}};
                return res;
            }
            loops.push_back(e.id);
        }
    LGraph h = loops.empty() ? g : delete_edges(g, loops);
    Solver s{cap, &res.dossier};
    if (auto w = s.general(h)) {
        if (!is_cycle(g, *w) || is_zero(weight(g, *w))) throw InternalError("bipartiteness witness is invalid");
        res.witness = canonical(*w);
        res.dossier.clear();
        return res;
    }
    res.bipartite = true;
    return res;
}

}  // namespace glab
