#include "glab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace glab {

Elem Rng::element(const Group& g) {
    Elem e;
    for (int m : g.mod) e.push_back(uniform(m));
    return e;
}

Elem Rng::nonzero_element(const Group& g) {
    if (g.order() < 2) throw DomainError("trivial group has no nonzero element");
    for (;;) {
        Elem e = element(g);
        if (!is_zero(e)) return e;
    }
}

LGraph projective_grid(int n, const Group& group, const Elem& g, int k) {
    require(n >= 2, "grid side must be at least 2");
    require(k >= 0 && k <= n, "need 0 <= k <= n");
    check_elem(group, g);
    require(!is_zero(g) && twice_zero(group, g), "cross label must have order 2");
    LGraph G(group);
    auto id = [n](int r, int c) { return (r - 1) * n + (c - 1); };
    for (int r = 1; r <= n; r++)
        for (int c = 1; c <= n; c++) G.add_vertex(id(r, c));
    for (int r = 1; r <= n; r++)
        for (int c = 1; c <= n; c++) {
            if (c < n) G.add_edge(id(r, c), id(r, c + 1));
            if (r < n) G.add_edge(id(r, c), id(r + 1, c));
        }
    for (int i = 1; i <= k; i++) G.add_edge(id(1, i), id(n, n - i + 1), g);
    return G;
}

LGraph dnl_instance(int n, int m, int l) {
    require(n >= 2, "grid side must be at least 2");
    require(0 < l && l < m, "need 0 < l < m");
    Group group = cyclic(m);
    LGraph G(group);
    auto id = [n](int r, int c) { return (r - 1) * n + (c - 1); };
    for (int r = 1; r <= n; r++)
        for (int c = 1; c <= n; c++) G.add_vertex(id(r, c));
    for (int r = 1; r <= n; r++)
        for (int c = 1; c <= n; c++) {
            if (c < n) G.add_edge(id(r, c), id(r, c + 1));
            if (r < n) G.add_edge(id(r, c), id(r + 1, c));
        }
    for (int i = 1; i <= n; i++) G.add_edge(id(1, i), id(n, n - i + 1), make_elem(group, {l}));
    return G;
}

Wall facially_odd_wall(int r, int s, const Group& group, const std::vector<Elem>& weights) {
    require((int)weights.size() == r * s, "need one weight per brick");
    for (auto& x : weights) {
        check_elem(group, x);
        require(!is_zero(x), "brick weights must be nonzero");
    }
    Wall w = elementary_wall(r, s, group);
    // bottom row first: a brick's lower edges are designated edges of the row below
    for (int i = r; i >= 1; i--)
        for (int j = 1; j <= s; j++) {
            int cl = i % 2 ? 2 * j - 1 : 2 * j;
            int e = segment(w, {i, cl}, {i, cl + 1}).edges.front();
            w.host.set_label(e, zero(group));
            Elem rest = weight(w.host, brick(w, i, j));
            w.host.set_label(e, sub(group, weights[(i - 1) * s + (j - 1)], rest));
        }
    return w;
}

Wall facially_odd_wall(int r, int s, const Group& group, uint64_t seed) {
    Rng rng(seed);
    std::vector<Elem> ws;
    for (int i = 0; i < r * s; i++) ws.push_back(rng.nonzero_element(group));
    return facially_odd_wall(r, s, group, ws);
}

WallLinkage bipartite_wall_with_linkage(int r, PairKind purity, const std::vector<Elem>& weights,
                                        const Group& group, uint64_t seed, int shifts) {
    int n = (int)weights.size();
    require(n >= 1, "need at least one path");
    for (auto& x : weights) {
        check_elem(group, x);
        require(!is_zero(x), "linkage path weights must be nonzero");
    }
    WallLinkage out{elementary_wall(r, 4 * n, group), {}};
    Wall& w = out.wall;
    auto tn = top_nails(w);
    out.linkage.X = tn;
    std::vector<int> p(2 * n);
    for (int i = 0; i < 2 * n; i++) p[i] = tn[2 * i];  // every other nail
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; i++) {
        if (purity == PairKind::series) pairs.push_back({p[2 * i], p[2 * i + 1]});
        else if (purity == PairKind::nested) pairs.push_back({p[i], p[2 * n - 1 - i]});
        else pairs.push_back({p[i], p[n + i]});
    }
    int next = w.host.max_vertex_id() + 1;
    for (int i = 0; i < n; i++) {
        auto [x, y] = pairs[i];
        int mid = next++;
        w.host.add_vertex(mid);
        int e1 = w.host.add_edge(x, mid, weights[i]);
        int e2 = w.host.add_edge(mid, y, zero(group));
        out.linkage.paths.push_back({{x, mid, y}, {e1, e2}});
    }
    if (shifts > 0) {
        auto inv = involutions(group);
        if (!inv.empty()) {
            Rng rng(seed);
            const auto& vs = w.host.vertices();
            for (int i = 0; i < shifts; i++) {
                int v = vs[rng.uniform((int)vs.size())];
                shift_in_place(w.host, v, inv[rng.uniform((int)inv.size())]);
            }
        }
    }
    return out;
}

LGraph random_bipartite_labelling(const LGraph& g, const Group& group, uint64_t seed, int shifts) {
    LGraph out(group);
    for (int v : g.vertices()) out.add_vertex(v);
    for (auto& e : g.edges()) out.add_edge_with_id(e.id, e.u, e.v, zero(group));
    auto inv = involutions(group);
    if (inv.empty() || out.n() == 0) return out;
    Rng rng(seed);
    for (int i = 0; i < shifts; i++) {
        int v = out.vertices()[rng.uniform(out.n())];
        shift_in_place(out, v, inv[rng.uniform((int)inv.size())]);
    }
    return out;
}

Planted planted_nonzero(const LGraph& g, const Group& group, uint64_t seed, int shifts) {
    Planted p{random_bipartite_labelling(g, group, seed, shifts), -1};
    std::vector<int> cand;
    for (auto& blk : biconnected_blocks(g))
        if (blk.size() > 1) cand.insert(cand.end(), blk.begin(), blk.end());
    for (auto& e : g.edges())
        if (e.loop()) cand.push_back(e.id);
    require(!cand.empty(), "graph has no cycle to plant a nonzero weight on");
    std::sort(cand.begin(), cand.end());
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    int e = cand[rng.uniform((int)cand.size())];
    p.g.set_label(e, add(group, p.g.edge(e).label, rng.nonzero_element(group)));
    p.edge = e;
    return p;
}

LGraph random_graph(int n, int m, const Group& group, uint64_t seed, bool loops) {
    require(n >= 1, "need at least one vertex");
    require(loops || n >= 2 || m == 0, "cannot place an edge");
    Rng rng(seed);
    LGraph g(group);
    for (int v = 0; v < n; v++) g.add_vertex(v);
    for (int i = 0; i < m; i++) {
        int u = rng.uniform(n), v = rng.uniform(n);
        while (!loops && u == v) v = rng.uniform(n);
        g.add_edge(u, v, rng.element(group));
    }
    return g;
}

namespace {

KModel build_model(int t, const Group& group, int max_tree, Rng& rng, const std::vector<Elem>* conn_w,
                   bool random_labels) {
    require(t >= 1 && max_tree >= 1, "bad model parameters");
    KModel m;
    m.host = LGraph(group);
    m.t = t;
    m.tree_verts.resize(t);
    m.tree_edges.resize(t);
    int next = 0;
    for (int i = 0; i < t; i++) {
        int sz = 1 + rng.uniform(max_tree);
        for (int k = 0; k < sz; k++) {
            int v = next++;
            m.host.add_vertex(v);
            m.tree_verts[i].push_back(v);
            if (k > 0) {
                int par = m.tree_verts[i][rng.uniform(k)];
                Elem lab = random_labels ? rng.element(group) : zero(group);
                m.tree_edges[i].push_back(m.host.add_edge(par, v, lab));
            }
        }
    }
    m.conn.assign(t, std::vector<int>(t, -1));
    int idx = 0;
    for (int i = 0; i < t; i++)
        for (int j = i + 1; j < t; j++, idx++) {
            int a = m.tree_verts[i][rng.uniform((int)m.tree_verts[i].size())];
            int b = m.tree_verts[j][rng.uniform((int)m.tree_verts[j].size())];
            Elem lab = conn_w ? (*conn_w)[idx] : random_labels ? rng.element(group) : rng.nonzero_element(group);
            m.conn[i][j] = m.conn[j][i] = m.host.add_edge(a, b, lab);
        }
    if (auto why = validate_model(m)) throw InternalError("generated model invalid: " + *why);
    return m;
}

}  // namespace

KModel random_model(int t, const Group& group, int max_tree, uint64_t seed, bool random_labels) {
    Rng rng(seed);
    return build_model(t, group, max_tree, rng, nullptr, random_labels);
}

KModel odd_model(int t, const Group& group, const std::optional<std::vector<Elem>>& edge_weights, int max_tree,
                 uint64_t seed, int retries) {
    require(t >= 4, "odd models need t >= 4");
    if (edge_weights) {
        require((int)edge_weights->size() == t * (t - 1) / 2, "need one weight per pair of trees");
        for (auto& x : *edge_weights) check_elem(group, x);
    }
    Rng rng(seed);
    std::vector<int> bad;
    for (int attempt = 0; attempt < retries; attempt++) {
        KModel m = build_model(t, group, max_tree, rng, edge_weights ? &*edge_weights : nullptr, false);
        auto cr = classify_model(m);
        if (cr.verdict == ModelClass::gamma_odd) return m;
        for (size_t i = 0; i < cr.subsets.size(); i++)
            if (!cr.nonzero[i]) {
                bad = cr.subsets[i];
                break;
            }
    }
    std::string s;
    for (int v : bad) s += (s.empty() ? "" : ",") + std::to_string(v);
    throw DomainError("no gamma-odd model after " + std::to_string(retries) + " attempts; subset {" + s +
                      "} has no nonzero cycle");
}

ChainInstance ladder_closed_chain(int p, int a, int q, uint64_t seed) {
    require(is_prime(p) && a >= 1 && q >= 1, "bad chain parameters");
    int m = 1;
    for (int i = 0; i < a; i++) m *= p;
    Group group = cyclic(m);
    Rng rng(seed);
    ChainInstance out{LGraph(group), {}};
    LGraph& g = out.g;
    int L = 3 * q;
    for (int v = 0; v < L; v++) g.add_vertex(v);
    std::vector<int> ce;
    for (int v = 0; v < L; v++) ce.push_back(g.add_edge(v, (v + 1) % L, rng.element(group)));
    out.chain.C = Cycle{};
    for (int v = 0; v < L; v++) out.chain.C.verts.push_back(v), out.chain.C.edges.push_back(ce[v]);
    for (int i = 0; i < q; i++) {
        int a0 = 3 * i, a1 = 3 * i + 1, a2 = 3 * i + 2, x = L + i;
        g.add_vertex(x);
        Path csub{{a0, a1, a2}, {ce[a0], ce[a1]}};
        int inc;
        do inc = rng.uniform(m);
        while (inc % p == 0);
        Elem u = rng.element(group);
        Elem v = sub(group, add(group, make_elem(group, {inc}), weight(g, csub)), u);
        int e1 = g.add_edge(a0, x, u), e2 = g.add_edge(x, a2, v);
        out.chain.Q.push_back({{a0, x, a2}, {e1, e2}});
        out.chain.Csub.push_back(csub);
    }
    if (auto why = validate_chain(g, out.chain)) throw InternalError("ladder chain invalid: " + *why);
    return out;
}

LinkageInstance random_linkage(int n, uint64_t seed) {
    require(n >= 1, "need at least one path");
    Rng rng(seed);
    std::vector<int> perm(2 * n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    LinkageInstance out{LGraph(cyclic(2)), {}};
    for (int v = 0; v < 3 * n; v++) out.g.add_vertex(v);
    for (int v = 0; v < 2 * n; v++) out.linkage.X.push_back(v);
    for (int i = 0; i < n; i++) {
        int x = perm[2 * i], y = perm[2 * i + 1], mid = 2 * n + i;
        int e1 = out.g.add_edge(x, mid), e2 = out.g.add_edge(mid, y);
        out.linkage.paths.push_back({{x, mid, y}, {e1, e2}});
    }
    return out;
}

}  // namespace glab
