#include "glab/linkages.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace glab {

std::string to_string(PairKind k) {
    switch (k) {
        case PairKind::series: return "series";
        case PairKind::nested: return "nested";
        default: return "crossing";
    }
}

PairKind classify_pair(std::pair<int, int> p, std::pair<int, int> q) {
    auto [p1, p2] = std::minmax(p.first, p.second);
    auto [q1, q2] = std::minmax(q.first, q.second);
    std::set<int> pts{p1, p2, q1, q2};
    if (pts.size() != 4) throw DomainError("X-paths share an endpoint");
    if (p2 < q1 || q2 < p1) return PairKind::series;
    if ((p1 < q1 && q2 < p2) || (q1 < p1 && p2 < q2)) return PairKind::nested;
    return PairKind::crossing;
}

std::vector<std::pair<int, int>> endpoint_positions(const Linkage& L) {
    std::map<int, int> pos;
    for (int i = 0; i < (int)L.X.size(); i++) pos[L.X[i]] = i;
    std::vector<std::pair<int, int>> out;
    for (auto& p : L.paths) {
        auto a = pos.find(p.front()), b = pos.find(p.back());
        if (a == pos.end() || b == pos.end()) throw DomainError("linkage path does not end in X");
        out.push_back(std::minmax(a->second, b->second));
    }
    return out;
}

PairKind classify_pair(const Linkage& L, int a, int b) {
    auto e = endpoint_positions(L);
    return classify_pair(e[a], e[b]);
}

PurityVerdict purity(const Linkage& L) {
    PurityVerdict v;
    auto e = endpoint_positions(L);
    int n = (int)e.size();
    if (n < 2) {
        v.kind = "series";
        return v;
    }
    PairKind ref = classify_pair(e[0], e[1]);
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (classify_pair(e[a], e[b]) != ref) {
                v.kind = "impure";
                v.offending = std::make_pair(a, b);
                return v;
            }
    v.kind = to_string(ref);
    return v;
}

std::optional<std::string> validate_linkage(const LGraph& g, const Linkage& L) {
    std::set<int> X(L.X.begin(), L.X.end());
    if (X.size() != L.X.size()) return std::string("ground set repeats a vertex");
    std::set<int> used;
    for (size_t i = 0; i < L.paths.size(); i++) {
        const Path& p = L.paths[i];
        std::string why, tag = "path " + std::to_string(i) + ": ";
        if (!is_path(g, p, &why)) return tag + why;
        if (p.trivial()) return tag + "trivial";
        if (!X.count(p.front()) || !X.count(p.back())) return tag + "endpoint outside X";
        for (size_t k = 1; k + 1 < p.verts.size(); k++)
            if (X.count(p.verts[k])) return tag + "interior meets X";
        for (int v : p.verts)
            if (!used.insert(v).second) return tag + "paths are not disjoint";
    }
    return std::nullopt;
}

Linkage sublinkage(const Linkage& L, const std::vector<int>& idx) {
    Linkage out;
    out.X = L.X;
    for (int i : idx) out.paths.push_back(L.paths[i]);
    return out;
}

Linkage sorted_linkage(const Linkage& L) {
    auto e = endpoint_positions(L);
    std::map<int, int> pos;
    for (int i = 0; i < (int)L.X.size(); i++) pos[L.X[i]] = i;
    std::vector<int> idx(L.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return e[a].first < e[b].first; });
    Linkage out;
    out.X = L.X;
    for (int i : idx) {
        const Path& p = L.paths[i];
        out.paths.push_back(pos[p.front()] < pos[p.back()] ? p : reverse(p));
    }
    return out;
}

namespace {

// longest strictly monotone subsequence of vals; returns positions
std::vector<int> monotone(const std::vector<int>& vals, bool increasing) {
    int n = (int)vals.size();
    std::vector<int> len(n, 1), prev(n, -1);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < i; j++) {
            bool ok = increasing ? vals[j] < vals[i] : vals[j] > vals[i];
            if (ok && len[j] + 1 > len[i]) len[i] = len[j] + 1, prev[i] = j;
        }
    int best = 0;
    for (int i = 1; i < n; i++)
        if (len[i] > len[best]) best = i;
    std::vector<int> out;
    for (int i = n ? best : -1; i >= 0; i = prev[i]) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

Linkage extract_pure(const Linkage& L, int t) {
    if (t < 1) throw DomainError("t must be positive");
    int64_t need = (int64_t)t * t * t;
    if (L.size() < need) throw DomainError("extract_pure needs at least t^3 paths");
    auto e = endpoint_positions(L);
    std::vector<int> order(L.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return e[a].first < e[b].first; });
    std::vector<int> rights;
    for (int i : order) rights.push_back(e[i].second);

    std::vector<int> nested;
    for (int k : monotone(rights, false)) nested.push_back(order[k]);
    std::vector<int> S;
    for (int k : monotone(rights, true)) S.push_back(order[k]);
    // S is an interval family with increasing left and right ends: overlapping means crossing
    std::vector<int> crossing;
    for (int q : S) {
        std::vector<int> here;
        for (int p : S)
            if (e[p].first <= e[q].first && e[q].first < e[p].second) here.push_back(p);
        if (here.size() > crossing.size()) crossing = here;
    }
    std::vector<int> series;
    int last = -1;
    for (int p : S)  // right ends increase along S, so this is the greedy by right end
        if (e[p].first > last) series.push_back(p), last = e[p].second;

    std::vector<int>* best = &series;
    if (nested.size() > best->size()) best = &nested;
    if (crossing.size() > best->size()) best = &crossing;
    if ((int)best->size() < t) throw InternalError("pure sub-linkage below the guaranteed size");
    std::vector<int> pick = *best;
    std::sort(pick.begin(), pick.end());
    Linkage out = sublinkage(L, pick);
    if (purity(out).kind == "impure") throw InternalError("extracted linkage is not pure");
    return out;
}

std::optional<std::string> validate_wall_linkage(const Wall& w, const Linkage& L) {
    if (L.X != top_nails(w)) return std::string("ground set must be the top nails in order");
    if (auto why = validate_linkage(w.host, L)) return why;
    auto wv = wall_vertices(w);
    std::set<int> in(wv.begin(), wv.end());
    for (auto& p : L.paths)
        for (size_t k = 1; k + 1 < p.verts.size(); k++)
            if (in.count(p.verts[k])) return std::string("linkage path runs through the wall");
    return std::nullopt;
}

OddLinkageReport is_gamma_odd_linkage(const Wall& w, const Linkage& L) {
    if (auto why = validate_wall_linkage(w, L)) throw DomainError("not a linkage of the wall: " + *why);
    auto br = is_bipartite_wall(w);
    if (!br.bipartite) throw DomainError("wall is not gamma-bipartite");
    std::map<int, Elem> sh;
    for (auto& op : br.cert) {
        auto it = sh.find(op.v);
        if (it == sh.end()) sh[op.v] = op.g;
        else it->second = add(w.host.group, it->second, op.g);
    }
    OddLinkageReport rep;
    rep.cert = br.cert;
    for (auto& p : L.paths) {
        Elem x = weight(w.host, p);
        for (int end : {p.front(), p.back()})
            if (sh.count(end)) x = add(w.host.group, x, sh[end]);
        rep.odd.push_back(!is_zero(x));
        rep.shifted_weight.push_back(x);
    }
    return rep;
}

namespace {

Cycle loop_to_cycle(const Path& p) {
    if (p.front() != p.back()) throw InternalError("closed walk expected");
    Cycle c;
    c.verts.assign(p.verts.begin(), p.verts.end() - 1);
    c.edges = p.edges;
    return c;
}

int nail_index(const Wall& w, int v) {
    auto tn = top_nails(w);
    auto it = std::find(tn.begin(), tn.end(), v);
    if (it == tn.end()) throw DomainError("vertex is not a top nail");
    return (int)(it - tn.begin()) + 1;  // nail (1, 2j)
}

// left endpoint: nail (1,2j) -> top of vertical path j; right endpoint -> top of vertical path j+1
Path nail_drop(const Wall& w, int v, bool left) {
    int j = nail_index(w, v);
    int vp = left ? j : j + 1;
    std::vector<RC> pts{{1, 2 * j}};
    auto vc = vertical_coords(w, vp);
    pts.insert(pts.end(), vc.begin(), vc.end());
    return walk(w, pts);
}

// x-y path through the drops of x and y and the given horizontal path
Path route(const Wall& w, int x, int y, int row) {
    if (row > w.r + 1) throw DomainError("wall has too few rows for this construction");
    Path a = nail_drop(w, x, true), b = nail_drop(w, y, false), h = horizontal_path(w, row);
    std::vector<int> vs, es;
    for (const Path* p : {&a, &b, &h}) {
        vs.insert(vs.end(), p->verts.begin(), p->verts.end());
        es.insert(es.end(), p->edges.begin(), p->edges.end());
    }
    LGraph u = subgraph(w.host, vs, es);
    auto p = bfs_path(u, x, y);
    if (!p) throw InternalError("no route between linkage endpoints");
    return *p;
}

void check_odd(const Wall& w, const Linkage& L) {
    auto rep = is_gamma_odd_linkage(w, L);
    for (size_t i = 0; i < rep.odd.size(); i++)
        if (!rep.odd[i]) throw DomainError("linkage path " + std::to_string(i) + " is not gamma-odd");
}

std::string checked_kind(const Linkage& L) {
    auto v = purity(L);
    if (v.kind == "impure") throw DomainError("linkage is not pure");
    return v.kind;
}

void check_disjoint(const std::vector<Cycle>& cs) {
    std::set<int> seen;
    for (auto& c : cs)
        for (int v : c.verts)
            if (!seen.insert(v).second) throw InternalError("packing cycles overlap");
}

}  // namespace

std::vector<Cycle> packing_from_linkage(const Wall& w, const Linkage& L0, int k, PackMode mode) {
    if (k < 0) throw DomainError("k must be nonnegative");
    if (k == 0) return {};
    check_odd(w, L0);
    std::string kind = checked_kind(L0);
    Linkage L = sorted_linkage(L0);
    const LGraph& g = w.host;
    Path R = horizontal_path(w, 1);
    std::vector<Cycle> out;
    if (mode == PackMode::half_integral) {
        if (kind != "crossing") throw DomainError("half-integral construction is for crossing linkages");
        if (L.size() < 2 * k) throw DomainError("need 2k paths");
        for (int i = 0; i < 2 * k; i++) {
            const Path& p = L.paths[i];
            out.push_back(cycle_from_paths(p, route(w, p.front(), p.back(), i + 2)));
        }
        std::map<int, int> mult;
        for (auto& c : out)
            for (int v : c.verts)
                if (++mult[v] > 2) throw InternalError("half-integral packing exceeds multiplicity 2");
    } else if (kind == "series") {
        if (L.size() < k) throw DomainError("need k paths");
        for (int i = 0; i < k; i++) {
            const Path& p = L.paths[i];
            out.push_back(cycle_from_paths(p, subpath(R, p.front(), p.back())));
        }
    } else if (kind == "nested") {
        if (L.size() < k) throw DomainError("need k paths");
        // the innermost path closes along the first row, the next one along the second, ...
        for (int i = 1; i <= k; i++) {
            const Path& p = L.paths[L.size() - i];
            out.push_back(cycle_from_paths(p, route(w, p.front(), p.back(), i)));
        }
    } else {
        if (has_involution(g.group)) throw DomainError("integral crossing construction needs a group without involutions");
        if (L.size() < 3 * k) throw DomainError("need 3k paths");
        for (int i = 0; i < k; i++) {
            bool done = false;
            for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
                const Path& La = L.paths[3 * i + a];
                const Path& Lb = L.paths[3 * i + b];
                Path walk_ = subpath(R, La.front(), Lb.front());
                walk_ = concat(walk_, Lb);
                walk_ = concat(walk_, subpath(R, Lb.back(), La.back()));
                walk_ = concat(walk_, reverse(La));
                Cycle c = loop_to_cycle(walk_);
                if (!is_zero(weight(g, c))) {
                    out.push_back(c);
                    done = true;
                    break;
                }
            }
            if (!done) throw InternalError("crossing triple without a nonzero cycle");
        }
    }
    for (auto& c : out) {
        std::string why;
        if (!is_cycle(g, c, &why)) throw InternalError("packing cycle invalid: " + why);
        if (is_zero(weight(g, c))) throw InternalError("packing cycle has weight zero");
    }
    if (mode == PackMode::integral) check_disjoint(out);
    return out;
}

namespace {

// chains for consecutive groups of the sorted linkage; each group yields `l` links
std::vector<CycleChain> group_chains(const Wall& w, const Linkage& L, const std::string& kind, int groups, int l) {
    const LGraph& g = w.host;
    Path R = horizontal_path(w, 1);
    std::vector<CycleChain> out;
    for (int m = 0; m < groups; m++) {
        CycleChain ch;
        int base = m * 3 * l;
        if (kind == "series") {
            for (int i = 0; i < l; i++) {
                const Path& p = L.paths[base + i];
                ch.Q.push_back(p);
                ch.P.push_back(subpath(R, p.front(), p.back()));
            }
            ch.core = subpath(R, L.paths[base].front(), L.paths[base + l - 1].back());
        } else {
            int first = -1, lastx = -1;
            for (int b = 0; b < l; b++) {
                int t0 = base + 3 * b;
                bool done = false;
                for (auto [a, c] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
                    const Path& Li = L.paths[t0 + a];
                    const Path& Lj = L.paths[t0 + c];
                    if (add(g.group, weight(g, Li), weight(g, Lj)) ==
                        zero(g.group))  // weight(L_i) == -weight(L_j)
                        continue;
                    Path q = concat(concat(Li, subpath(R, Li.back(), Lj.back())), reverse(Lj));
                    ch.Q.push_back(q);
                    ch.P.push_back(subpath(R, Li.front(), Lj.front()));
                    if (first < 0) first = Li.front();
                    lastx = Lj.front();
                    done = true;
                    break;
                }
                if (!done) throw DomainError("triple with pairwise opposite weights (the group has an involution)");
            }
            ch.core = subpath(R, first, lastx);
        }
        if (auto why = validate_chain(g, ch)) throw InternalError("linkage chain invalid: " + *why);
        if (!is_nonzero(g, ch)) throw InternalError("linkage chain is not nonzero");
        out.push_back(ch);
    }
    return out;
}

void check_chain_pre(const Wall& w, const Linkage& L, int need) {
    if (has_involution(w.host.group)) throw DomainError("the group has an element of order two");
    if (L.size() < need) throw DomainError("linkage too small");
    check_odd(w, L);
}

}  // namespace

CycleChain chain_from_linkage(const Wall& w, const Linkage& L0, int l) {
    if (l < 1) throw DomainError("chain length must be positive");
    check_chain_pre(w, L0, 3 * l);
    std::string kind = checked_kind(L0);
    Linkage L = sorted_linkage(L0);
    if (kind == "series") {
        CycleChain ch;
        ch.core = horizontal_path(w, 1);
        for (int i = 0; i < l; i++) {
            ch.Q.push_back(L.paths[i]);
            ch.P.push_back(subpath(ch.core, L.paths[i].front(), L.paths[i].back()));
        }
        if (auto why = validate_chain(w.host, ch)) throw InternalError("linkage chain invalid: " + *why);
        if (!is_nonzero(w.host, ch)) throw InternalError("linkage chain is not nonzero");
        return ch;
    }
    return group_chains(w, L, kind, 1, l)[0];
}

std::vector<ClosedCycleChain> closed_chains_from_linkage(const Wall& w, const Linkage& L0, int k, int l) {
    if (k < 0) throw DomainError("k must be nonnegative");
    if (k == 0) return {};
    if (l < 1) throw DomainError("chain length must be positive");
    check_chain_pre(w, L0, 3 * k * l);
    std::string kind = checked_kind(L0);
    Linkage L = sorted_linkage(L0);
    auto chains = group_chains(w, L, kind, k, l);
    std::vector<ClosedCycleChain> out;
    int prev_right = -100;
    for (auto& ch : chains) {
        int a = nail_index(w, ch.core.front()), b = nail_index(w, ch.core.back());
        if (2 * a - 1 <= prev_right) throw DomainError("consecutive chains end on adjacent nails; cannot close them apart");
        prev_right = 2 * b + 1;
        // core runs from nail (1,2a) to nail (1,2b); close below it through the second row
        std::vector<RC> pts{{1, 2 * b}, {1, 2 * b + 1}};
        for (int c = 2 * b + 1; c >= 2 * a - 1; c--) pts.push_back({2, c});
        pts.push_back({1, 2 * a - 1});
        pts.push_back({1, 2 * a});
        out.push_back(close_chain(w.host, ch, walk(w, pts)));
    }
    std::set<int> seen;
    for (auto& c : out)
        for (int v : chain_vertices(c))
            if (!seen.insert(v).second) throw InternalError("closed chains overlap");
    return out;
}

}  // namespace glab
