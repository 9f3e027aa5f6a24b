#include "glab/chains.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace glab {

namespace {

// is q a contiguous piece of seq (either direction) with the given ends?
bool is_subpath_of(const std::vector<int>& seq_v, const std::vector<int>& seq_e, bool cyclic, const Path& q) {
    int n = (int)seq_v.size();
    if (q.verts.empty()) return false;
    auto it = std::find(seq_v.begin(), seq_v.end(), q.front());
    if (it == seq_v.end()) return false;
    int s = (int)(it - seq_v.begin());
    int m = (int)q.edges.size();
    for (int dir : {1, -1}) {
        bool ok = true;
        for (int k = 0; k < m && ok; k++) {
            int vi = s + dir * (k + 1), ei = dir == 1 ? s + k : s - k - 1;
            if (cyclic) {
                vi = ((vi % n) + n) % n;
                ei = ((ei % n) + n) % n;
                if (m >= n) ok = false;
            } else if (vi < 0 || vi >= n || ei < 0 || ei >= (int)seq_e.size()) {
                ok = false;
            }
            if (ok) ok = seq_v[vi] == q.verts[k + 1] && seq_e[ei] == q.edges[k];
        }
        if (ok) return true;
    }
    return false;
}

template <class Core>
std::optional<std::string> validate_links(const LGraph& g, const std::vector<int>& cv, const std::vector<int>& ce,
                                          bool cyclic, const std::vector<Path>& Q, const std::vector<Path>& P,
                                          const Core&) {
    if (Q.size() != P.size()) return std::string("need one core subpath per rerouting path");
    std::set<int> onC(cv.begin(), cv.end()), coreE(ce.begin(), ce.end());
    std::set<int> usedQ, usedP;
    for (size_t i = 0; i < Q.size(); i++) {
        std::string why;
        std::string tag = "link " + std::to_string(i + 1) + ": ";
        if (!is_path(g, Q[i], &why)) return tag + "Q is not a path: " + why;
        if (Q[i].trivial()) return tag + "Q is trivial";
        if (!onC.count(Q[i].front()) || !onC.count(Q[i].back())) return tag + "Q does not end on the core";
        for (size_t k = 1; k + 1 < Q[i].verts.size(); k++)
            if (onC.count(Q[i].verts[k])) return tag + "Q meets the core internally";
        for (int e : Q[i].edges)
            if (coreE.count(e)) return tag + "Q uses a core edge";
        if (!is_path(g, P[i], &why)) return tag + "core subpath is not a path: " + why;
        bool same = (P[i].front() == Q[i].front() && P[i].back() == Q[i].back()) ||
                    (P[i].front() == Q[i].back() && P[i].back() == Q[i].front());
        if (!same) return tag + "core subpath and Q have different ends";
        if (!is_subpath_of(cv, ce, cyclic, P[i])) return tag + "core subpath is not part of the core";
        for (int v : Q[i].verts)
            if (!usedQ.insert(v).second) return tag + "rerouting paths are not disjoint";
        for (int v : P[i].verts)
            if (!usedP.insert(v).second) return tag + "core subpaths are not disjoint";
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_chain(const LGraph& g, const CycleChain& ch) {
    std::string why;
    if (!is_path(g, ch.core, &why)) return "core is not a path: " + why;
    return validate_links(g, ch.core.verts, ch.core.edges, false, ch.Q, ch.P, ch);
}

std::optional<std::string> validate_chain(const LGraph& g, const ClosedCycleChain& ch) {
    std::string why;
    if (!is_cycle(g, ch.C, &why)) return "C is not a cycle: " + why;
    return validate_links(g, ch.C.verts, ch.C.edges, true, ch.Q, ch.Csub, ch);
}

static std::vector<Elem> incs(const LGraph& g, const std::vector<Path>& Q, const std::vector<Path>& P) {
    std::vector<Elem> out;
    for (size_t i = 0; i < Q.size(); i++) out.push_back(sub(g.group, weight(g, Q[i]), weight(g, P[i])));
    return out;
}

std::vector<Elem> increments(const LGraph& g, const CycleChain& ch) { return incs(g, ch.Q, ch.P); }
std::vector<Elem> increments(const LGraph& g, const ClosedCycleChain& ch) { return incs(g, ch.Q, ch.Csub); }

bool is_nonzero(const LGraph& g, const CycleChain& ch) {
    for (auto& a : increments(g, ch))
        if (is_zero(a)) return false;
    return true;
}

bool is_nonzero(const LGraph& g, const ClosedCycleChain& ch) {
    for (auto& a : increments(g, ch))
        if (is_zero(a)) return false;
    return true;
}

std::vector<int> chain_vertices(const CycleChain& ch) {
    std::set<int> vs(ch.core.verts.begin(), ch.core.verts.end());
    for (auto& q : ch.Q) vs.insert(q.verts.begin(), q.verts.end());
    return {vs.begin(), vs.end()};
}

std::vector<int> chain_vertices(const ClosedCycleChain& ch) {
    std::set<int> vs(ch.C.verts.begin(), ch.C.verts.end());
    for (auto& q : ch.Q) vs.insert(q.verts.begin(), q.verts.end());
    return {vs.begin(), vs.end()};
}

std::vector<Cycle> chain_cycles(const CycleChain& ch) {
    std::vector<Cycle> out;
    for (size_t i = 0; i < ch.Q.size(); i++) {
        Path p = ch.P[i].front() == ch.Q[i].front() ? ch.P[i] : reverse(ch.P[i]);
        out.push_back(cycle_from_paths(ch.Q[i], p));
    }
    return out;
}

ClosedCycleChain close_chain(const LGraph& g, const CycleChain& ch, const Path& closing) {
    Path cl = closing.front() == ch.core.back() ? closing : reverse(closing);
    if (cl.front() != ch.core.back() || cl.back() != ch.core.front())
        throw DomainError("closing path must join the ends of the core");
    ClosedCycleChain out;
    out.C = cycle_from_paths(ch.core, reverse(cl));
    out.Q = ch.Q;
    out.Csub = ch.P;
    if (auto why = validate_chain(g, out)) throw DomainError("closed chain invalid: " + *why);
    return out;
}

// ---- walls ----

namespace {

struct Template {
    std::vector<RC> core;
    std::vector<RC> q;
};

// templates on a 3 x 2 wall; w1 = (2,3), w2 = (2,4), w3 = (3,4) lie on brick (2,1)
const Template kTemplates[3] = {
    // w1, w2
    {{{1, 3}, {2, 3}, {2, 2}, {3, 2}, {3, 3}, {3, 4}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 5}, {4, 5}},
     {{2, 3}, {2, 4}}},
    // w2, w3
    {{{1, 5}, {2, 5}, {2, 4}, {2, 3}, {2, 2}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {4, 5}}, {{2, 4}, {3, 4}}},
    // w1, w3
    {{{1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, {{2, 3}, {2, 2}, {3, 2}, {3, 3}, {3, 4}}},
};

// the block's chain plus the grid points (in w) where its core starts and ends
struct BlockChain {
    CycleChain ch;
    RC start, end;
};

BlockChain block_chain(const Wall& w, int i) {
    int r0 = 3 * i - 2;
    Wall b = subwall(w, r0, r0 + 2, 1, 2);
    Cycle c = brick(b, 2, 1);
    int w1 = b.vertex(2, 3), w2 = b.vertex(2, 4), w3 = b.vertex(3, 4);
    auto pair = three_paths_witness(w.host, c, w2, w1, w3);
    if (!pair) throw InternalError("nonzero brick without a three-paths witness");
    int t = (*pair == std::make_pair(1, 2)) ? 0 : (*pair == std::make_pair(1, 3)) ? 1 : 2;
    const Template& tp = kTemplates[t];
    BlockChain out;
    out.ch.core = walk(b, tp.core);
    out.ch.Q.push_back(walk(b, tp.q));
    out.ch.P.push_back(subpath(out.ch.core, out.ch.Q[0].front(), out.ch.Q[0].back()));
    out.start = subwall_origin(r0, 1, 2, tp.core.front());
    out.end = subwall_origin(r0, 1, 2, tp.core.back());
    return out;
}

std::vector<RC> row_between(int row, int c1, int c2) {
    std::vector<RC> out;
    int d = c1 <= c2 ? 1 : -1;
    for (int c = c1;; c += d) {
        out.push_back({row, c});
        if (c == c2) break;
    }
    return out;
}

}  // namespace

CycleChain chain_from_odd_wall(const Wall& w0, int l) {
    if (l < 1) throw DomainError("chain length must be positive");
    if (w0.r < 3 * l || w0.s < 2) throw DomainError("wall too small for a chain of this length");
    auto fr = is_facially_odd(w0);
    if (!fr.odd) throw DomainError("wall is not facially odd");
    Wall w = subwall(w0, 1, 3 * l, 1, 2);
    CycleChain out;
    RC prev_end{0, 0};
    for (int i = 1; i <= l; i++) {
        BlockChain bc = block_chain(w, i);
        if (i == 1) {
            out.core = bc.ch.core;
        } else {
            Path join = walk(w, row_between(prev_end.first, prev_end.second, bc.start.second));
            out.core = concat(concat(out.core, join), bc.ch.core);
        }
        out.Q.push_back(bc.ch.Q[0]);
        out.P.push_back(bc.ch.P[0]);
        prev_end = bc.end;
    }
    if (auto why = validate_chain(w.host, out)) throw InternalError("wall chain invalid: " + *why);
    if (!is_nonzero(w.host, out)) throw InternalError("wall chain is not nonzero");
    return out;
}

std::vector<ClosedCycleChain> closed_chains_from_wall(const Wall& w, int k, int l) {
    if (k < 0) throw DomainError("k must be nonnegative");
    std::vector<ClosedCycleChain> out;
    if (k == 0) return out;
    if (l < 1) throw DomainError("chain length must be positive");
    if (w.r < 3 * l || w.s < 4 * k - 1) throw DomainError("wall too small for k closed chains");
    if (!is_facially_odd(w).odd) throw DomainError("wall is not facially odd");
    for (int m = 1; m <= k; m++) {
        Wall wm = subwall(w, 1, 3 * l, 4 * m - 3, 4 * m - 1);
        CycleChain ch = chain_from_odd_wall(wm, l);
        // core runs from row 1 to row 3l+1 inside the first two brick columns; close it through
        // the fourth vertical path of wm
        Wall inner = subwall(wm, 1, 3 * l, 1, 2);
        RC top = {1, 0}, bot = {3 * l + 1, 0};
        for (int c = 1; c <= inner.width(); c++) {
            if (inner.exists(1, c) && inner.vertex(1, c) == ch.core.front()) top.second = c;
            if (inner.exists(3 * l + 1, c) && inner.vertex(3 * l + 1, c) == ch.core.back()) bot.second = c;
        }
        if (!top.second || !bot.second) throw InternalError("chain core does not end on the boundary rows");
        auto vp = vertical_coords(wm, 4);
        std::vector<RC> pts = row_between(3 * l + 1, bot.second, vp.back().second);
        pts.pop_back();
        pts.insert(pts.end(), vp.rbegin(), vp.rend());
        auto head = row_between(1, vp.front().second, top.second);
        pts.insert(pts.end(), head.begin() + 1, head.end());
        Path closing = walk(wm, pts);
        out.push_back(close_chain(w.host, ch, closing));
    }
    return out;
}

// ---- prime-power rerouting ----

int64_t pigeonhole_length(int p, int a) {
    int64_t q = p - 1;
    for (int i = 0; i < 2 * a - 1; i++) q *= p;
    return q;
}

static int check_prime_power(const Group& g, int p, int a) {
    int aa = 0;
    if (g.rank() != 1 || !is_prime_power_of(g.mod[0], p, aa) || aa != a)
        throw DomainError("group must be Z/p^a");
    return g.mod[0];
}

PigeonholeResult pigeonhole_select(const LGraph& g, const ClosedCycleChain& ch, int p, int a) {
    check_prime_power(g.group, p, a);
    int64_t q = pigeonhole_length(p, a);
    if (ch.length() < q) throw DomainError("chain is shorter than p^(2a-1)(p-1)");
    auto inc = increments(g, ch);
    std::map<int, std::vector<int>> cls;
    for (int i = 0; i < (int)inc.size(); i++) {
        if (inc[i][0] % p == 0) throw DomainError("increment lies in <p>");
        cls[inc[i][0]].push_back(i);
    }
    int need = 1;
    for (int i = 0; i < a; i++) need *= p;
    for (auto& [val, idx] : cls)
        if ((int)idx.size() >= need) {
            PigeonholeResult r;
            r.I.assign(idx.begin(), idx.begin() + need);
            r.alpha = {val};
            return r;
        }
    throw InternalError("pigeonhole failed");
}

Cycle reroute_to_weight(const LGraph& g, const ClosedCycleChain& ch, const PigeonholeResult& sel,
                        const Elem& target) {
    check_elem(g.group, target);
    int m = g.group.mod.empty() ? 1 : g.group.mod[0];
    Elem need = sub(g.group, target, weight(g, ch.C));
    int j = -1;
    for (int t = 0; t < m && t <= (int)sel.I.size(); t++)
        if (mul(g.group, sel.alpha, t) == need) {
            j = t;
            break;
        }
    if (j < 0) throw InternalError("no subset of the selected links reaches the target");
    std::set<int> es(ch.C.edges.begin(), ch.C.edges.end());
    for (int t = 0; t < j; t++) {
        int i = sel.I[t];
        for (int e : ch.Csub[i].edges) es.erase(e);
        for (int e : ch.Q[i].edges) es.insert(e);
    }
    auto c = cycle_from_edges(g, {es.begin(), es.end()});
    if (!c) throw InternalError("rerouted edge set is not a cycle");
    if (weight(g, *c) != target) throw InternalError("rerouted cycle misses the target weight");
    return *c;
}

}  // namespace glab
