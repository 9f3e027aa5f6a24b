// One line per acceptance criterion. Tolerances and time limits are fixed here.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "glab/repro.hpp"
#include "oracles.hpp"

using namespace glab;

namespace {

std::string g_cli;  // path of the glab executable

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::vector<Group> groups_up_to_12() {
    std::vector<Group> out;
    for (int m = 2; m <= 12; m++) out.push_back(cyclic(m));
    for (auto mods : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {2, 6}, {3, 3}, {2, 2, 2}, {2, 2, 3}})
        out.push_back(make_group(mods));
    return out;
}

std::map<std::vector<int>, Elem> weights_by_edges(const LGraph& g) {
    std::map<std::vector<int>, Elem> out;
    for (auto& c : oracle::cycles_by_dfs(g)) out[c.edges] = c.weight;
    return out;
}

Outcome c1_shifting() {
    auto groups = groups_up_to_12();
    int pairs = 0, bad = 0;
    for (int seed = 0; pairs < 10000; seed++) {
        const Group& G = groups[seed % groups.size()];
        Rng rng(seed);
        LGraph g = random_graph(3 + rng.uniform(5), 2 + rng.uniform(9), G, seed);
        auto before = weights_by_edges(g);
        auto inv = involutions(G);
        LGraph h = g;
        int steps = 1 + rng.uniform(8);
        for (int i = 0; i < steps; i++) {
            int v = g.vertices()[rng.uniform(g.n())];
            Elem x = inv.empty() ? zero(G) : inv[rng.uniform((int)inv.size())];
            shift_in_place(h, v, x);
        }
        if (weights_by_edges(h) != before) bad++;
        // illegal shifts must be refused
        for (auto& x : elements(G))
            if (!twice_zero(G, x)) {
                bool refused = false;
                try {
                    shift(g, g.vertices()[0], x);
                } catch (const DomainError&) {
                    refused = true;
                }
                if (!refused) bad++;
                break;
            }
        pairs++;
    }
    return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " violations"};
}

Outcome c2_shift_reduce() {
    const std::vector<Group> inv_groups{cyclic(2), cyclic(4), make_group({2, 2}), cyclic(6), make_group({2, 6}),
                                        cyclic(8)};
    int ok_cert = 0, ok_wit = 0;
    for (int i = 0; i < 1000; i++) {
        const Group& G = inv_groups[i % inv_groups.size()];
        Rng rng(i);
        LGraph base = random_graph(4 + rng.uniform(7), 6 + rng.uniform(12), G, i);
        LGraph g = random_bipartite_labelling(base, G, i, 1 + rng.uniform(20));
        auto r = shift_reduce(g);
        if (!r.reduced) continue;
        LGraph z = apply_certificate(g, r.cert);
        bool zero = true;
        for (auto& e : z.edges()) zero = zero && is_zero(e.label);
        ok_cert += zero;
    }
    for (int i = 0; i < 1000; i++) {
        const Group& G = inv_groups[i % inv_groups.size()];
        Rng rng(5000 + i);
        int n = 4 + rng.uniform(7);
        LGraph base = random_graph(n, n + rng.uniform(10), G, 5000 + i);  // m >= n forces a cycle
        int shifts = rng.uniform(10);
        Planted p = planted_nonzero(base, G, 5000 + i, shifts);
        // labels must stay involutions: swap the planted offset for one
        Elem orig = random_bipartite_labelling(base, G, 5000 + i, shifts).edge(p.edge).label;
        if (!twice_zero(G, p.g.edge(p.edge).label)) {
            auto inv = involutions(G);
            p.g.set_label(p.edge, add(G, orig, inv[rng.uniform((int)inv.size())]));
        }
        auto r = shift_reduce(p.g);
        if (r.reduced) continue;
        Elem sum = zero(G);
        for (int e : r.witness.edges) sum = add(G, sum, p.g.edge(e).label);
        ok_wit += is_cycle(p.g, r.witness) && !is_zero(sum);
    }
    return {ok_cert == 1000 && ok_wit == 1000,
            "certificates " + std::to_string(ok_cert) + "/1000, witnesses " + std::to_string(ok_wit) + "/1000"};
}

Outcome c3_bipartite_oracle() {
    const std::vector<Group> groups{cyclic(2), cyclic(3), cyclic(4)};
    int agree = 0, total = 0, positives = 0;
    std::string first_bad;
    auto check = [&](const LGraph& g, const std::string& tag) {
        bool mine = is_gamma_bipartite(g).bipartite;
        bool ref = oracle::bipartite(g);
        total++;
        positives += ref;
        if (mine == ref) agree++;
        else if (first_bad.empty()) first_bad = tag;
    };
    for (int seed = 0; seed < 12000; seed++) {
        const Group& G = groups[seed % 3];
        Rng rng(seed);
        int n = 1 + rng.uniform(7), m = rng.uniform(13);
        LGraph g = random_graph(n, m, G, seed);
        switch (seed % 4) {
            case 0: break;
            case 1: g = random_bipartite_labelling(g, G, seed, rng.uniform(12)); break;
            case 2:
                // sparse nonzero labels
                for (auto& e : g.edges()) g.set_label(e.id, rng.uniform(3) ? zero(G) : e.label);
                break;
            default: {
                // bipartite core with arbitrary labels on bridges
                g = random_bipartite_labelling(g, G, seed, rng.uniform(12));
                std::set<int> in_cycle;
                for (auto& b : biconnected_blocks(g))
                    if (b.size() > 1) in_cycle.insert(b.begin(), b.end());
                for (auto& e : g.edges())
                    if (!e.loop() && !in_cycle.count(e.id)) g.set_label(e.id, rng.element(G));
            }
        }
        check(g, "seed " + std::to_string(seed));
    }
    // all-one K4 over Z/3: every triangle has weight 0, a 4-cycle does not
    LGraph k4(cyclic(3));
    for (int v = 0; v < 4; v++) k4.add_vertex(v);
    for (int u = 0; u < 4; u++)
        for (int v = u + 1; v < 4; v++) k4.add_edge(u, v, {1});
    bool k4_false = !is_gamma_bipartite(k4).bipartite;
    check(k4, "K4");
    std::string d = std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(positives) +
                    " bipartite), K4 over Z/3 -> " + (k4_false ? "false" : "true");
    if (!first_bad.empty()) d += ", first disagreement " + first_bad;
    return {agree == total && k4_false, d};
}

Outcome c4_counterexamples() {
    std::ostringstream os;
    bool ok = true;
    for (int n : {3, 4}) {
        EPReport r = ep_report(projective_grid(n, cyclic(2), {1}, n), FamilySpec::nonzero());
        ok = ok && r.nu == 1 && r.tau >= n;
        os << "grid" << n << " nu=" << r.nu << " tau=" << r.tau << "; ";
    }
    EPReport d = ep_report(dnl_instance(3, 4, 2), FamilySpec::weight({2}));
    ok = ok && d.nu == 1;
    os << "dnl(3,4,2) nu=" << d.nu;
    return {ok, os.str()};
}

Outcome c5_rerouting() {
    int chains = 0, good = 0;
    for (int p : {3, 5})
        for (int a : {1, 2})
            for (int i = 0; i < 200; i++) {
                chains++;
                int q = (int)pigeonhole_length(p, a);
                ChainInstance ci = ladder_closed_chain(p, a, q, 7919ull * i + 31 * p + a);
                try {
                    auto sel = pigeonhole_select(ci.g, ci.chain, p, a);
                    bool all = true;
                    for (auto& target : elements(ci.g.group)) {
                        Cycle c = reroute_to_weight(ci.g, ci.chain, sel, target);
                        Elem sum = zero(ci.g.group);
                        for (int e : c.edges) sum = add(ci.g.group, sum, ci.g.edge(e).label);
                        all = all && is_cycle(ci.g, c) && sum == target;
                    }
                    good += all;
                } catch (const std::exception&) {
                }
            }
    return {good == chains, std::to_string(good) + "/" + std::to_string(chains) + " chains reach every target"};
}

Outcome c6_wall_chains() {
    const std::vector<Group> groups{cyclic(3), cyclic(5), cyclic(2), cyclic(4), make_group({2, 3}), cyclic(7)};
    int good = 0;
    for (int i = 0; i < 100; i++) {
        int l = 1 + i % 3, k = 1 + (i / 3) % 2;
        const Group& G = groups[i % groups.size()];
        try {
            Wall w = facially_odd_wall(3 * l, 4 * k - 1, G, 1000ull + i);
            CycleChain ch = chain_from_odd_wall(w, l);
            bool ok = ch.length() == l && !validate_chain(w.host, ch) && is_nonzero(w.host, ch) &&
                      boundary_hits(w, l, glab::chain_cycles(ch)).empty();
            auto closed = closed_chains_from_wall(w, k, l);
            ok = ok && (int)closed.size() == k;
            std::set<int> seen;
            for (auto& c : closed) {
                ok = ok && c.length() == l && !validate_chain(w.host, c) && is_nonzero(w.host, c) &&
                     boundary_hits(w, l, chain_cycles(c)).empty();
                for (int v : chain_vertices(c)) ok = ok && seen.insert(v).second;
            }
            good += ok;
        } catch (const std::exception&) {
        }
    }
    return {good == 100, std::to_string(good) + "/100 walls"};
}

Outcome c7_pure() {
    int good = 0, agree = 0;
    for (int i = 0; i < 500; i++) {
        int t = i % 2 ? 3 : 2;
        auto li = random_linkage(t * t * t, 424242ull + i);
        auto ends = endpoint_positions(li.linkage);
        bool feasible = oracle::max_pure(ends) >= t;
        bool got = false;
        try {
            Linkage P = extract_pure(li.linkage, t);
            auto pe = endpoint_positions(P);
            bool pure = true;
            for (size_t a = 0; a < pe.size(); a++)
                for (size_t b = a + 1; b < pe.size(); b++)
                    pure = pure && oracle::pair_kind(pe[a], pe[b]) == oracle::pair_kind(pe[0], pe[1]);
            got = (int)P.size() >= t && pure && purity(P).kind != "impure";
        } catch (const std::exception&) {
        }
        good += got;
        agree += got == feasible;
    }
    return {good == 500 && agree == 500,
            std::to_string(good) + "/500 pure of size >= t, oracle agreement " + std::to_string(agree) + "/500"};
}

Outcome c8_packings() {
    const std::vector<Group> groups{cyclic(3), cyclic(5), cyclic(2), cyclic(4), cyclic(7), make_group({2, 2})};
    const std::vector<PairKind> kinds{PairKind::series, PairKind::nested, PairKind::crossing};
    int good = 0, total = 0, half_z2 = 0;
    for (int i = 0; i < 200; i++) {
        const Group& G = groups[i % groups.size()];
        PairKind kind = kinds[(i / groups.size()) % 3];
        int k = 1 + i % 3;
        total++;
        try {
            Rng rng(900 + i);
            std::vector<Elem> ws;
            for (int j = 0; j < 3 * k; j++) ws.push_back(rng.nonzero_element(G));
            auto wl = bipartite_wall_with_linkage(std::max(2, 2 * k), kind, ws, G, 900 + i, 30);
            const LGraph& h = wl.wall.host;
            bool ok = true;
            if (kind != PairKind::crossing || !has_involution(G)) {
                auto cs = packing_from_linkage(wl.wall, wl.linkage, k, PackMode::integral);
                std::set<int> seen;
                ok = ok && (int)cs.size() == k;
                for (auto& c : cs) {
                    ok = ok && is_cycle(h, c) && !is_zero(weight(h, c));
                    for (int v : c.verts) ok = ok && seen.insert(v).second;
                }
            }
            if (kind == PairKind::crossing) {
                auto cs = packing_from_linkage(wl.wall, wl.linkage, k, PackMode::half_integral);
                std::map<int, int> mult;
                ok = ok && (int)cs.size() == 2 * k;
                for (auto& c : cs) {
                    ok = ok && is_cycle(h, c) && !is_zero(weight(h, c));
                    for (int v : c.verts) ok = ok && ++mult[v] <= 2;
                }
                half_z2 += ok && G == cyclic(2);
            }
            good += ok;
        } catch (const std::exception&) {
        }
    }
    return {good == total && half_z2 > 0, std::to_string(good) + "/" + std::to_string(total) + " inputs (" +
                                              std::to_string(half_z2) + " half-integral over Z/2)"};
}

Outcome c9_centrality() {
    int models = 0, checks = 0, bad = 0, path_cases = 0, bip_models = 0;
    for (int seed = 0; seed < 300; seed++) {
        int t = 4 + seed % 5;
        KModel m = random_model(t, cyclic(2), 6, 31337ull + seed, false);
        models++;
        for (int i = 0; i < t; i++) {
            LGraph tg = tree_graph(m, i);
            for (int d = 0; d <= t; d++) {
                auto got = d_central_vertices(m, i, d);
                std::sort(got.begin(), got.end());
                checks++;
                if (got != oracle::central_vertices(m, i, d)) bad++;
                if (!got.empty() && components(induced_subgraph(tg, got)).size() != 1) bad++;
                if (d >= 1 && 2 * d < t - 1) {
                    bool branching = false;
                    for (int u : m.tree_verts[i]) branching = branching || is_d_branching(m, i, u, d);
                    if (!branching) {
                        path_cases++;
                        LGraph s = induced_subgraph(tg, got);
                        for (int v : got)
                            if (s.degree(v) > 2) bad++;
                    }
                }
            }
        }
    }
    for (int seed = 0; seed < 600 && bip_models < 60; seed++) {
        int t = 4 + seed % 3;
        const Group G = seed % 2 ? cyclic(2) : cyclic(4);
        KModel m = random_model(t, G, 3, 777ull + seed, seed % 3 == 0);
        if (seed % 3 != 0) {
            m.host = random_bipartite_labelling(m.host, G, seed, 8);
            Rng rng(seed);
            for (int i = 0; i < t; i++)
                for (int e : m.tree_edges[i]) {
                    const Edge& ed = m.host.edge(e);
                    if (m.host.degree(ed.u) == 1 || m.host.degree(ed.v) == 1) m.host.set_label(e, rng.element(G));
                }
        }
        if (classify_model(m).verdict != ModelClass::gamma_bipartite) continue;
        bip_models++;
        std::vector<int> all(t);
        for (int i = 0; i < t; i++) all[i] = i;
        if (!oracle::bipartite(model_subgraph(m, all))) bad++;
    }
    std::ostringstream os;
    os << models << " models, " << checks << " (tree,d) checks, " << path_cases << " no-branching cases, "
       << bip_models << " bipartite models, " << bad << " violations";
    return {bad == 0 && path_cases > 0 && bip_models >= 30, os.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome c10_determinism() {
    bool ok = true;
    for (auto& name : suite_names()) {
        std::string a = dump(to_json(run_suite(name, 11))), b = dump(to_json(run_suite(name, 11)));
        ok = ok && a == b;
    }
    std::string detail = std::string("in-process ") + (ok ? "identical" : "DIFFERENT");
    if (g_cli.empty()) return {false, detail + "; CLI path not given"};
    std::string f1 = "acceptance_repro_1.json", f2 = "acceptance_repro_2.json";
    int r1 = std::system((g_cli + " repro all --seed 5 --out " + f1 + " 2>/dev/null").c_str());
    int r2 = std::system((g_cli + " repro all --seed 5 --out " + f2 + " 2>/dev/null").c_str());
    std::string s1 = slurp(f1), s2 = slurp(f2);
    bool same = r1 == 0 && r2 == 0 && !s1.empty() && s1 == s2;
    std::remove(f1.c_str());
    std::remove(f2.c_str());
    return {ok && same, detail + "; CLI bundles " + (same ? "byte-identical" : "DIFFERENT") + " (" +
                            std::to_string(s1.size()) + " bytes)"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> cs{
        {1, "shifting preserves cycle weights", 60, c1_shifting},
        {2, "shift_reduce certificates and witnesses", 120, c2_shift_reduce},
        {3, "bipartiteness agrees with brute force", 600, c3_bipartite_oracle},
        {4, "projective grid and DNL counterexamples", 300, c4_counterexamples},
        {5, "prime-power rerouting hits every weight", 120, c5_rerouting},
        {6, "chains and closed chains in facially odd walls", 120, c6_wall_chains},
        {7, "pure sub-linkage extraction", 120, c7_pure},
        {8, "packings from odd linkages", 120, c8_packings},
        {9, "central vertices and bipartite models", 300, c9_centrality},
        {10, "repro bundles are deterministic", 300, c10_determinism},
    };
    int failed = 0;
    for (auto& c : cs) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.ok && secs <= c.limit_s;
        failed += !pass;
        std::printf("%s criterion %d: %s | %s | %.2fs (limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.limit_s);
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
