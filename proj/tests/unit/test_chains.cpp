#include <set>

#include "doctest.h"
#include "glab/generators.hpp"
#include "glab/repro.hpp"

using namespace glab;

TEST_CASE("chain validation") {
    LGraph g(cyclic(3));
    for (int v = 0; v < 6; v++) g.add_vertex(v);
    std::vector<int> core;
    for (int v = 0; v < 3; v++) core.push_back(g.add_edge(v, v + 1));
    CycleChain bare{Path{{0, 1, 2, 3}, core}, {}, {}};
    CHECK_FALSE(validate_chain(g, bare));
    CHECK(is_nonzero(g, bare));
    int a = g.add_edge(0, 4, {1}), b = g.add_edge(4, 1, {0});
    CycleChain one = bare;
    one.Q.push_back({{0, 4, 1}, {a, b}});
    one.P.push_back({{0, 1}, {core[0]}});
    CHECK_FALSE(validate_chain(g, one));
    CHECK(is_nonzero(g, one));
    g.set_label(a, {0});
    CHECK_FALSE(is_nonzero(g, one));
    int c = g.add_edge(2, 4, {0}), d = g.add_edge(4, 3, {0});
    CycleChain two = one;
    two.Q.push_back({{2, 4, 3}, {c, d}});
    two.P.push_back({{2, 3}, {core[2]}});
    CHECK(validate_chain(g, two));
}

TEST_CASE("chains in facially odd walls") {
    Wall w = facially_odd_wall(3, 2, cyclic(3), std::vector<Elem>(6, Elem{1}));
    CycleChain ch = chain_from_odd_wall(w, 1);
    REQUIRE(ch.length() == 1);
    CHECK(sorted_edges(chain_cycles(ch)[0]) == sorted_edges(brick(w, 2, 1)));
    for (int seed = 0; seed < 60; seed++) {
        int l = 1 + seed % 3;
        Group g = seed % 2 ? cyclic(5) : make_group({2, 3});
        Wall x = facially_odd_wall(3 * l, 2, g, (uint64_t)seed);
        CycleChain c = chain_from_odd_wall(x, l);
        CHECK(c.length() == l);
        CHECK_FALSE(validate_chain(x.host, c));
        CHECK(is_nonzero(x.host, c));
        CHECK(boundary_hits(x, l, chain_cycles(c)).empty());
        CHECK(x.rc(c.core.front()).first == 1);
        CHECK(x.rc(c.core.back()).first == 3 * l + 1);
        // each cycle is a brick of the middle row of its block
        auto cyc = chain_cycles(c);
        for (int i = 0; i < l; i++) {
            auto es = sorted_edges(cyc[i]);
            bool brick_match = es == sorted_edges(brick(x, 3 * i + 2, 1)) || es == sorted_edges(brick(x, 3 * i + 2, 2));
            CHECK(brick_match);
        }
    }
    Wall zero = elementary_wall(3, 2, cyclic(3));
    CHECK_THROWS_AS(chain_from_odd_wall(zero, 1), DomainError);
}

TEST_CASE("closed chains in facially odd walls") {
    Wall w = facially_odd_wall(3, 3, cyclic(3), 2ull);
    CHECK(closed_chains_from_wall(w, 1, 1).size() == 1);
    CHECK(closed_chains_from_wall(w, 0, 1).empty());
    Wall w7 = facially_odd_wall(3, 7, cyclic(5), 3ull);
    auto cc = closed_chains_from_wall(w7, 2, 1);
    REQUIRE(cc.size() == 2);
    std::set<int> seen;
    for (auto& c : cc) {
        CHECK_FALSE(validate_chain(w7.host, c));
        CHECK(is_nonzero(w7.host, c));
        for (int v : chain_vertices(c)) CHECK(seen.insert(v).second);
    }
}

TEST_CASE("pigeonhole selection") {
    CHECK(pigeonhole_length(3, 1) == 6);
    CHECK(pigeonhole_length(3, 2) == 54);
    // all increments 1: first p^a links
    ChainInstance ci = ladder_closed_chain(3, 1, 6, 1);
    for (int i = 0; i < 6; i++) {
        const Path& q = ci.chain.Q[i];
        Elem want = add(ci.g.group, weight(ci.g, ci.chain.Csub[i]), {1});
        ci.g.set_label(q.edges[1], sub(ci.g.group, want, ci.g.edge(q.edges[0]).label));
    }
    auto sel = pigeonhole_select(ci.g, ci.chain, 3, 1);
    CHECK(sel.I == std::vector<int>{0, 1, 2});
    CHECK(sel.alpha == Elem{1});
    for (int seed = 0; seed < 40; seed++) {
        int p = seed % 2 ? 3 : 5, a = 1 + seed % 3 / 2;
        auto x = ladder_closed_chain(p, a, (int)pigeonhole_length(p, a), seed);
        auto s = pigeonhole_select(x.g, x.chain, p, a);
        auto inc = increments(x.g, x.chain);
        int pa = x.g.group.mod[0];
        CHECK((int)s.I.size() == pa);
        for (int i : s.I) CHECK(inc[i] == s.alpha);
        CHECK(s.alpha[0] % p != 0);
    }
    auto shortc = ladder_closed_chain(3, 1, 5, 1);
    CHECK_THROWS_AS(pigeonhole_select(shortc.g, shortc.chain, 3, 1), DomainError);
}

TEST_CASE("rerouting reaches every weight") {
    for (int p : {3, 5})
        for (int a : {1, 2})
            for (int seed = 0; seed < 4; seed++) {
                auto x = ladder_closed_chain(p, a, (int)pigeonhole_length(p, a), 100 + seed);
                auto s = pigeonhole_select(x.g, x.chain, p, a);
                Elem base = weight(x.g, x.chain.C);
                Cycle same = reroute_to_weight(x.g, x.chain, s, base);
                CHECK(sorted_edges(same) == sorted_edges(x.chain.C));
                for (auto& target : elements(x.g.group)) {
                    Cycle c = reroute_to_weight(x.g, x.chain, s, target);
                    CHECK(is_cycle(x.g, c));
                    Elem sum = zero(x.g.group);
                    for (int e : c.edges) sum = add(x.g.group, sum, x.g.edge(e).label);
                    CHECK(sum == target);
                }
            }
}
