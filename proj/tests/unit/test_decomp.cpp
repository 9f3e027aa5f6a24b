#include <set>

#include "doctest.h"
#include "glab/decomp.hpp"
#include "glab/generators.hpp"
#include "oracles.hpp"

using namespace glab;

namespace {
LGraph complete(int n, const Group& g, const Elem& lab) {
    LGraph G(g);
    for (int v = 0; v < n; v++) G.add_vertex(v);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) G.add_edge(u, v, lab);
    return G;
}
}  // namespace

TEST_CASE("inseparability matches exhaustive separator search") {
    for (int seed = 0; seed < 60; seed++) {
        LGraph g = random_graph(6, 6 + seed % 10, cyclic(2), seed, false);
        auto M = inseparable_matrix(g);
        const auto& vs = g.vertices();
        for (int a = 0; a < g.n(); a++)
            for (int b = 0; b < g.n(); b++)
                if (a != b) CHECK((bool)M[a][b] == !oracle::separable(g, vs[a], vs[b]));
    }
}

TEST_CASE("3-blocks") {
    auto k4 = three_blocks(complete(4, cyclic(2), {0}));
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].verts == std::vector<int>{0, 1, 2, 3});
    CHECK(k4[0].bridges.size() == 6);  // each edge is a bridge of its own
    LGraph bow(cyclic(2));
    for (int v = 0; v < 5; v++) bow.add_vertex(v);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}) bow.add_edge(u, v);
    auto bb = three_blocks(bow);
    REQUIRE(bb.size() == 2);
    CHECK(bb[0].verts == std::vector<int>{0, 1, 2});
    CHECK(bb[1].verts == std::vector<int>{2, 3, 4});
    LGraph path(cyclic(2));
    for (int v = 0; v < 5; v++) path.add_vertex(v);
    for (int v = 0; v < 4; v++) path.add_edge(v, v + 1);
    CHECK(three_blocks(path).empty());
}

TEST_CASE("labelled 3-blocks") {
    Group z5 = cyclic(5);
    LGraph t(z5);
    for (int v = 0; v < 3; v++) t.add_vertex(v);
    t.add_edge(0, 1, {1});
    t.add_edge(1, 2, {2});
    t.add_edge(2, 0, {3});
    auto lb = labelled_three_block(t, three_blocks(t)[0]);
    CHECK(lb.virt.m() == 3);
    std::set<Elem> labels;
    for (auto& e : lb.virt.edges()) labels.insert(e.label);
    CHECK(labels == std::set<Elem>{{1}, {2}, {3}});
    // a subdivided parallel path u-x-v adds a virtual edge with the path weight
    t.add_vertex(3);
    t.add_edge(0, 3, {2});
    t.add_edge(3, 1, {2});
    // a pendant vertex attached at one vertex contributes nothing
    t.add_vertex(4);
    t.add_edge(2, 4, {1});
    auto blocks = three_blocks(t);
    REQUIRE(blocks.size() == 2);  // {0,1,3} is a triangle as well
    REQUIRE(blocks[0].verts == std::vector<int>{0, 1, 2});
    auto lb2 = labelled_three_block(t, blocks[0]);
    CHECK(lb2.virt.m() == 4);
    bool found = false;
    for (auto& e : lb2.virt.edges()) {
        Path real = lb2.realizer.at(e.id);
        CHECK(weight(t, real) == e.label);
        found = found || (e.label == Elem{4} && std::set<int>{e.u, e.v} == std::set<int>{0, 1});
    }
    CHECK(found);
}

TEST_CASE("shift_reduce certificates and witnesses") {
    CHECK(shift_reduce(complete(4, cyclic(2), {0})).cert.empty());
    for (int seed = 0; seed < 100; seed++) {
        LGraph base = random_graph(6, 10, cyclic(2), seed);
        LGraph g = random_bipartite_labelling(base, seed % 2 ? cyclic(4) : make_group({2, 2}), seed, 8);
        auto r = shift_reduce(g);
        REQUIRE(r.reduced);
        LGraph z = apply_certificate(g, r.cert);
        for (auto& e : z.edges()) CHECK(is_zero(e.label));
    }
    LGraph tri(cyclic(2));
    for (int v = 0; v < 3; v++) tri.add_vertex(v);
    tri.add_edge(0, 1, {1});
    tri.add_edge(1, 2, {0});
    tri.add_edge(2, 0, {0});
    auto r = shift_reduce(tri);
    CHECK_FALSE(r.reduced);
    CHECK(r.witness.length() == 3);
    CHECK(weight(tri, r.witness) == Elem{1});
}

TEST_CASE("gamma-bipartite decision") {
    LGraph forest(cyclic(3));
    for (int v = 0; v < 4; v++) forest.add_vertex(v);
    forest.add_edge(0, 1, {1});
    forest.add_edge(2, 3, {2});
    CHECK(is_gamma_bipartite(forest).bipartite);
    // every triangle has weight 0 but a 4-cycle does not
    LGraph k4 = complete(4, cyclic(3), {1});
    auto r = is_gamma_bipartite(k4);
    CHECK_FALSE(r.bipartite);
    REQUIRE(r.witness);
    CHECK(r.witness->length() == 4);
    CHECK(!is_zero(weight(k4, *r.witness)));
    for (auto& c : enumerate_cycles(k4))
        if (c.length() == 3) CHECK(is_zero(weight(k4, c)));
}

TEST_CASE("gamma-bipartite agrees with brute force") {
    const std::vector<Group> groups{cyclic(2), cyclic(3), cyclic(4)};
    for (int seed = 0; seed < 400; seed++) {
        const Group& G = groups[seed % 3];
        int n = 2 + seed % 6, m = seed % 11;
        LGraph g = seed % 4 == 0 ? random_bipartite_labelling(random_graph(n, m, G, seed), G, seed, 5)
                                 : random_graph(n, m, G, seed);
        auto r = is_gamma_bipartite(g);
        CHECK(r.bipartite == oracle::bipartite(g));
        if (!r.bipartite) {
            REQUIRE(r.witness);
            CHECK(is_cycle(g, *r.witness));
            CHECK(!is_zero(weight(g, *r.witness)));
        }
    }
}
