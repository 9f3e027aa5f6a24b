#include "doctest.h"
#include "glab/generators.hpp"
#include "glab/io.hpp"
#include "oracles.hpp"

using namespace glab;

TEST_CASE("projective grid") {
    LGraph g = projective_grid(3, cyclic(2), {1}, 3);
    CHECK(g.n() == 9);
    CHECK(g.m() == 15);
    int cross = 0;
    for (auto& e : g.edges()) cross += !is_zero(e.label);
    CHECK(cross == 3);
    CHECK(g.edge_between(0, 8) >= 0);  // (1,1)-(3,3)
    CHECK(g.edge_between(2, 6) >= 0);  // (1,3)-(3,1)
    CHECK_THROWS_AS(projective_grid(3, cyclic(3), {1}, 3), DomainError);
    CHECK_THROWS_AS(projective_grid(3, cyclic(2), {0}, 3), DomainError);
    for (int n : {3, 4}) {
        LGraph p = projective_grid(n, cyclic(2), {1}, n);
        for (auto& c : enumerate_cycles(p)) {
            int odd = 0;
            for (int e : c.edges) odd += !is_zero(p.edge(e).label);
            CHECK((odd % 2 == 1) == !is_zero(weight(p, c)));
        }
    }
}

TEST_CASE("DNL instances") {
    LGraph d = dnl_instance(3, 4, 2);
    CHECK(d.group == cyclic(4));
    CHECK_THROWS_AS(dnl_instance(3, 4, 0), DomainError);
    CHECK_THROWS_AS(dnl_instance(3, 4, 4), DomainError);
}

TEST_CASE("facially odd walls by seed") {
    for (int seed = 0; seed < 20; seed++) {
        Wall w = facially_odd_wall(3, 4, make_group({2, 3}), (uint64_t)seed);
        CHECK(is_facially_odd(w).odd);
        CHECK_FALSE(validate_wall(w));
    }
}

TEST_CASE("walls with linkages") {
    auto s = bipartite_wall_with_linkage(3, PairKind::series, {{1}, {1}}, cyclic(3));
    CHECK_FALSE(validate_wall_linkage(s.wall, s.linkage));
    CHECK(purity(s.linkage).kind == "series");
    auto c = bipartite_wall_with_linkage(3, PairKind::crossing, {{1}, {1}, {1}}, cyclic(3));
    CHECK(purity(c.linkage).kind == "crossing");
    auto n = bipartite_wall_with_linkage(3, PairKind::nested, {{1}, {2}}, cyclic(3), 4, 20);
    CHECK(purity(n.linkage).kind == "nested");
    for (bool b : is_gamma_odd_linkage(n.wall, n.linkage).odd) CHECK(b);
    CHECK_THROWS_AS(bipartite_wall_with_linkage(3, PairKind::nested, {{1}, {0}}, cyclic(3)), DomainError);
}

TEST_CASE("random bipartite labellings") {
    LGraph g = random_graph(6, 10, cyclic(4), 3);
    LGraph z = random_bipartite_labelling(g, cyclic(4), 3, 0);
    for (auto& e : z.edges()) CHECK(is_zero(e.label));
    for (int seed = 0; seed < 30; seed++) {
        LGraph b = random_bipartite_labelling(g, make_group({2, 4}), seed, 12);
        CHECK_FALSE(find_nonzero_cycle(b));
        CHECK(dump(to_json(b)) == dump(to_json(random_bipartite_labelling(g, make_group({2, 4}), seed, 12))));
    }
    Planted p = planted_nonzero(g, cyclic(4), 1, 5);
    CHECK(find_nonzero_cycle(p.g));
}

TEST_CASE("odd models") {
    std::vector<Elem> ones(15, Elem{1});
    KModel m = odd_model(6, cyclic(3), ones, 1, 0);
    CHECK(classify_model(m).verdict == ModelClass::gamma_odd);
    std::vector<Elem> zeros(6, Elem{0});
    CHECK_THROWS_AS(odd_model(4, cyclic(3), zeros, 2, 0, 3), DomainError);
    KModel a = odd_model(6, cyclic(5), std::nullopt, 4, 77), b = odd_model(6, cyclic(5), std::nullopt, 4, 77);
    CHECK(dump(to_json(a)) == dump(to_json(b)));
    CHECK_FALSE(validate_model(a));
}

TEST_CASE("determinism of generated JSON") {
    CHECK(dump(to_json(facially_odd_wall(3, 3, cyclic(5), 9ull))) ==
          dump(to_json(facially_odd_wall(3, 3, cyclic(5), 9ull))));
    CHECK(dump(to_json(ladder_closed_chain(3, 2, 54, 5).chain)) ==
          dump(to_json(ladder_closed_chain(3, 2, 54, 5).chain)));
}
